#include "sde/exact.hpp"

#include <algorithm>
#include <ostream>

namespace sde {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string token(text);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num)) throw ParseError(token, "expected decimal digits");
  if (!all_digits(den)) throw ParseError(token, "expected decimal digits after '/'");

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError(token, "zero denominator");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZero("reciprocal of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  q_ /= o.q_;
  return *this;
}

std::size_t Rational::bit_size() const {
  return mpz_sizeinbase(q_.get_num_mpz_t(), 2) + mpz_sizeinbase(q_.get_den_mpz_t(), 2);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational pow(const Rational& q, long e) {
  if (e < 0) return pow(q.reciprocal(), -e);
  const auto k = static_cast<unsigned long>(e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.raw().get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), q.raw().get_den_mpz_t(), k);
  // Powers of a reduced fraction stay reduced; the constructor re-canonicalizes anyway.
  return Rational(mpq_class(num, den));
}

Rational geometric_sum(const Rational& q, long m) {
  if (m < 0) return Rational{};
  if (q.is_one()) return Rational(m + 1);
  return (pow(q, m + 1) - 1) / (q - 1);
}

ParitySelectors parity_selectors(unsigned long r) {
  const bool even = r % 2 == 0;
  return even ? ParitySelectors{1, 0, 0, 1} : ParitySelectors{0, 1, 1, 0};
}

}  // namespace sde
