#pragma once

// Exact rational scalars and the small algebraic helpers every closed form
// is built from.

#include <compare>
#include <concepts>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sde {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string token, const std::string& why)
      : std::invalid_argument("cannot parse '" + token + "': " + why),
        token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  template <std::signed_integral I>
  Rational(I v) : q_(static_cast<long>(v)) {}  // NOLINT(implicit)
  Rational(long num, long den);
  explicit Rational(mpq_class q);

  /// Grammar: optional '-', decimal digits, optionally '/' and decimal
  /// digits with a nonzero denominator. No whitespace, no '+'.
  static Rational parse(std::string_view text);

  /// "p" when the denominator is 1, "p/q" otherwise.
  std::string str() const;

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  Rational reciprocal() const;
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational l, const Rational& r) { return l += r; }
  friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
  friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
  friend Rational operator/(Rational l, const Rational& r) { return l /= r; }

  friend bool operator==(const Rational& l, const Rational& r) {
    return l.q_ == r.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
    const int c = cmp(l.q_, r.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }
  std::string numerator_str() const { return q_.get_num().get_str(); }
  std::string denominator_str() const { return q_.get_den().get_str(); }
  /// Total size of numerator and denominator in bits.
  std::size_t bit_size() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// q^e for any signed e; q = 0 with e < 0 throws DivisionByZero.
Rational pow(const Rational& q, long e);

/// (-1)^n as +1/-1, for any signed n.
inline int neg_one_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

/// sum_{i=0}^{m} q^i, with the empty sum (m < 0) equal to 0.
Rational geometric_sum(const Rational& q, long m);

struct ParitySelectors {
  Rational alpha, beta, gamma, lambda;
};

/// alpha = lambda = 1 on even r, beta = gamma = 1 on odd r.
ParitySelectors parity_selectors(unsigned long r);

}  // namespace sde
