#include <doctest.h>

#include <random>
#include <sstream>

#include "oracle.hpp"
#include "sde/exact.hpp"

using oracle::R;
using sde::Rational;

TEST_CASE("rational literals parse strictly") {
  CHECK(R("3").str() == "3");
  CHECK(R("-1/2").str() == "-1/2");
  CHECK(R("6/4").str() == "3/2");
  CHECK(R("-0").str() == "0");
  CHECK(R("0/5").is_zero());
  CHECK(R("12345678901234567890/3").str() == "4115226300411522630");

  for (const char* bad : {"", "-", "+1", " 1", "1 ", "1/", "/2", "1/0", "1.5", "1/-2", "--1",
                          "1/2/3", "0x10"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), sde::ParseError);
  }
}

TEST_CASE("parse error names the offending token") {
  try {
    Rational::parse("7/0");
    FAIL("no throw");
  } catch (const sde::ParseError& e) {
    CHECK(e.token() == "7/0");
    CHECK(std::string(e.what()).find("7/0") != std::string::npos);
  }
}

TEST_CASE("values are stored reduced with a positive denominator") {
  const Rational q(6, -4);
  CHECK(q.numerator_str() == "-3");
  CHECK(q.denominator_str() == "2");
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), sde::DivisionByZero);
  CHECK_THROWS_AS(Rational(0).reciprocal(), sde::DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), sde::DivisionByZero);
}

TEST_CASE("normalization is idempotent") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const long n = static_cast<long>(rng() % 2001) - 1000;
    const long d = static_cast<long>(rng() % 999) + 1;
    const Rational q(n, d);
    CHECK(Rational::parse(q.str()) == q);
    CHECK(Rational(q.raw()).str() == q.str());
  }
}

TEST_CASE("arithmetic and pow") {
  CHECK(R("1/2") + R("1/3") == R("5/6"));
  CHECK(R("1/2") - R("1/3") == R("1/6"));
  CHECK(R("2/3") * R("9/4") == R("3/2"));
  CHECK(R("2/3") / R("4/9") == R("3/2"));
  CHECK(-R("2/3") == R("-2/3"));
  CHECK(sde::pow(R("-2/3"), 3) == R("-8/27"));
  CHECK(sde::pow(R("-2/3"), -2) == R("9/4"));
  CHECK(sde::pow(R("5"), 0) == 1);
  CHECK(sde::pow(R("0"), 0) == 1);
  CHECK_THROWS_AS(sde::pow(R("0"), -1), sde::DivisionByZero);
  CHECK(sde::neg_one_pow(0) == 1);
  CHECK(sde::neg_one_pow(3) == -1);
  CHECK(sde::neg_one_pow(-3) == -1);
  std::ostringstream os;
  os << R("-7/3");
  CHECK(os.str() == "-7/3");
}

TEST_CASE("geometric_sum examples") {
  CHECK(sde::geometric_sum(2, 2) == 7);
  CHECK(sde::geometric_sum(1, 3) == 4);
  CHECK(sde::geometric_sum(R("5/7"), -1) == 0);
  CHECK(sde::geometric_sum(R("5/7"), -4) == 0);
  CHECK(sde::geometric_sum(0, 0) == 1);
  CHECK(sde::geometric_sum(0, 5) == 1);
}

TEST_CASE("geometric_sum matches term-by-term summation and the closed identity") {
  for (const char* qs : {"2", "-1", "1/2", "-3/4", "7/5", "0", "1", "-9"}) {
    const Rational q = R(qs);
    for (long m = -1; m <= 12; ++m) {
      CAPTURE(qs);
      CAPTURE(m);
      CHECK(sde::geometric_sum(q, m) == R(oracle::term_sum(oracle::Q(q), m)));
      if (!q.is_one()) CHECK(sde::geometric_sum(q, m) * (q - 1) == sde::pow(q, m + 1) - 1);
    }
  }
}

TEST_CASE("parity selectors") {
  auto check = [](unsigned long r, int al, int be, int ga, int la) {
    const auto s = sde::parity_selectors(r);
    CHECK(s.alpha == al);
    CHECK(s.beta == be);
    CHECK(s.gamma == ga);
    CHECK(s.lambda == la);
  };
  check(0, 1, 0, 0, 1);
  check(1, 0, 1, 1, 0);
  check(7, 0, 1, 1, 0);
  for (unsigned long r = 0; r < 20; ++r) {
    const auto s = sde::parity_selectors(r);
    CHECK(s.alpha + s.beta == 1);
    CHECK(s.gamma + s.lambda == 1);
    CHECK((s.alpha * s.beta).is_zero());
    CHECK((s.gamma * s.lambda).is_zero());
  }
}
