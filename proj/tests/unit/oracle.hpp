#pragma once

// Independent reference computations for the tests. Plain mpq_class code
// with no dependency on the library beyond converting results to Rational.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sde/exact.hpp"

namespace oracle {

inline sde::Rational R(const char* s) { return sde::Rational::parse(s); }
inline sde::Rational R(const mpq_class& q) { return sde::Rational(q); }
inline mpq_class Q(const sde::Rational& r) { return r.raw(); }

struct Run {
  std::vector<mpq_class> f, s;
  std::optional<long> singular_step;
  bool singular_first = false;
};

// u(n+2) = u(n)/(a + u(n) v(n+1)), v(n+2) = v(n)/(b + v(n) u(n+1))
inline Run iterate_a(mpq_class a, mpq_class b, mpq_class u0, mpq_class u1, mpq_class v0,
                     mpq_class v1, long N) {
  Run r{{u0, u1}, {v0, v1}, std::nullopt, false};
  for (long n = 0; n + 2 <= N; ++n) {
    mpq_class du = a + r.f[n] * r.s[n + 1];
    mpq_class dv = b + r.s[n] * r.f[n + 1];
    if (du == 0 || dv == 0) {
      r.singular_step = n + 2;
      r.singular_first = du == 0;
      break;
    }
    r.f.push_back(r.f[n] / du);
    r.s.push_back(r.s[n] / dv);
  }
  return r;
}

// x(n+3) = x(n) y(n+1) / (y(n+2)(a + b x(n) y(n+1))), y analogous with c, d
inline Run iterate_b(mpq_class a, mpq_class b, mpq_class c, mpq_class d,
                     std::vector<mpq_class> x, std::vector<mpq_class> y, long N) {
  Run r{x, y, std::nullopt, false};
  for (long n = 0; n + 3 <= N; ++n) {
    mpq_class dx = r.s[n + 2] * (a + b * r.f[n] * r.s[n + 1]);
    mpq_class dy = r.f[n + 2] * (c + d * r.s[n] * r.f[n + 1]);
    if (dx == 0 || dy == 0) {
      r.singular_step = n + 3;
      r.singular_first = dx == 0;
      break;
    }
    r.f.push_back(r.f[n] * r.s[n + 1] / dx);
    r.s.push_back(r.s[n] * r.f[n + 1] / dy);
  }
  return r;
}

inline mpq_class term_sum(const mpq_class& q, long m) {
  mpq_class s = 0, p = 1;
  for (long i = 0; i <= m; ++i) {
    s += p;
    p *= q;
  }
  return s;
}

inline std::vector<sde::Rational> to_rationals(const std::vector<mpq_class>& v) {
  std::vector<sde::Rational> out;
  for (const auto& q : v) out.push_back(sde::Rational(q));
  return out;
}

}  // namespace oracle
