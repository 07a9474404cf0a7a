#pragma once

// Internal helpers shared by the closed-form translation units.

#include <string>

#include "sde/errors.hpp"
#include "sde/closed_form.hpp"
#include "sde/exact.hpp"

namespace sde::detail {

template <class F>
Rational product(long count, F&& factor) {
  Rational p(1);
  for (long r = 0; r < count; ++r) p *= factor(r);
  return p;
}

// A regular solution with nonzero initial values never takes the value 0, so
// a zero component or a zero divisor both mean the input is forbidden up to n.
template <class F>
Point guarded_point(const char* what, long n, F&& eval) {
  Point pt;
  try {
    pt = eval();
  } catch (const DivisionByZero&) {
    throw ForbiddenInput(std::string(what) + " divisor", n);
  }
  if (pt.first.is_zero() || pt.second.is_zero())
    throw ForbiddenInput(std::string(what) + " vanishing factor", n);
  return pt;
}

inline void require_nonzero(const Rational& q, const char* name, long index) {
  if (q.is_zero()) throw ForbiddenInput(name, index);
}

}  // namespace sde::detail
