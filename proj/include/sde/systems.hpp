#pragma once

// Forward iteration of the two shifted rational systems
//
//   A:  u(n+2) = u(n) / (a + u(n) v(n+1)),     v(n+2) = v(n) / (b + v(n) u(n+1))
//   B:  x(n+3) = x(n) y(n+1) / (y(n+2) (a + b x(n) y(n+1))),
//       y(n+3) = y(n) x(n+1) / (x(n+2) (c + d y(n) x(n+1)))
//
// with singularity detection, plus the index relabeling back to the
// unshifted systems.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sde/exact.hpp"

namespace sde {

enum class SystemKind { A, B };

struct SystemAParams {
  Rational a, b;
};

struct SystemBParams {
  Rational a, b, c, d;
};

struct SystemAInitial {
  Rational u0, u1, v0, v1;
};

struct SystemBInitial {
  Rational x0, x1, x2, y0, y1, y2;
};

enum class Component { First, Second };

struct Singularity {
  long step = 0;  // index label of the value that could not be computed
  Component component = Component::First;
  std::string denominator_expression;
};

/// Exact solution sequences. Entry i of `first`/`second` carries index label
/// `origin + i`. A singular trajectory holds every entry with label below
/// `singular->step`.
struct Trajectory {
  SystemKind system = SystemKind::A;
  std::array<std::string, 2> labels{"u", "v"};
  long origin = 0;
  std::vector<Rational> first;
  std::vector<Rational> second;
  std::optional<Singularity> singular;

  std::size_t size() const { return first.size(); }
  bool is_singular() const { return singular.has_value(); }
  /// Lookup by index label; throws std::out_of_range.
  const Rational& first_at(long label) const;
  const Rational& second_at(long label) const;

  friend bool operator==(const Trajectory&, const Trajectory&);
};

bool operator==(const Singularity&, const Singularity&);

/// Requires N >= 1. Returns entries 0..N, or stops at the first zero
/// denominator.
Trajectory iterate_a(const SystemAParams& p, const SystemAInitial& ics, long N);

/// Requires N >= 2 and all six initial values nonzero (InvalidInput
/// otherwise): the recurrence divides by x(n+2) and y(n+2).
Trajectory iterate_b(const SystemBParams& p, const SystemBInitial& ics, long N);

/// Relabel to the unshifted system: offset 1 maps u(n) to x(n-1) (System A),
/// offset 2 maps x̂(n) to x(n-2) (System B). Values are unchanged.
Trajectory shift_back(Trajectory t, int offset);

const char* to_string(SystemKind s);
const char* to_string(Component c);

}  // namespace sde
