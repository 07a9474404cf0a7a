#pragma once

// Forbidden initial conditions: the restrictions under which the closed
// forms are defined, and the step at which iteration would break down.
//
// Each restriction family says one auxiliary term S(k) or T(k), written out
// in the initial values, is nonzero. It is evaluated here multiplied through
// by its seed, which stays meaningful when a or b (a, c for B) vanish. A
// vanishing S(k) or T(k) surfaces in iteration at step k + 1:
//   A: S(k) -> first component,  T(k) -> second
//   B: S(k) -> second component, T(k) -> first

#include <optional>
#include <string>
#include <vector>

#include "sde/exact.hpp"
#include "sde/systems.hpp"

namespace sde {

struct Violation {
  std::string restriction_id;  // e.g. "T(2r)" or, for a zero product, "x0*y1"
  long r = 0;
  std::optional<long> step;  // iteration step where the zero surfaces
  Component component = Component::First;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ForbiddenReport {
  std::vector<Violation> violated;
  /// Zero seed products (closed forms undefined); for System A iteration may
  /// still be regular.
  std::vector<std::string> inadmissible;
  std::optional<long> predicted_singular_step;
  std::optional<Component> predicted_component;

  bool clean() const { return violated.empty() && inadmissible.empty(); }
};

/// Families S(2r+1), T(2r+1), S(2r), T(2r) for 0 <= r <= horizon. A zero
/// u0*v1 (or v0*u1) drops the families seeded by it; the singular step is
/// then predicted from the degenerate orbit directly.
ForbiddenReport check_forbidden_a(const SystemAParams& p, const SystemAInitial& ics,
                                  long horizon);
/// Families S(4r), T(4r), S(4r+1), ..., T(4r+3) for 0 <= r <= horizon, plus
/// the four seed products x0*y1, x1*y2, y0*x1, y1*x2.
ForbiddenReport check_forbidden_b(const SystemBParams& p, const SystemBInitial& ics,
                                  long horizon);

enum class VerdictKind { AgreeRegular, AgreeSingular, Mismatch, Inadmissible };

struct Verdict {
  VerdictKind kind = VerdictKind::AgreeRegular;
  std::optional<long> step;
  std::string details;  // reproduction data for a mismatch
};

/// Prediction of check_forbidden against iterate over steps <= N.
/// System B with a zero initial value yields Inadmissible.
Verdict predict_vs_observe_a(const SystemAParams& p, const SystemAInitial& ics, long N);
Verdict predict_vs_observe_b(const SystemBParams& p, const SystemBInitial& ics, long N);

const char* to_string(VerdictKind v);

}  // namespace sde
