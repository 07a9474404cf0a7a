#pragma once

// Lie point symmetries of systems A and B, checked by exact evaluation.
//
// Characteristics (both systems, with (u, v) read as (x, y) for B):
//   Q1 = (C2 (-1)^n - C1) u(n),   Q2 = (C1 + C2 (-1)^n) v(n)
// The linearized symmetry condition S^N Q_i - X ω_i = 0 is evaluated at a
// point; X ω_i is computed exactly by forward-mode differentiation over the
// rationals, so no derivative is written out by hand.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "sde/exact.hpp"
#include "sde/systems.hpp"

namespace sde {

struct Characteristic {
  Rational c1, c2;
};

/// How the characteristic is turned into Q1, Q2. Only Alternating is a symmetry;
/// the other two are negative controls.
enum class CharacteristicForm {
  Alternating,  // the characteristic above
  IgnoreParity,   // (-1)^n replaced by 1
  SwapVariables,  // Q1 weighted by v(n), Q2 by u(n)
};

struct PointA {
  Rational u_n, u_n1, v_n, v_n1;
};

struct PointB {
  Rational x_n, x_n1, x_n2, y_n, y_n1, y_n2;
};

/// Residuals (r1, r2). DivisionByZero when a + u(n) v(n+1) or
/// b + v(n) u(n+1) vanishes.
std::pair<Rational, Rational> slsc_residual_a(const Characteristic& ch, const SystemAParams& p,
                                              long n_parity, const PointA& pt,
                                              CharacteristicForm form = CharacteristicForm::Alternating);
/// DivisionByZero when a denominator of the system vanishes at the point.
std::pair<Rational, Rational> slsc_residual_b(const Characteristic& ch, const SystemBParams& p,
                                              long n_parity, const PointB& pt,
                                              CharacteristicForm form = CharacteristicForm::Alternating);

enum class InvariantKind { W, Z };

/// X applied to w(n) = v(n) u(n+1) or z(n) = u(n) v(n+1).
Rational invariant_annihilation(const Characteristic& ch, InvariantKind which, long n_parity,
                                const PointA& pt);
/// X applied to w(n) = x(n) y(n+1) or z(n) = y(n) x(n+1).
Rational invariant_annihilation(const Characteristic& ch, InvariantKind which, long n_parity,
                                const PointB& pt);

enum class Generator { X1, X2 };

/// Finite action of a generator; `scale` plays the role of e^ε and must be
/// nonzero.
struct GroupAction {
  Generator generator;
  Rational scale;
};

/// X1: first(n) -> first(n)/λ, second(n) -> λ second(n).
/// X2: both components scaled by λ^((-1)^i), i the position in the
/// trajectory. InvalidInput for a singular trajectory or λ = 0.
Trajectory group_transform(const GroupAction& action, const Trajectory& t);
/// Initial values of the transformed solution (positions 0, 1[, 2]).
SystemAInitial group_transform(const GroupAction& action, const SystemAInitial& ics);
SystemBInitial group_transform(const GroupAction& action, const SystemBInitial& ics);

struct SlscCertificate {
  long samples_per_parity = 0;
  long evaluated = 0;  // points where both residuals were computed
  long nonzero = 0;    // points with a nonzero residual
  long redrawn = 0;    // sample points rejected for a vanishing denominator
  std::optional<std::string> first_nonzero;  // reproduction data

  bool identically_zero() const { return evaluated > 0 && nonzero == 0; }
};

/// Samples parameters and a point for each of `samples` draws per parity and
/// evaluates the residuals. Deterministic in `seed`.
SlscCertificate certify_slsc(SystemKind system, const Characteristic& ch, long samples,
                             std::uint64_t seed,
                             CharacteristicForm form = CharacteristicForm::Alternating);

const char* to_string(CharacteristicForm f);
const char* to_string(Generator g);

}  // namespace sde
