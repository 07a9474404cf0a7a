#pragma once

// Order reduction through the invariants w, z of the scaling symmetries.
//
// System A: w(n) = v(n) u(n+1), z(n) = u(n) v(n+1), and S = 1/w, T = 1/z obey
//   S(n+1) = a T(n) + 1,   T(n+1) = b S(n) + 1.
// System B: w(n) = x(n) y(n+1), z(n) = y(n) x(n+1), and
//   S(n+2) = c T(n) + d,   T(n+2) = a S(n) + b.

#include <utility>
#include <vector>

#include "sde/exact.hpp"
#include "sde/systems.hpp"

namespace sde {

struct InvariantSeq {
  std::vector<Rational> w;
  std::vector<Rational> z;
};

struct LinearSeq {
  std::vector<Rational> S;
  std::vector<Rational> T;
};

/// w(n), z(n) for 0 <= n <= N-1. Rejects singular or too-short trajectories.
InvariantSeq invariants_a(const Trajectory& t);
InvariantSeq invariants_b(const Trajectory& t);

/// Entrywise reciprocals; a zero invariant throws ForbiddenInput naming the
/// sequence ("w" or "z") and index.
LinearSeq linearize(const InvariantSeq& inv);

/// Direct recursion, entries 0..N.
LinearSeq solve_linear_a(const SystemAParams& p, const Rational& S0, const Rational& T0,
                         long N);
/// Direct recursion, entries 0..N (N >= 1).
LinearSeq solve_linear_b(const SystemBParams& p, const Rational& S0, const Rational& S1,
                         const Rational& T0, const Rational& T1, long N);

/// (S(n), T(n)) from the parity-split closed form.
std::pair<Rational, Rational> closed_st_a(const SystemAParams& p, const Rational& S0,
                                          const Rational& T0, long n);
/// (S(n), T(n)) from the residue-mod-4 closed form.
std::pair<Rational, Rational> closed_st_b(const SystemBParams& p, const Rational& S0,
                                          const Rational& S1, const Rational& T0,
                                          const Rational& T1, long n);

struct AuxSeedA {
  Rational S0, T0;
};
struct AuxSeedB {
  Rational S0, S1, T0, T1;
};

/// S0 = 1/(v0 u1), T0 = 1/(u0 v1); ForbiddenInput when either product is 0.
AuxSeedA aux_seed_a(const SystemAInitial& ics);
/// S0 = 1/(x0 y1), S1 = 1/(x1 y2), T0 = 1/(y0 x1), T1 = 1/(y1 x2).
AuxSeedB aux_seed_b(const SystemBInitial& ics);

/// u(n+1) = 1/(S(n) v(n)), v(n+1) = 1/(T(n) u(n)); returns entries 0..len(S).
Trajectory reconstruct_a(const LinearSeq& lin, const Rational& u0, const Rational& v0);
/// x(n+1) = 1/(T(n) y(n)), y(n+1) = 1/(S(n) x(n)).
Trajectory reconstruct_b(const LinearSeq& lin, const Rational& x0, const Rational& y0);

}  // namespace sde
