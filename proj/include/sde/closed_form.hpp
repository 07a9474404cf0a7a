#pragma once

// Closed-form solutions of systems A and B, evaluated directly at an index.
//
// The product forms rebuild the solution from the auxiliary sequences S, T:
//   A: u(2n) = u0 ∏_{r<n} T(2r)/S(2r+1),  u(2n+1) = ∏_{r<n} T(2r+1) / (v0 ∏_{r<=n} S(2r))
//   B: x(2n) = x0 ∏_{r<n} S(2r)/T(2r+1),  x(2n+1) = ∏_{r<n} S(2r+1) / (y0 ∏_{r<=n} T(2r))
// (and symmetrically for v, y). The case forms are the fully expanded
// expressions for particular parameter families.
//
// Every evaluator throws ForbiddenInput when a divisor vanishes.

#include <optional>
#include <string_view>
#include <vector>

#include "sde/exact.hpp"
#include "sde/systems.hpp"

namespace sde {

struct Point {
  Rational first, second;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class CaseA {
  Product,    // any a, b
  ABneq1,     // ab != 1
  Aeq1,       // a = 1, b != 1
  Beq1,       // b = 1, a != 1
  Aeq1Bneg1,  // a = 1, b = -1 (period-4 closed form)
  Beq1Aneg1,  // b = 1, a = -1
  OnesOnes,   // a = b = 1
  NegNeg,     // a = b = -1
};

enum class CaseB {
  Product,  // any a, b, c, d
  ACneq1,   // ac != 1
  ACeq1,    // ac = 1
  UnitBD,   // (a, b, c, d) = (1, 1, -1, 1), period-8 closed form
  AllOnes,  // a = b = c = d = 1
};

inline constexpr CaseA kAllCasesA[] = {CaseA::Product,   CaseA::ABneq1,    CaseA::Aeq1,
                                       CaseA::Beq1,      CaseA::Aeq1Bneg1, CaseA::Beq1Aneg1,
                                       CaseA::OnesOnes,  CaseA::NegNeg};
inline constexpr CaseB kAllCasesB[] = {CaseB::Product, CaseB::ACneq1, CaseB::ACeq1,
                                       CaseB::UnitBD, CaseB::AllOnes};

std::string_view to_string(CaseA c);
std::string_view to_string(CaseB c);
std::optional<CaseA> parse_case_a(std::string_view s);
std::optional<CaseB> parse_case_b(std::string_view s);

/// Whether the case's closed form is valid for these parameters.
bool case_applies(CaseA c, const SystemAParams& p);
bool case_applies(CaseB c, const SystemBParams& p);

/// Most specific applicable case.
CaseA auto_case(const SystemAParams& p);
CaseB auto_case(const SystemBParams& p);

Point solve_a_product(const SystemAParams& p, const SystemAInitial& ics, long n);
/// Entries 0..N with running products; matches solve_a_product entrywise.
std::vector<Point> solve_a_product_sweep(const SystemAParams& p, const SystemAInitial& ics,
                                         long N);
/// InconsistentCase if !case_applies(c, p).
Point solve_a_case(CaseA c, const SystemAParams& p, const SystemAInitial& ics, long n);

Point solve_b_product(const SystemBParams& p, const SystemBInitial& ics, long n);
std::vector<Point> solve_b_product_sweep(const SystemBParams& p, const SystemBInitial& ics,
                                         long N);
/// CaseB::Product evaluates the general expanded form (no assumption on ac).
Point solve_b_case(CaseB c, const SystemBParams& p, const SystemBInitial& ics, long n);

}  // namespace sde
