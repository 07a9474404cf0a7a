#include <array>
#include <functional>
#include <string>

#include "closed_form_detail.hpp"
#include "sde/closed_form.hpp"
#include "sde/errors.hpp"
#include "sde/reduction.hpp"

namespace sde {

using detail::product;
using detail::require_nonzero;

namespace {

constexpr std::array<std::string_view, 5> kNamesB = {"Product", "ACneq1", "ACeq1", "UnitBD",
                                                     "AllOnes"};

void require_nonzero_ics(const SystemBInitial& ics) {
  for (const Rational* q : {&ics.x0, &ics.x1, &ics.x2, &ics.y0, &ics.y1, &ics.y2})
    if (q->is_zero()) throw ForbiddenInput("zero initial value", 0);
}

struct AuxB {
  const SystemBParams& p;
  AuxSeedB seed;
  std::pair<Rational, Rational> at(long k) const {
    auto st = closed_st_b(p, seed.S0, seed.S1, seed.T0, seed.T1, k);
    require_nonzero(st.first, "S", k);
    require_nonzero(st.second, "T", k);
    return st;
  }
};

Point product_form(const AuxB& aux, const SystemBInitial& ics, long n) {
  const long m = n / 2;
  if (n % 2 == 0) {
    Rational x = ics.x0, y = ics.y0;
    for (long r = 0; r < m; ++r) {
      const auto even = aux.at(2 * r);
      const auto odd = aux.at(2 * r + 1);
      x *= even.first / odd.second;
      y *= even.second / odd.first;
    }
    return {x, y};
  }
  Rational num_x(1), num_y(1), den_x = ics.y0, den_y = ics.x0;
  for (long r = 0; r < m; ++r) {
    const auto odd = aux.at(2 * r + 1);
    num_x *= odd.first;
    num_y *= odd.second;
  }
  for (long r = 0; r <= m; ++r) {
    const auto even = aux.at(2 * r);
    den_x *= even.second;
    den_y *= even.first;
  }
  return {num_x / den_x, num_y / den_y};
}

// The expanded residue-mod-4 solutions all share one skeleton. Each block is
// (up to a constant) one auxiliary term sampled along a residue class:
//   f0 ~ S(4r)    f1 ~ S(4r+2)  f2 ~ T(4r+3)  f3 ~ T(4r+1)
//   g0 ~ T(4r)    g1 ~ T(4r+2)  g2 ~ S(4r+3)  g3 ~ S(4r+1)
// `odd_factor` is the constant left over on the 4n+1 and 4n+3 entries where
// the numerator and denominator products have unequal length.
struct Blocks {
  std::function<Rational(long)> f0, f1, f2, f3, g0, g1, g2, g3;
  Rational odd_factor{1};
};

Point residue_four(const Blocks& bl, const SystemBInitial& ics, long n) {
  const Rational &x0 = ics.x0, &x1 = ics.x1, &x2 = ics.x2;
  const Rational &y0 = ics.y0, &y1 = ics.y1, &y2 = ics.y2;
  const long m = n / 4;
  auto P = [](const std::function<Rational(long)>& f, long count) { return product(count, f); };
  switch (n % 4) {
    case 0:
      return {pow(x2 * y2, m) / (pow(y0, m) * pow(x0, m - 1)) * P(bl.f0, m) * P(bl.f1, m) /
                  (P(bl.f2, m) * P(bl.f3, m)),
              pow(x2 * y2, m) / (pow(x0, m) * pow(y0, m - 1)) * P(bl.g0, m) * P(bl.g1, m) /
                  (P(bl.g2, m) * P(bl.g3, m))};
    case 1:
      return {bl.odd_factor * x1 * pow(x0 * y0, m) / pow(x2 * y2, m) * P(bl.g2, m) *
                  P(bl.g3, m) / (P(bl.g0, m + 1) * P(bl.g1, m)),
              bl.odd_factor * y1 * pow(x0 * y0, m) / pow(x2 * y2, m) * P(bl.f2, m) *
                  P(bl.f3, m) / (P(bl.f0, m + 1) * P(bl.f1, m))};
    case 2:
      return {pow(x2, m + 1) * pow(y2, m) / (pow(y0, m) * pow(x0, m)) * P(bl.f0, m + 1) *
                  P(bl.f1, m) / (P(bl.f2, m) * P(bl.f3, m + 1)),
              pow(x2, m) * pow(y2, m + 1) / (pow(x0, m) * pow(y0, m)) * P(bl.g0, m + 1) *
                  P(bl.g1, m) / (P(bl.g2, m) * P(bl.g3, m + 1))};
    default:
      return {bl.odd_factor * y1 * pow(x0, m + 1) * pow(y0, m) / (pow(x2, m) * pow(y2, m + 1)) *
                  P(bl.g2, m) * P(bl.g3, m + 1) / (P(bl.g0, m + 1) * P(bl.g1, m + 1)),
              bl.odd_factor * x1 * pow(x0, m) * pow(y0, m + 1) / (pow(x2, m + 1) * pow(y2, m)) *
                  P(bl.f2, m) * P(bl.f3, m + 1) / (P(bl.f0, m + 1) * P(bl.f1, m + 1))};
  }
}

// General parameters: blocks written with geometric sums of ac.
Blocks general_blocks(const SystemBParams& p, const SystemBInitial& ics) {
  const Rational a = p.a, b = p.b, c = p.c, d = p.d, ac = p.a * p.c;
  const Rational x0y1 = ics.x0 * ics.y1, y0x1 = ics.y0 * ics.x1;
  const Rational x1y2 = ics.x1 * ics.y2, y1x2 = ics.y1 * ics.x2;
  auto G = [ac](long m) { return geometric_sum(ac, m); };
  Blocks bl;
  bl.f0 = [=](long r) { return pow(ac, r) + (d + b * c) * x0y1 * G(r - 1); };
  bl.f1 = [=](long r) { return pow(ac, r) * c + y0x1 * (d * G(r) + b * c * G(r - 1)); };
  bl.f2 = [=](long r) { return pow(ac, r) * a + x1y2 * (b * G(r) + a * d * G(r - 1)); };
  bl.f3 = [=](long r) { return pow(ac, r) + (b + a * d) * y1x2 * G(r - 1); };
  bl.g0 = [=](long r) { return pow(ac, r) + (b + a * d) * y0x1 * G(r - 1); };
  bl.g1 = [=](long r) { return pow(ac, r) * a + x0y1 * (b * G(r) + a * d * G(r - 1)); };
  bl.g2 = [=](long r) { return pow(ac, r) * c + y1x2 * (d * G(r) + b * c * G(r - 1)); };
  bl.g3 = [=](long r) { return pow(ac, r) + (d + b * c) * x1y2 * G(r - 1); };
  return bl;
}

// ac != 1: geometric sums cleared, every block scaled by (1 - ac).
Blocks ac_neq_1_blocks(const SystemBParams& p, const SystemBInitial& ics) {
  const Rational a = p.a, b = p.b, c = p.c, d = p.d, ac = p.a * p.c;
  const Rational e = d + b * c;  // S-side inhomogeneity
  const Rational h = b + a * d;  // T-side inhomogeneity
  const Rational x0y1 = ics.x0 * ics.y1, y0x1 = ics.y0 * ics.x1;
  const Rational x1y2 = ics.x1 * ics.y2, y1x2 = ics.y1 * ics.x2;
  auto k1 = [=](const Rational& q) {
    return [=](long r) { return pow(ac, r) * (1 - ac - q * e) + q * e; };
  };
  auto k2 = [=](const Rational& q) {
    return [=](long r) { return pow(ac, r) * (c - ac * c - q * (ac * d + b * c)) + q * e; };
  };
  auto k3 = [=](const Rational& q) {
    return [=](long r) { return pow(ac, r) * (a - a * ac - q * (ac * b + a * d)) + q * h; };
  };
  auto k4 = [=](const Rational& q) {
    return [=](long r) { return pow(ac, r) * (1 - ac - q * h) + q * h; };
  };
  Blocks bl;
  bl.f0 = k1(x0y1);
  bl.f1 = k2(y0x1);
  bl.f2 = k3(x1y2);
  bl.f3 = k4(y1x2);
  bl.g0 = k4(y0x1);
  bl.g1 = k3(x0y1);
  bl.g2 = k2(y1x2);
  bl.g3 = k1(x1y2);
  bl.odd_factor = 1 - ac;
  return bl;
}

// ac = 1: the geometric sums collapse to arithmetic progressions.
Blocks ac_eq_1_blocks(const SystemBParams& p, const SystemBInitial& ics) {
  const Rational a = p.a, b = p.b, c = p.c, d = p.d;
  const Rational x0y1 = ics.x0 * ics.y1, y0x1 = ics.y0 * ics.x1;
  const Rational x1y2 = ics.x1 * ics.y2, y1x2 = ics.y1 * ics.x2;
  Blocks bl;
  bl.f0 = [=](long r) { return 1 + x0y1 * r * (d + b * c); };
  bl.f1 = [=](long r) { return c + d * y0x1 * (r + 1) + b * c * y0x1 * r; };
  bl.f2 = [=](long r) { return a + b * x1y2 * (r + 1) + a * d * x1y2 * r; };
  bl.f3 = [=](long r) { return 1 + y1x2 * r * (b + a * d); };
  bl.g0 = [=](long r) { return 1 + b * y0x1 * r + a * d * y0x1 * r; };
  bl.g1 = [=](long r) { return a + x0y1 * (b * r + b + a * d * r); };
  bl.g2 = [=](long r) { return c + y1x2 * (d * r + d + b * c * r); };
  bl.g3 = [=](long r) { return 1 + d * x1y2 * r + b * c * x1y2 * r; };
  return bl;
}

Blocks all_ones_blocks(const SystemBInitial& ics) {
  const Rational x0y1 = ics.x0 * ics.y1, y0x1 = ics.y0 * ics.x1;
  const Rational x1y2 = ics.x1 * ics.y2, y1x2 = ics.y1 * ics.x2;
  Blocks bl;
  bl.f0 = [=](long r) { return 1 + x0y1 * (2 * r); };
  bl.f1 = [=](long r) { return 1 + y0x1 * (2 * r + 1); };
  bl.f2 = [=](long r) { return 1 + x1y2 * (2 * r + 1); };
  bl.f3 = [=](long r) { return 1 + y1x2 * (2 * r); };
  bl.g0 = [=](long r) { return 1 + y0x1 * (2 * r); };
  bl.g1 = [=](long r) { return 1 + x0y1 * (2 * r + 1); };
  bl.g2 = [=](long r) { return 1 + y1x2 * (2 * r + 1); };
  bl.g3 = [=](long r) { return 1 + x1y2 * (2 * r); };
  return bl;
}

// (a, b, c, d) = (1, 1, -1, 1): ac = -1, so each block alternates with r and
// the solution closes in powers of a few fixed brackets, period 8.
Point unit_bd(const SystemBInitial& ics, long n) {
  const Rational &x0 = ics.x0, &x1 = ics.x1, &x2 = ics.x2;
  const Rational &y0 = ics.y0, &y1 = ics.y1, &y2 = ics.y2;
  const Rational p = y0 * x1, q = x1 * y2, s = y1 * x2, t = x0 * y1;
  const long m = n / 8;
  const long m2 = 2 * m;
  // Brackets that recur across the table.
  const Rational x_den = pow(1 + q, m) * pow(q - 1, m) * pow(2 * s - 1, m);
  const Rational y_den = pow(1 + t, m) * pow(2 * p - 1, m) * pow(t - 1, m);
  switch (n % 8) {
    case 0:
      return {pow(x2 * y2, m2) / (pow(x0, m2 - 1) * pow(y0, m2)) * pow(1 - p, m2) / x_den,
              pow(x2 * y2, m2) / (pow(x0, m2) * pow(y0, m2 - 1)) * y_den / pow(1 - s, m2)};
    case 1:
      return {x1 * pow(x0 * y0, m2) / pow(x2 * y2, m2) * pow(1 - s, m2) / y_den,
              y1 * pow(x0 * y0, m2) / pow(x2 * y2, m2) * x_den / pow(1 - p, m2)};
    case 2:
      return {pow(x2, m2 + 1) * pow(y2, m2) / pow(x0 * y0, m2) * pow(1 - p, m2) / x_den,
              pow(x2, m2) * pow(y2, m2 + 1) / pow(x0 * y0, m2) * y_den / pow(1 - s, m2)};
    case 3:
      return {y1 * pow(x0, m2 + 1) * pow(y0, m2) / (pow(x2, m2) * pow(y2, m2 + 1)) *
                  pow(1 - s, m2) / ((1 + t) * y_den),
              x1 * pow(x0, m2) * pow(y0, m2 + 1) / (pow(x2, m2 + 1) * pow(y2, m2)) * x_den /
                  pow(p - 1, m2 + 1)};
    case 4:
      return {pow(x2 * y2, m2 + 1) * pow(p - 1, m2 + 1) /
                  (pow(x0, m2) * pow(y0, m2 + 1) * (1 + q) * x_den),
              pow(x2 * y2, m2 + 1) / (pow(x0, m2 + 1) * pow(y0, m2)) * (1 + t) * y_den /
                  pow(s - 1, m2 + 1)};
    case 5:
      return {x1 * pow(x0 * y0, m2 + 1) * pow(s - 1, m2 + 1) /
                  (pow(x2 * y2, m2 + 1) * (1 + t) * (2 * p - 1) * y_den),
              y1 * pow(x0 * y0, m2 + 1) * (1 + q) * x_den /
                  (pow(x2 * y2, m2 + 1) * pow(1 - p, m2 + 1))};
    case 6:
      return {pow(x2, m2 + 2) * pow(y2, m2 + 1) * pow(1 - p, m2 + 1) /
                  (pow(x0 * y0, m2 + 1) * (1 + q) * (2 * s - 1) * x_den),
              pow(x2, m2 + 1) * pow(y2, m2 + 2) * (1 + t) * (2 * p - 1) * y_den /
                  (pow(x0 * y0, m2 + 1) * pow(1 - s, m2 + 1))};
    default:
      return {y1 * pow(x0, m2 + 2) * pow(y0, m2 + 1) * pow(1 - s, m2 + 1) /
                  (pow(x2, m2 + 1) * pow(y2, m2 + 2) * (1 + t) * (2 * p - 1) * (t - 1) * y_den),
              x1 * pow(x0, m2 + 1) * pow(y0, m2 + 2) * (1 + q) * (2 * s - 1) * x_den /
                  (pow(x2, m2 + 2) * pow(y2, m2 + 1) * pow(1 - p, m2 + 2))};
  }
}

}  // namespace

std::string_view to_string(CaseB c) { return kNamesB[static_cast<std::size_t>(c)]; }

std::optional<CaseB> parse_case_b(std::string_view s) {
  for (std::size_t i = 0; i < kNamesB.size(); ++i)
    if (kNamesB[i] == s) return static_cast<CaseB>(i);
  return std::nullopt;
}

bool case_applies(CaseB c, const SystemBParams& p) {
  const bool ac_one = (p.a * p.c).is_one();
  switch (c) {
    case CaseB::Product: return true;
    case CaseB::ACneq1: return !ac_one;
    case CaseB::ACeq1: return ac_one;
    case CaseB::UnitBD: return p.a == 1 && p.b == 1 && p.c == -1 && p.d == 1;
    case CaseB::AllOnes: return p.a == 1 && p.b == 1 && p.c == 1 && p.d == 1;
  }
  return false;
}

CaseB auto_case(const SystemBParams& p) {
  for (CaseB c : {CaseB::AllOnes, CaseB::UnitBD, CaseB::ACeq1, CaseB::ACneq1})
    if (case_applies(c, p)) return c;
  return CaseB::Product;
}

Point solve_b_product(const SystemBParams& p, const SystemBInitial& ics, long n) {
  if (n < 0) throw InvalidInput("solve_b_product requires n >= 0");
  require_nonzero_ics(ics);
  const AuxB aux{p, aux_seed_b(ics)};
  return product_form(aux, ics, n);
}

std::vector<Point> solve_b_product_sweep(const SystemBParams& p, const SystemBInitial& ics,
                                         long N) {
  if (N < 0) throw InvalidInput("solve_b_product_sweep requires N >= 0");
  require_nonzero_ics(ics);
  const AuxB aux{p, aux_seed_b(ics)};

  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  Rational even_x = 1, even_y = 1;
  const auto st0 = aux.at(0);
  Rational odd_x = (ics.y0 * st0.second).reciprocal();
  Rational odd_y = (ics.x0 * st0.first).reciprocal();
  for (long n = 0; n <= N; ++n) {
    const long m = n / 2;
    if (n % 2 == 0) {
      out.push_back({ics.x0 * even_x, ics.y0 * even_y});
      if (n + 1 <= N) {
        const auto even = aux.at(2 * m);
        const auto odd = aux.at(2 * m + 1);
        even_x *= even.first / odd.second;
        even_y *= even.second / odd.first;
      }
    } else {
      out.push_back({odd_x, odd_y});
      if (n + 1 <= N) {
        const auto odd = aux.at(2 * m + 1);
        const auto even = aux.at(2 * m + 2);
        odd_x *= odd.first / even.second;
        odd_y *= odd.second / even.first;
      }
    }
  }
  return out;
}

Point solve_b_case(CaseB c, const SystemBParams& p, const SystemBInitial& ics, long n) {
  if (n < 0) throw InvalidInput("solve_b_case requires n >= 0");
  if (!case_applies(c, p))
    throw InconsistentCase(std::string("case ") + std::string(to_string(c)) +
                           " does not apply to a=" + p.a.str() + ", b=" + p.b.str() +
                           ", c=" + p.c.str() + ", d=" + p.d.str());
  require_nonzero_ics(ics);
  if (n == 0) return {ics.x0, ics.y0};
  if (n == 1) return {ics.x1, ics.y1};
  if (n == 2) return {ics.x2, ics.y2};

  const char* name = to_string(c).data();
  return detail::guarded_point(name, n, [&]() -> Point {
    switch (c) {
      case CaseB::Product: return residue_four(general_blocks(p, ics), ics, n);
      case CaseB::ACneq1: return residue_four(ac_neq_1_blocks(p, ics), ics, n);
      case CaseB::ACeq1: return residue_four(ac_eq_1_blocks(p, ics), ics, n);
      case CaseB::AllOnes: return residue_four(all_ones_blocks(ics), ics, n);
      case CaseB::UnitBD: return unit_bd(ics, n);
    }
    return {};
  });
}

}  // namespace sde
