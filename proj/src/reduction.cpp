#include "sde/reduction.hpp"

#include "sde/errors.hpp"

namespace sde {

namespace {

void require_regular(const Trajectory& t, SystemKind kind, const char* who) {
  if (t.system != kind) throw InvalidInput(std::string(who) + ": wrong system");
  if (t.is_singular()) throw InvalidInput(std::string(who) + ": singular trajectory");
  if (t.size() < 2) throw InvalidInput(std::string(who) + ": need at least two entries");
}

// Both systems share the invariant shape first(n)·second(n+1), second(n)·first(n+1).
InvariantSeq cross_products(const std::vector<Rational>& f, const std::vector<Rational>& s,
                            bool w_is_second_first) {
  InvariantSeq inv;
  const std::size_t n = f.size() - 1;
  inv.w.reserve(n);
  inv.z.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational sf = s[i] * f[i + 1];
    const Rational fs = f[i] * s[i + 1];
    inv.w.push_back(w_is_second_first ? sf : fs);
    inv.z.push_back(w_is_second_first ? fs : sf);
  }
  return inv;
}

}  // namespace

InvariantSeq invariants_a(const Trajectory& t) {
  require_regular(t, SystemKind::A, "invariants_a");
  return cross_products(t.first, t.second, /*w_is_second_first=*/true);
}

InvariantSeq invariants_b(const Trajectory& t) {
  require_regular(t, SystemKind::B, "invariants_b");
  return cross_products(t.first, t.second, /*w_is_second_first=*/false);
}

LinearSeq linearize(const InvariantSeq& inv) {
  if (inv.w.size() != inv.z.size()) throw InvalidInput("linearize: length mismatch");
  LinearSeq lin;
  lin.S.reserve(inv.w.size());
  lin.T.reserve(inv.z.size());
  for (std::size_t i = 0; i < inv.w.size(); ++i) {
    if (inv.w[i].is_zero()) throw ForbiddenInput("w", static_cast<long>(i));
    if (inv.z[i].is_zero()) throw ForbiddenInput("z", static_cast<long>(i));
    lin.S.push_back(inv.w[i].reciprocal());
    lin.T.push_back(inv.z[i].reciprocal());
  }
  return lin;
}

LinearSeq solve_linear_a(const SystemAParams& p, const Rational& S0, const Rational& T0,
                         long N) {
  if (N < 0) throw InvalidInput("solve_linear_a requires N >= 0");
  LinearSeq lin;
  lin.S = {S0};
  lin.T = {T0};
  for (long n = 0; n < N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    lin.S.push_back(p.a * lin.T[i] + 1);
    lin.T.push_back(p.b * lin.S[i] + 1);
  }
  return lin;
}

LinearSeq solve_linear_b(const SystemBParams& p, const Rational& S0, const Rational& S1,
                         const Rational& T0, const Rational& T1, long N) {
  if (N < 1) throw InvalidInput("solve_linear_b requires N >= 1");
  LinearSeq lin;
  lin.S = {S0, S1};
  lin.T = {T0, T1};
  for (long n = 0; n + 2 <= N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    lin.S.push_back(p.c * lin.T[i] + p.d);
    lin.T.push_back(p.a * lin.S[i] + p.b);
  }
  return lin;
}

std::pair<Rational, Rational> closed_st_a(const SystemAParams& p, const Rational& S0,
                                          const Rational& T0, long n) {
  if (n < 0) throw InvalidInput("closed_st_a requires n >= 0");
  const Rational ab = p.a * p.b;
  const long m = n / 2;
  if (n % 2 == 0) {
    // S(2m) = (ab)^m S0 + sum_{i<m} (ab)^i + sum_{i<m} a^{i+1} b^i
    const Rational g = geometric_sum(ab, m - 1);
    const Rational abm = pow(ab, m);
    return {abm * S0 + g + p.a * g, abm * T0 + g + p.b * g};
  }
  // S(2m+1) = a^{m+1} b^m T0 + sum_{i<=m} (ab)^i + sum_{i<m} a^{i+1} b^i
  const Rational g_inc = geometric_sum(ab, m);
  const Rational g_exc = geometric_sum(ab, m - 1);
  const Rational abm = pow(ab, m);
  return {p.a * abm * T0 + g_inc + p.a * g_exc, p.b * abm * S0 + g_inc + p.b * g_exc};
}

std::pair<Rational, Rational> closed_st_b(const SystemBParams& p, const Rational& S0,
                                          const Rational& S1, const Rational& T0,
                                          const Rational& T1, long n) {
  if (n < 0) throw InvalidInput("closed_st_b requires n >= 0");
  const Rational ac = p.a * p.c;
  const long m = n / 4;
  const Rational acm = pow(ac, m);
  const Rational g_exc = geometric_sum(ac, m - 1);
  switch (n % 4) {
    case 0:
      return {acm * S0 + (p.d + p.b * p.c) * g_exc, acm * T0 + (p.b + p.a * p.d) * g_exc};
    case 1:
      return {acm * S1 + (p.d + p.b * p.c) * g_exc, acm * T1 + (p.b + p.a * p.d) * g_exc};
    default: {
      // 4m+2 pairs with (T0, S0), 4m+3 with (T1, S1).
      const bool two = n % 4 == 2;
      const Rational g_inc = geometric_sum(ac, m);
      const Rational& t_seed = two ? T0 : T1;
      const Rational& s_seed = two ? S0 : S1;
      return {acm * p.c * t_seed + p.d * g_inc + p.b * p.c * g_exc,
              acm * p.a * s_seed + p.b * g_inc + p.a * p.d * g_exc};
    }
  }
}

AuxSeedA aux_seed_a(const SystemAInitial& ics) {
  const Rational w0 = ics.v0 * ics.u1;
  const Rational z0 = ics.u0 * ics.v1;
  if (w0.is_zero()) throw ForbiddenInput("v0*u1", 0);
  if (z0.is_zero()) throw ForbiddenInput("u0*v1", 0);
  return {w0.reciprocal(), z0.reciprocal()};
}

AuxSeedB aux_seed_b(const SystemBInitial& ics) {
  const Rational w0 = ics.x0 * ics.y1;
  const Rational w1 = ics.x1 * ics.y2;
  const Rational z0 = ics.y0 * ics.x1;
  const Rational z1 = ics.y1 * ics.x2;
  if (w0.is_zero()) throw ForbiddenInput("x0*y1", 0);
  if (w1.is_zero()) throw ForbiddenInput("x1*y2", 1);
  if (z0.is_zero()) throw ForbiddenInput("y0*x1", 0);
  if (z1.is_zero()) throw ForbiddenInput("y1*x2", 1);
  return {w0.reciprocal(), w1.reciprocal(), z0.reciprocal(), z1.reciprocal()};
}

namespace {

// next_first(n) = 1/(coef_first(n)·second(n)), next_second(n) = 1/(coef_second(n)·first(n)).
Trajectory reconstruct(const std::vector<Rational>& coef_first,
                       const std::vector<Rational>& coef_second, const Rational& f0,
                       const Rational& s0, SystemKind kind) {
  if (coef_first.size() != coef_second.size())
    throw InvalidInput("reconstruct: length mismatch");
  Trajectory t;
  t.system = kind;
  t.labels = kind == SystemKind::A ? std::array<std::string, 2>{"u", "v"}
                                   : std::array<std::string, 2>{"x", "y"};
  t.first = {f0};
  t.second = {s0};
  for (std::size_t i = 0; i < coef_first.size(); ++i) {
    const Rational df = coef_first[i] * t.second[i];
    const Rational ds = coef_second[i] * t.first[i];
    if (df.is_zero()) throw ForbiddenInput("reconstruction divisor (first)", static_cast<long>(i));
    if (ds.is_zero()) throw ForbiddenInput("reconstruction divisor (second)", static_cast<long>(i));
    t.first.push_back(df.reciprocal());
    t.second.push_back(ds.reciprocal());
  }
  return t;
}

}  // namespace

Trajectory reconstruct_a(const LinearSeq& lin, const Rational& u0, const Rational& v0) {
  return reconstruct(lin.S, lin.T, u0, v0, SystemKind::A);
}

Trajectory reconstruct_b(const LinearSeq& lin, const Rational& x0, const Rational& y0) {
  return reconstruct(lin.T, lin.S, x0, y0, SystemKind::B);
}

}  // namespace sde
