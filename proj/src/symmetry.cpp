#include "sde/symmetry.hpp"

#include <array>
#include <sstream>

#include "sde/errors.hpp"
#include "sde/sampling.hpp"

namespace sde {

namespace {

// a + ε b with ε² = 0.
struct Dual {
  Rational re, eps;
};

Dual operator+(const Rational& l, const Dual& r) { return {l + r.re, r.eps}; }
Dual operator*(const Dual& l, const Dual& r) {
  return {l.re * r.re, l.re * r.eps + l.eps * r.re};
}
Dual operator*(const Rational& l, const Dual& r) { return {l * r.re, l * r.eps}; }
Dual operator/(const Dual& l, const Dual& r) {
  if (r.re.is_zero()) throw DivisionByZero("denominator vanishes at the sample point");
  return {l.re / r.re, (l.eps * r.re - l.re * r.eps) / (r.re * r.re)};
}

struct Characteristics {
  Characteristic ch;
  CharacteristicForm form;

  Rational parity(long n) const {
    return form == CharacteristicForm::IgnoreParity ? Rational(1) : Rational(neg_one_pow(n));
  }
  Rational q1(long n, const Rational& f, const Rational& s) const {
    const Rational k = ch.c2 * parity(n) - ch.c1;
    return k * (form == CharacteristicForm::SwapVariables ? s : f);
  }
  Rational q2(long n, const Rational& f, const Rational& s) const {
    const Rational k = ch.c1 + ch.c2 * parity(n);
    return k * (form == CharacteristicForm::SwapVariables ? f : s);
  }
};

// Slot j of the point holds (first(n+j), second(n+j)). Each coordinate is
// seeded with its shifted characteristic as tangent, so the ε part of ω_i is
// exactly X ω_i.
template <std::size_t N>
struct Lifted {
  std::array<Dual, N> f, s;
};

template <std::size_t N>
Lifted<N> lift(const Characteristics& q, long n, const std::array<Rational, N>& f,
               const std::array<Rational, N>& s) {
  Lifted<N> out;
  for (std::size_t j = 0; j < N; ++j) {
    const long nj = n + static_cast<long>(j);
    out.f[j] = {f[j], q.q1(nj, f[j], s[j])};
    out.s[j] = {s[j], q.q2(nj, f[j], s[j])};
  }
  return out;
}

std::pair<Rational, Rational> residual(const Characteristics& q, long n_order, long n,
                                       const Dual& w1, const Dual& w2) {
  const long nN = n + n_order;
  return {q.q1(nN, w1.re, w2.re) - w1.eps, q.q2(nN, w1.re, w2.re) - w2.eps};
}

std::array<Rational, 2> first_a(const PointA& p) { return {p.u_n, p.u_n1}; }
std::array<Rational, 2> second_a(const PointA& p) { return {p.v_n, p.v_n1}; }
std::array<Rational, 3> first_b(const PointB& p) { return {p.x_n, p.x_n1, p.x_n2}; }
std::array<Rational, 3> second_b(const PointB& p) { return {p.y_n, p.y_n1, p.y_n2}; }

}  // namespace

std::pair<Rational, Rational> slsc_residual_a(const Characteristic& ch, const SystemAParams& p,
                                              long n_parity, const PointA& pt,
                                              CharacteristicForm form) {
  const Characteristics q{ch, form};
  const long n = n_parity % 2 == 0 ? 0 : 1;
  const auto x = lift<2>(q, n, first_a(pt), second_a(pt));
  const Dual w1 = x.f[0] / (p.a + x.f[0] * x.s[1]);
  const Dual w2 = x.s[0] / (p.b + x.s[0] * x.f[1]);
  return residual(q, 2, n, w1, w2);
}

std::pair<Rational, Rational> slsc_residual_b(const Characteristic& ch, const SystemBParams& p,
                                              long n_parity, const PointB& pt,
                                              CharacteristicForm form) {
  const Characteristics q{ch, form};
  const long n = n_parity % 2 == 0 ? 0 : 1;
  const auto x = lift<3>(q, n, first_b(pt), second_b(pt));
  const Dual fs = x.f[0] * x.s[1];
  const Dual sf = x.s[0] * x.f[1];
  const Dual w1 = fs / (x.s[2] * (p.a + p.b * fs));
  const Dual w2 = sf / (x.f[2] * (p.c + p.d * sf));
  return residual(q, 3, n, w1, w2);
}

Rational invariant_annihilation(const Characteristic& ch, InvariantKind which, long n_parity,
                                const PointA& pt) {
  const Characteristics q{ch, CharacteristicForm::Alternating};
  const auto x = lift<2>(q, n_parity % 2 == 0 ? 0 : 1, first_a(pt), second_a(pt));
  return (which == InvariantKind::W ? x.s[0] * x.f[1] : x.f[0] * x.s[1]).eps;
}

Rational invariant_annihilation(const Characteristic& ch, InvariantKind which, long n_parity,
                                const PointB& pt) {
  const Characteristics q{ch, CharacteristicForm::Alternating};
  const auto x = lift<3>(q, n_parity % 2 == 0 ? 0 : 1, first_b(pt), second_b(pt));
  return (which == InvariantKind::W ? x.f[0] * x.s[1] : x.s[0] * x.f[1]).eps;
}

namespace {

// Multipliers (first, second) applied at trajectory position i.
std::pair<Rational, Rational> action_factors(const GroupAction& g, long i) {
  if (g.scale.is_zero()) throw InvalidInput("group action scale must be nonzero");
  if (g.generator == Generator::X1) return {g.scale.reciprocal(), g.scale};
  const Rational f = i % 2 == 0 ? g.scale : g.scale.reciprocal();
  return {f, f};
}

}  // namespace

Trajectory group_transform(const GroupAction& action, const Trajectory& t) {
  if (t.is_singular()) throw InvalidInput("group_transform: singular trajectory");
  Trajectory out = t;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto [ff, fs] = action_factors(action, static_cast<long>(i));
    out.first[i] *= ff;
    out.second[i] *= fs;
  }
  return out;
}

SystemAInitial group_transform(const GroupAction& action, const SystemAInitial& ics) {
  const auto [f0, s0] = action_factors(action, 0);
  const auto [f1, s1] = action_factors(action, 1);
  return {ics.u0 * f0, ics.u1 * f1, ics.v0 * s0, ics.v1 * s1};
}

SystemBInitial group_transform(const GroupAction& action, const SystemBInitial& ics) {
  const auto [f0, s0] = action_factors(action, 0);
  const auto [f1, s1] = action_factors(action, 1);
  const auto [f2, s2] = action_factors(action, 2);
  return {ics.x0 * f0, ics.x1 * f1, ics.x2 * f2, ics.y0 * s0, ics.y1 * s1, ics.y2 * s2};
}

SlscCertificate certify_slsc(SystemKind system, const Characteristic& ch, long samples,
                             std::uint64_t seed, CharacteristicForm form) {
  SlscCertificate cert;
  cert.samples_per_parity = samples;
  Sampler rng(seed);
  const int cap = rng.distribution().retry_cap;
  for (long parity = 0; parity < 2; ++parity) {
    for (long k = 0; k < samples; ++k) {
      for (int attempt = 0; attempt <= cap; ++attempt) {
        std::ostringstream where;
        std::pair<Rational, Rational> r;
        try {
          if (system == SystemKind::A) {
            const SystemAParams p = rng.params_a();
            const PointA pt{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
            where << "a=" << p.a << " b=" << p.b << " (u_n, u_n+1, v_n, v_n+1)=(" << pt.u_n
                  << ", " << pt.u_n1 << ", " << pt.v_n << ", " << pt.v_n1 << ")";
            r = slsc_residual_a(ch, p, parity, pt, form);
          } else {
            const SystemBParams p = rng.params_b();
            const PointB pt{rng.rational(), rng.rational(), rng.rational(),
                            rng.rational(), rng.rational(), rng.rational()};
            where << "a=" << p.a << " b=" << p.b << " c=" << p.c << " d=" << p.d
                  << " (x_n..x_n+2, y_n..y_n+2)=(" << pt.x_n << ", " << pt.x_n1 << ", "
                  << pt.x_n2 << ", " << pt.y_n << ", " << pt.y_n1 << ", " << pt.y_n2 << ")";
            r = slsc_residual_b(ch, p, parity, pt, form);
          }
        } catch (const DivisionByZero&) {
          ++cert.redrawn;
          continue;
        }
        ++cert.evaluated;
        if (!r.first.is_zero() || !r.second.is_zero()) {
          ++cert.nonzero;
          if (!cert.first_nonzero) {
            where << " parity=" << parity << " residual=(" << r.first << ", " << r.second
                  << ")";
            cert.first_nonzero = where.str();
          }
        }
        break;
      }
    }
  }
  return cert;
}

const char* to_string(CharacteristicForm f) {
  switch (f) {
    case CharacteristicForm::Alternating: return "alternating";
    case CharacteristicForm::IgnoreParity: return "ignore-parity";
    case CharacteristicForm::SwapVariables: return "swap-variables";
  }
  return "?";
}

const char* to_string(Generator g) { return g == Generator::X1 ? "X1" : "X2"; }

}  // namespace sde
