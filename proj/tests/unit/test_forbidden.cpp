#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "sde/forbidden.hpp"
#include "sde/sampling.hpp"

using namespace sde;
using oracle::R;

namespace {

using Zero = std::pair<char, long>;  // ('S' or 'T', k)

// Auxiliary terms by direct recursion, for k <= K.
std::set<Zero> zeros_a(const SystemAParams& p, Rational S, Rational T, long K) {
  std::set<Zero> out;
  for (long k = 0; k <= K; ++k) {
    if (S.is_zero()) out.insert({'S', k});
    if (T.is_zero()) out.insert({'T', k});
    const Rational S1 = p.a * T + 1, T1 = p.b * S + 1;
    S = S1;
    T = T1;
  }
  return out;
}

std::set<Zero> zeros_b(const SystemBParams& p, const std::array<Rational, 4>& seed, long K) {
  std::vector<Rational> S{seed[0], seed[1]}, T{seed[2], seed[3]};
  while (static_cast<long>(S.size()) <= K) {
    const std::size_t n = S.size() - 2;
    S.push_back(p.c * T[n] + p.d);
    T.push_back(p.a * S[n] + p.b);
  }
  std::set<Zero> out;
  for (long k = 0; k <= K; ++k) {
    if (S[static_cast<std::size_t>(k)].is_zero()) out.insert({'S', k});
    if (T[static_cast<std::size_t>(k)].is_zero()) out.insert({'T', k});
  }
  return out;
}

// "S(2r+1)" at r -> ('S', 2r + 1); "T(4r+3)" at r -> ('T', 4r + 3).
Zero term_of(const Violation& v) {
  const std::string& id = v.restriction_id;
  const long mult = id[2] - '0';
  const long off = id.size() > 5 ? id[5] - '0' : 0;
  return {id[0], mult * v.r + off};
}

std::set<Zero> reported(const ForbiddenReport& rep) {
  std::set<Zero> out;
  for (const auto& v : rep.violated) out.insert(term_of(v));
  return out;
}

}  // namespace

TEST_CASE("system A forbidden examples") {
  const SystemAInitial planted{1, 1, 1, R("-1/2")};
  const auto rep = check_forbidden_a({1, 1}, planted, 10);
  REQUIRE(rep.violated.size() == 1);
  CHECK(rep.violated[0].restriction_id == "T(2r)");
  CHECK(rep.violated[0].r == 1);
  CHECK(rep.violated[0].step == 3);
  CHECK(rep.violated[0].component == Component::Second);
  CHECK(rep.predicted_singular_step == 3);
  const Trajectory t = iterate_a({1, 1}, planted, 10);
  REQUIRE(t.singular);
  CHECK(t.singular->step == 3);
  CHECK(t.singular->component == Component::Second);

  CHECK(check_forbidden_a({1, 1}, {1, 1, 1, 1}, 50).clean());

  const auto inad = check_forbidden_a({1, 1}, {1, 1, 1, 0}, 10);
  CHECK(inad.inadmissible == std::vector<std::string>{"u0*v1"});
  CHECK_FALSE(inad.predicted_singular_step.has_value());
  CHECK_FALSE(iterate_a({1, 1}, {1, 1, 1, 0}, 20).is_singular());
}

TEST_CASE("system A zero chains") {
  // u0 v1 = 0 with a = 0: u(2) = u0 / (a + u0 v1) has a zero denominator.
  auto rep = check_forbidden_a({0, 2}, {0, 1, 1, 1}, 5);
  CHECK(rep.predicted_singular_step == 2);
  CHECK(rep.predicted_component == Component::First);
  CHECK(predict_vs_observe_a({0, 2}, {0, 1, 1, 1}, 5).kind == VerdictKind::AgreeSingular);
  rep = check_forbidden_a({2, 0}, {1, 1, 1, 0}, 5);
  CHECK(rep.predicted_singular_step == 3);
  CHECK(rep.predicted_component == Component::Second);
  CHECK(predict_vs_observe_a({2, 0}, {1, 1, 1, 0}, 5).kind == VerdictKind::AgreeSingular);
}

TEST_CASE("system B forbidden examples") {
  const SystemBParams ones{1, 1, 1, 1};
  CHECK(check_forbidden_b(ones, {1, 1, 1, 1, 1, 1}, 30).clean());

  const auto zero = check_forbidden_b(ones, {0, 1, 1, 1, 1, 1}, 5);
  CHECK(zero.inadmissible == std::vector<std::string>{"x0*y1"});

  const SystemBInitial planted{1, 1, 1, 1, R("-1/2"), 1};
  const auto rep = check_forbidden_b(ones, planted, 5);
  std::set<std::pair<std::string, long>> ids;
  for (const auto& v : rep.violated) ids.insert({v.restriction_id, v.r});
  CHECK(ids.count({"S(4r)", 1}) == 1);
  CHECK(rep.predicted_singular_step.has_value());
  CHECK(predict_vs_observe_b(ones, planted, 20).kind == VerdictKind::AgreeSingular);
}

TEST_CASE("predict_vs_observe examples") {
  CHECK(predict_vs_observe_a({1, 1}, {1, 1, 1, 1}, 50).kind == VerdictKind::AgreeRegular);
  const Verdict v = predict_vs_observe_a({1, 1}, {1, 1, 1, R("-1/2")}, 10);
  CHECK(v.kind == VerdictKind::AgreeSingular);
  CHECK(v.step == 3);
  const Verdict w = predict_vs_observe_a({1, -1}, {2, 1, 1, 1}, 5);
  CHECK(w.kind == VerdictKind::AgreeSingular);
  CHECK(w.step == 2);
  CHECK(predict_vs_observe_b({1, 1, 1, 1}, {1, 1, 0, 1, 1, 1}, 5).kind ==
        VerdictKind::Inadmissible);
  CHECK_THROWS(predict_vs_observe_a({1, 1}, {1, 1, 1, 1}, 0));
  CHECK(std::string(to_string(VerdictKind::Mismatch)) == "mismatch");
}

TEST_CASE("reported restrictions are exactly the vanishing auxiliary terms") {
  Sampler s(71);
  const long H = 8;
  for (int k = 0; k < 300; ++k) {
    SystemAParams p = s.params_a();
    SystemAInitial ics = s.ics_a();
    if ((ics.u0 * ics.v1).is_zero() || (ics.v0 * ics.u1).is_zero()) continue;
    // Plant a zero in every other draw: S(K) is affine in T0, so solve for it.
    if (k % 2) {
      const long K = 1 + 2 * (k % (2 * H - 1) / 2);
      const Rational S0 = (ics.v0 * ics.u1).reciprocal();
      auto S_at = [&](const Rational& T0) {
        Rational S = S0, T = T0;
        for (long j = 0; j < K; ++j) {
          const Rational S1 = p.a * T + 1, T1 = p.b * S + 1;
          S = S1;
          T = T1;
        }
        return S;
      };
      const Rational beta = S_at(0), alpha = S_at(1) - beta;
      if (alpha.is_zero() || beta.is_zero()) continue;
      ics.v1 = -(alpha / beta) / ics.u0;  // 1/T0 = -alpha/beta
    }
    const auto rep = check_forbidden_a(p, ics, H);
    const auto want = zeros_a(p, (ics.v0 * ics.u1).reciprocal(), (ics.u0 * ics.v1).reciprocal(),
                              2 * H + 1);
    CHECK(reported(rep) == want);
    if (k % 2) CHECK_FALSE(want.empty());
  }
  for (int k = 0; k < 300; ++k) {
    const SystemBParams p = s.params_b();
    SystemBInitial ics = s.ics_b();
    std::array<Rational, 4> seed{(ics.x0 * ics.y1).reciprocal(), (ics.x1 * ics.y2).reciprocal(),
                                 (ics.y0 * ics.x1).reciprocal(), (ics.y1 * ics.x2).reciprocal()};
    if (k % 2) {
      // S(K) for even K hangs off S0 when K = 0 mod 4, off T0 when K = 2 mod 4.
      const long K = 2 * (1 + k % (2 * H));
      const std::size_t slot = K % 4 == 0 ? 0 : 2;
      auto S_at = [&](const Rational& q) {
        auto sd = seed;
        sd[slot] = q;
        std::vector<Rational> S{sd[0], sd[1]}, T{sd[2], sd[3]};
        while (static_cast<long>(S.size()) <= K) {
          const std::size_t n = S.size() - 2;
          S.push_back(p.c * T[n] + p.d);
          T.push_back(p.a * S[n] + p.b);
        }
        return S[static_cast<std::size_t>(K)];
      };
      const Rational beta = S_at(0), alpha = S_at(1) - beta;
      if (alpha.is_zero() || beta.is_zero()) continue;
      seed[slot] = -beta / alpha;
      // 1/S0 = x0 y1, 1/T0 = y0 x1
      if (slot == 0) ics.y1 = seed[0].reciprocal() / ics.x0;
      else ics.y0 = seed[2].reciprocal() / ics.x1;
      seed = {(ics.x0 * ics.y1).reciprocal(), (ics.x1 * ics.y2).reciprocal(),
              (ics.y0 * ics.x1).reciprocal(), (ics.y1 * ics.x2).reciprocal()};
    }
    const auto rep = check_forbidden_b(p, ics, H);
    const auto want = zeros_b(p, seed, 4 * H + 3);
    CHECK(reported(rep) == want);
    if (k % 2) CHECK_FALSE(want.empty());
  }
}

TEST_CASE("violations only accumulate as the horizon grows") {
  Sampler s(72);
  for (int k = 0; k < 100; ++k) {
    const SystemAParams p{s.integer(-2, 2), s.integer(-2, 2)};
    const SystemAInitial ics = s.ics_a();
    std::size_t last = 0;
    for (long h = 0; h <= 12; ++h) {
      const auto rep = check_forbidden_a(p, ics, h);
      CHECK(rep.violated.size() >= last);
      last = rep.violated.size();
    }
  }
}

TEST_CASE("prediction agrees with iteration on random draws") {
  Sampler s(73);
  for (int k = 0; k < 300; ++k) {
    const SystemAParams pa{s.integer(-2, 2), s.integer(-2, 2)};
    const SystemAInitial ia{s.integer(-2, 2), s.integer(-2, 2), s.integer(-2, 2),
                            s.integer(-2, 2)};
    const Verdict va = predict_vs_observe_a(pa, ia, 30);
    CHECK_MESSAGE(va.kind != VerdictKind::Mismatch, va.details);
    const SystemBParams pb{s.integer(-2, 2), s.integer(-2, 2), s.integer(-2, 2),
                           s.integer(-2, 2)};
    const SystemBInitial ib = s.ics_b();
    const Verdict vb = predict_vs_observe_b(pb, ib, 30);
    CHECK_MESSAGE(vb.kind != VerdictKind::Mismatch, vb.details);
  }
}
