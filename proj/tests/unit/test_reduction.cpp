#include <doctest.h>

#include "oracle.hpp"
#include "sde/errors.hpp"
#include "sde/reduction.hpp"
#include "sde/sampling.hpp"

using namespace sde;
using oracle::R;

namespace {

std::vector<Rational> seq(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(R(x));
  return out;
}

// Recursions written out independently of the library.
std::pair<std::vector<Rational>, std::vector<Rational>> linear_a(const SystemAParams& p,
                                                                 Rational S, Rational T,
                                                                 long N) {
  std::vector<Rational> s{S}, t{T};
  for (long n = 0; n < N; ++n) {
    const Rational s1 = p.a * t.back() + 1;
    const Rational t1 = p.b * s.back() + 1;
    s.push_back(s1);
    t.push_back(t1);
  }
  return {s, t};
}

}  // namespace

TEST_CASE("invariants_a of the all-ones run") {
  const auto inv = invariants_a(iterate_a({1, 1}, {1, 1, 1, 1}, 4));
  CHECK(inv.w == seq({"1", "1/2", "1/3", "1/4"}));
  CHECK(inv.z == seq({"1", "1/2", "1/3", "1/4"}));
}

TEST_CASE("invariants_a with u identically zero") {
  const auto inv = invariants_a(iterate_a({1, 1}, {0, 0, 1, 1}, 5));
  for (const auto& z : inv.z) CHECK(z.is_zero());
}

TEST_CASE("invariants_a reject bad trajectories") {
  CHECK_THROWS_AS(invariants_a(iterate_a({1, 1}, {1, 1, 1, -1}, 4)), InvalidInput);
  CHECK_THROWS_AS(invariants_a(iterate_b({1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, 4)), InvalidInput);
  CHECK_THROWS_AS(invariants_b(iterate_a({1, 1}, {1, 1, 1, 1}, 4)), InvalidInput);
}

TEST_CASE("invariants obey their Mobius recurrences") {
  Sampler s(21);
  int checked = 0;
  for (int k = 0; k < 100; ++k) {
    const SystemAParams p = s.params_a();
    const Trajectory t = iterate_a(p, s.ics_a(), 25);
    if (t.is_singular()) continue;
    const auto inv = invariants_a(t);
    for (std::size_t n = 0; n + 1 < inv.w.size(); ++n) {
      CHECK(inv.w[n + 1] * (p.a + inv.z[n]) == inv.z[n]);
      CHECK(inv.z[n + 1] * (p.b + inv.w[n]) == inv.w[n]);
    }
    ++checked;
  }
  CHECK(checked > 50);
  checked = 0;
  for (int k = 0; k < 100; ++k) {
    const SystemBParams p = s.params_b();
    const Trajectory t = iterate_b(p, s.ics_b(), 25);
    if (t.is_singular()) continue;
    const auto inv = invariants_b(t);
    for (std::size_t n = 0; n + 2 < inv.w.size(); ++n) {
      CHECK(inv.w[n + 2] * (p.c + p.d * inv.z[n]) - inv.z[n] == 0);
      CHECK(inv.z[n + 2] * (p.a + p.b * inv.w[n]) - inv.w[n] == 0);
    }
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("invariants_b of the all-ones run") {
  // x = y = [1, 1, 1, 1/2, 1, 1/3]
  const auto inv = invariants_b(iterate_b({1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, 5));
  CHECK(inv.w == seq({"1", "1", "1/2", "1/2", "1/3"}));
  CHECK(inv.z == seq({"1", "1", "1/2", "1/2", "1/3"}));

  const auto fixed = invariants_b(iterate_b({1, 0, 1, 0}, {1, 1, 1, 1, 1, 1}, 6));
  for (const auto& w : fixed.w) CHECK(w == 1);
  for (const auto& z : fixed.z) CHECK(z == 1);
}

TEST_CASE("linearize") {
  const auto lin = linearize({seq({"1", "1/2", "1/3"}), seq({"1", "1", "-2"})});
  CHECK(lin.S == seq({"1", "2", "3"}));
  CHECK(lin.T == seq({"1", "1", "-1/2"}));
  const auto ones = linearize({seq({"1", "1"}), seq({"1", "1"})});
  CHECK(ones.S == seq({"1", "1"}));
  try {
    linearize({seq({"1", "2", "3"}), seq({"1", "0", "3"})});
    FAIL("no throw");
  } catch (const ForbiddenInput& e) {
    CHECK(e.restriction() == "z");
    CHECK(e.index() == 1);
  }
}

TEST_CASE("solve_linear_a examples") {
  auto l = solve_linear_a({1, 1}, 1, 1, 4);
  CHECK(l.S == seq({"1", "2", "3", "4", "5"}));
  CHECK(l.T == seq({"1", "2", "3", "4", "5"}));
  l = solve_linear_a({2, 1}, 1, 1, 2);
  CHECK(l.S == seq({"1", "3", "5"}));
  CHECK(l.T == seq({"1", "2", "4"}));
  l = solve_linear_a({0, 0}, R("7/3"), R("-2"), 3);
  CHECK(l.S == seq({"7/3", "1", "1", "1"}));
  CHECK(l.T == seq({"-2", "1", "1", "1"}));
}

TEST_CASE("closed_st_a examples") {
  CHECK(closed_st_a({2, 1}, 1, 1, 2) == std::pair<Rational, Rational>{5, 4});
  CHECK(closed_st_a({R("3/7"), R("-5")}, R("2/9"), R("4"), 0) ==
        std::pair<Rational, Rational>{R("2/9"), 4});
  CHECK(closed_st_a({1, 1}, 1, 1, 5).first == 6);
}

TEST_CASE("closed_st_a equals the recursion") {
  Sampler s(31);
  for (int k = 0; k < 60; ++k) {
    const SystemAParams p = s.params_a();
    const Rational S0 = s.rational(), T0 = s.rational();
    const auto [S, T] = linear_a(p, S0, T0, 60);
    for (long n = 0; n <= 60; ++n) {
      const auto st = closed_st_a(p, S0, T0, n);
      CHECK(st.first == S[static_cast<std::size_t>(n)]);
      CHECK(st.second == T[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("solve_linear_b examples") {
  auto l = solve_linear_b({1, 1, 1, 1}, 1, 1, 1, 1, 4);
  CHECK(l.S == seq({"1", "1", "2", "2", "3"}));
  CHECK(l.T == seq({"1", "1", "2", "2", "3"}));
  l = solve_linear_b({0, R("5/2"), 0, R("-3")}, 7, 8, 9, 10, 3);
  CHECK(l.S[2] == -3);
  CHECK(l.S[3] == -3);
  CHECK(l.T[2] == R("5/2"));
  CHECK(l.T[3] == R("5/2"));
  l = solve_linear_b({2, 0, 1, 0}, 1, 1, 1, 1, 4);
  CHECK(l.S == seq({"1", "1", "1", "1", "2"}));
  CHECK(l.T == seq({"1", "1", "2", "2", "2"}));
  CHECK_THROWS_AS(solve_linear_b({1, 1, 1, 1}, 1, 1, 1, 1, 0), InvalidInput);
}

TEST_CASE("closed_st_b examples and equivalence") {
  CHECK(closed_st_b({1, 1, 1, 1}, 1, 1, 1, 1, 4).first == 3);
  CHECK(closed_st_b({2, 0, 1, 0}, 1, 1, 1, 1, 4).first == 2);
  const SystemBParams any{R("-2/3"), 4, R("5/7"), R("-1")};
  CHECK(closed_st_b(any, 2, 3, 4, 5, 0) == std::pair<Rational, Rational>{2, 4});
  CHECK(closed_st_b(any, 2, 3, 4, 5, 1) == std::pair<Rational, Rational>{3, 5});

  Sampler s(32);
  for (int k = 0; k < 60; ++k) {
    const SystemBParams p = s.params_b();
    const Rational S0 = s.rational(), S1 = s.rational(), T0 = s.rational(), T1 = s.rational();
    // S(n+2) = c T(n) + d, T(n+2) = a S(n) + b
    std::vector<Rational> S{S0, S1}, T{T0, T1};
    for (std::size_t n = 0; n + 2 <= 80; ++n) {
      S.push_back(p.c * T[n] + p.d);
      T.push_back(p.a * S[n] + p.b);
    }
    for (long n = 0; n <= 80; ++n) {
      const auto st = closed_st_b(p, S0, S1, T0, T1, n);
      CHECK(st.first == S[static_cast<std::size_t>(n)]);
      CHECK(st.second == T[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("reconstruct_a") {
  const LinearSeq lin{seq({"1", "2", "3", "4"}), seq({"1", "2", "3", "4"})};
  const Trajectory t = reconstruct_a(lin, 1, 1);
  CHECK(t.first == seq({"1", "1", "1/2", "2/3", "3/8"}));
  const Trajectory ones = reconstruct_a({seq({"1", "1", "1"}), seq({"1", "1", "1"})}, 1, 1);
  CHECK(ones.first == seq({"1", "1", "1", "1"}));
  CHECK_THROWS_AS(reconstruct_a({seq({"1", "0"}), seq({"1", "1"})}, 1, 1), ForbiddenInput);
}

TEST_CASE("reduction round trip") {
  Sampler s(41);
  int done = 0;
  for (int k = 0; k < 100; ++k) {
    const SystemAParams p = s.params_a();
    const SystemAInitial ics = s.ics_a();
    const Trajectory t = iterate_a(p, ics, 30);
    if (t.is_singular() || (ics.u0 * ics.v1).is_zero() || (ics.v0 * ics.u1).is_zero()) continue;
    const LinearSeq lin = linearize(invariants_a(t));
    for (std::size_t n = 0; n < lin.S.size(); ++n) {
      CHECK(t.second[n] * t.first[n + 1] * lin.S[n] == 1);
    }
    const Trajectory back = reconstruct_a(lin, ics.u0, ics.v0);
    CHECK(back.first == t.first);
    CHECK(back.second == t.second);
    ++done;
  }
  CHECK(done > 50);
  done = 0;
  for (int k = 0; k < 100; ++k) {
    const SystemBParams p = s.params_b();
    const SystemBInitial ics = s.ics_b();
    const Trajectory t = iterate_b(p, ics, 30);
    if (t.is_singular()) continue;
    const Trajectory back = reconstruct_b(linearize(invariants_b(t)), ics.x0, ics.y0);
    CHECK(back.first == t.first);
    CHECK(back.second == t.second);
    ++done;
  }
  CHECK(done > 50);
}

TEST_CASE("aux seeds") {
  const auto a = aux_seed_a({1, 2, 3, 4});
  CHECK(a.S0 == R("1/6"));
  CHECK(a.T0 == R("1/4"));
  CHECK_THROWS_AS(aux_seed_a({1, 2, 0, 4}), ForbiddenInput);
  const auto b = aux_seed_b({1, 2, 3, 4, 5, 6});
  CHECK(b.S0 == R("1/5"));
  CHECK(b.S1 == R("1/12"));
  CHECK(b.T0 == R("1/8"));
  CHECK(b.T1 == R("1/15"));
}
