#include "sde/difftest.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "sde/closed_form.hpp"
#include "sde/errors.hpp"
#include "sde/forbidden.hpp"
#include "sde/sampling.hpp"

namespace sde {

namespace {

const std::vector<std::string_view> kStrataA = {"generic", "ab=1",     "a=1",   "b=1",
                                                "a=1,b=-1", "a=-1,b=1", "a=b=1", "a=b=-1"};
const std::vector<std::string_view> kStrataB = {"generic", "ac=1", "a=b=d=1,c=-1",
                                                "a=b=c=d=1"};

Rational nonzero_except_units(Sampler& s) {
  for (;;) {
    Rational q = s.nonzero();
    if (q != 1 && q != -1) return q;
  }
}

Rational other_than_one(Sampler& s) {
  for (;;) {
    Rational q = s.rational();
    if (q != 1) return q;
  }
}

SystemAParams draw_params_a(Sampler& s, std::size_t stratum) {
  switch (stratum) {
    case 1: {
      const Rational a = nonzero_except_units(s);
      return {a, a.reciprocal()};
    }
    case 2: return {1, other_than_one(s)};
    case 3: return {other_than_one(s), 1};
    case 4: return {1, -1};
    case 5: return {-1, 1};
    case 6: return {1, 1};
    case 7: return {-1, -1};
    default: return s.params_a();
  }
}

SystemBParams draw_params_b(Sampler& s, std::size_t stratum) {
  switch (stratum) {
    case 1: {
      const Rational a = s.nonzero();
      return {a, s.rational(), a.reciprocal(), s.rational()};
    }
    case 2: return {1, 1, -1, 1};
    case 3: return {1, 1, 1, 1};
    default: return s.params_b();
  }
}

std::string show(const Point& p) { return "(" + p.first.str() + ", " + p.second.str() + ")"; }

// Runs `eval` for n = 0..N against the trajectory; records the first
// disagreement into `out`.
void check(TrialResult& out, const std::string& name, const Trajectory& t, long N,
           const std::string& repro, const std::function<Point(long)>& eval) {
  bool ok = true;
  std::string why;
  for (long n = 0; n <= N && ok; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const Point want{t.first[i], t.second[i]};
    try {
      const Point got = eval(n);
      if (!(got == want)) {
        ok = false;
        why = "n=" + std::to_string(n) + " iterate=" + show(want) + " closed=" + show(got);
      }
    } catch (const std::exception& e) {
      ok = false;
      why = "n=" + std::to_string(n) + " threw: " + e.what();
    }
  }
  out.checks[name] = ok;
  if (!ok && !out.counterexample) out.counterexample = repro + " check=" + name + " " + why;
}

TrialResult trial_a(std::size_t stratum, std::uint64_t seed, long N) {
  TrialResult out;
  out.stratum = std::string(kStrataA[stratum]);
  Sampler s(seed);
  for (int attempt = 0; attempt <= s.distribution().retry_cap; ++attempt) {
    const SystemAParams p = draw_params_a(s, stratum);
    const SystemAInitial ics = s.ics_a();
    if (!check_forbidden_a(p, ics, N / 2 + 1).clean()) continue;
    const Trajectory t = iterate_a(p, ics, N);
    if (t.is_singular()) continue;

    std::ostringstream repro;
    repro << "seed=" << seed << " stratum=" << out.stratum << " a=" << p.a << " b=" << p.b
          << " u0=" << ics.u0 << " u1=" << ics.u1 << " v0=" << ics.v0 << " v1=" << ics.v1;
    const std::string r = repro.str();

    check(out, "product", t, N, r, [&](long n) { return solve_a_product(p, ics, n); });
    std::vector<Point> sweep;
    try {
      sweep = solve_a_product_sweep(p, ics, N);
    } catch (const std::exception&) {
    }
    check(out, "product-sweep", t, N, r, [&](long n) {
      if (sweep.size() != static_cast<std::size_t>(N) + 1)
        throw std::runtime_error("sweep failed");
      return sweep[static_cast<std::size_t>(n)];
    });
    for (CaseA c : kAllCasesA) {
      if (c == CaseA::Product || !case_applies(c, p)) continue;
      check(out, std::string(to_string(c)), t, N, r,
            [&](long n) { return solve_a_case(c, p, ics, n); });
    }
    return out;
  }
  out.skipped = true;
  return out;
}

TrialResult trial_b(std::size_t stratum, std::uint64_t seed, long N) {
  TrialResult out;
  out.stratum = std::string(kStrataB[stratum]);
  Sampler s(seed);
  for (int attempt = 0; attempt <= s.distribution().retry_cap; ++attempt) {
    const SystemBParams p = draw_params_b(s, stratum);
    const SystemBInitial ics = s.ics_b();
    if (!check_forbidden_b(p, ics, N / 4 + 1).clean()) continue;
    const Trajectory t = iterate_b(p, ics, N);
    if (t.is_singular()) continue;

    std::ostringstream repro;
    repro << "seed=" << seed << " stratum=" << out.stratum << " a=" << p.a << " b=" << p.b
          << " c=" << p.c << " d=" << p.d << " x0=" << ics.x0 << " x1=" << ics.x1
          << " x2=" << ics.x2 << " y0=" << ics.y0 << " y1=" << ics.y1 << " y2=" << ics.y2;
    const std::string r = repro.str();

    check(out, "product", t, N, r, [&](long n) { return solve_b_product(p, ics, n); });
    std::vector<Point> sweep;
    try {
      sweep = solve_b_product_sweep(p, ics, N);
    } catch (const std::exception&) {
    }
    check(out, "product-sweep", t, N, r, [&](long n) {
      if (sweep.size() != static_cast<std::size_t>(N) + 1)
        throw std::runtime_error("sweep failed");
      return sweep[static_cast<std::size_t>(n)];
    });
    for (CaseB c : kAllCasesB) {
      if (!case_applies(c, p)) continue;
      check(out, std::string(to_string(c)), t, N, r,
            [&](long n) { return solve_b_case(c, p, ics, n); });
    }
    return out;
  }
  out.skipped = true;
  return out;
}

}  // namespace

const std::vector<std::string_view>& strata(SystemKind system) {
  return system == SystemKind::A ? kStrataA : kStrataB;
}

TrialResult run_trial(SystemKind system, std::size_t stratum, std::uint64_t seed, long N) {
  if (N < (system == SystemKind::A ? 1 : 2))
    throw InvalidInput("difftest: N too small for the system");
  if (stratum >= strata(system).size()) throw InvalidInput("difftest: unknown stratum");
  return system == SystemKind::A ? trial_a(stratum, seed, N) : trial_b(stratum, seed, N);
}

DifftestReport run_difftest(SystemKind system, long trials, long N, std::uint64_t seed,
                            unsigned threads) {
  if (trials < 0) throw InvalidInput("difftest: trials must be >= 0");
  if (N < (system == SystemKind::A ? 1 : 2))
    throw InvalidInput("difftest: N too small for the system");
  DifftestReport rep;
  rep.system = system;
  rep.trials = trials;
  rep.N = N;
  rep.seed = seed;
  rep.distribution = Distribution{}.describe();
  const auto& names = strata(system);

  std::vector<TrialResult> results(static_cast<std::size_t>(trials));
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long i; (i = next.fetch_add(1)) < trials;)
      results[static_cast<std::size_t>(i)] =
          run_trial(system, static_cast<std::size_t>(i) % names.size(),
                    trial_seed(seed, static_cast<std::uint64_t>(i)), N);
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<long>(threads, std::max<long>(trials, 1)));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (long i = 0; i < trials; ++i) {
    const TrialResult& r = results[static_cast<std::size_t>(i)];
    if (r.skipped) {
      ++rep.skipped;
      continue;
    }
    ++rep.per_stratum[r.stratum];
    for (const auto& [name, ok] : r.checks) {
      auto& tally = rep.per_check[name];
      ++tally.run;
      if (ok) ++tally.agreed;
    }
    if (r.passed()) {
      ++rep.passed;
    } else {
      ++rep.failed;
      if (!rep.first_failed_trial) {
        rep.first_failed_trial = i;
        rep.first_counterexample = r.counterexample;
      }
    }
  }
  return rep;
}

}  // namespace sde
