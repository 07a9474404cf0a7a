#include "sde/sampling.hpp"

namespace sde {

std::string Distribution::describe() const {
  return "numerator uniform in [" + std::to_string(num_min) + ", " + std::to_string(num_max) +
         "], denominator uniform in [" + std::to_string(den_min) + ", " +
         std::to_string(den_max) + "], mt19937_64 seeded per trial by splitmix64(seed + i), " +
         "retry cap " + std::to_string(retry_cap);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

long Sampler::integer(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do r = rng_();
  while (r >= limit);
  return lo + static_cast<long>(r % span);
}

Rational Sampler::rational() {
  const long num = integer(dist_.num_min, dist_.num_max);
  const long den = integer(dist_.den_min, dist_.den_max);
  return Rational(num, den);
}

Rational Sampler::nonzero() {
  for (;;) {
    Rational q = rational();
    if (!q.is_zero()) return q;
  }
}

SystemAParams Sampler::params_a() {
  SystemAParams p;
  p.a = rational();
  p.b = rational();
  return p;
}

SystemBParams Sampler::params_b() {
  SystemBParams p;
  p.a = rational();
  p.b = rational();
  p.c = rational();
  p.d = rational();
  return p;
}

SystemAInitial Sampler::ics_a() {
  SystemAInitial ics;
  ics.u0 = rational();
  ics.u1 = rational();
  ics.v0 = rational();
  ics.v1 = rational();
  return ics;
}

SystemBInitial Sampler::ics_b() {
  SystemBInitial ics;
  ics.x0 = nonzero();
  ics.x1 = nonzero();
  ics.x2 = nonzero();
  ics.y0 = nonzero();
  ics.y1 = nonzero();
  ics.y2 = nonzero();
  return ics;
}

}  // namespace sde
