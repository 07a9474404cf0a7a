#include "sde/systems.hpp"

#include <stdexcept>

#include "sde/errors.hpp"

namespace sde {

namespace {

std::string sub(const std::string& name, long index) {
  return name + "_" + std::to_string(index);
}

}  // namespace

const Rational& Trajectory::first_at(long label) const {
  return first.at(static_cast<std::size_t>(label - origin));
}

const Rational& Trajectory::second_at(long label) const {
  return second.at(static_cast<std::size_t>(label - origin));
}

bool operator==(const Singularity& l, const Singularity& r) {
  return l.step == r.step && l.component == r.component &&
         l.denominator_expression == r.denominator_expression;
}

bool operator==(const Trajectory& l, const Trajectory& r) {
  return l.system == r.system && l.labels == r.labels && l.origin == r.origin &&
         l.first == r.first && l.second == r.second && l.singular == r.singular;
}

Trajectory iterate_a(const SystemAParams& p, const SystemAInitial& ics, long N) {
  if (N < 1) throw InvalidInput("iterate_a requires N >= 1");
  Trajectory t;
  t.system = SystemKind::A;
  t.labels = {"u", "v"};
  auto& u = t.first;
  auto& v = t.second;
  u.reserve(static_cast<std::size_t>(N) + 1);
  v.reserve(static_cast<std::size_t>(N) + 1);
  u = {ics.u0, ics.u1};
  v = {ics.v0, ics.v1};

  for (long n = 0; n + 2 <= N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const Rational du = p.a + u[i] * v[i + 1];
    if (du.is_zero()) {
      t.singular = Singularity{n + 2, Component::First,
                               "a + " + sub("u", n) + "*" + sub("v", n + 1)};
      break;
    }
    const Rational dv = p.b + v[i] * u[i + 1];
    if (dv.is_zero()) {
      t.singular = Singularity{n + 2, Component::Second,
                               "b + " + sub("v", n) + "*" + sub("u", n + 1)};
      break;
    }
    u.push_back(u[i] / du);
    v.push_back(v[i] / dv);
  }
  return t;
}

Trajectory iterate_b(const SystemBParams& p, const SystemBInitial& ics, long N) {
  if (N < 2) throw InvalidInput("iterate_b requires N >= 2");
  for (const Rational* q : {&ics.x0, &ics.x1, &ics.x2, &ics.y0, &ics.y1, &ics.y2}) {
    if (q->is_zero()) throw InvalidInput("iterate_b requires nonzero initial values");
  }
  Trajectory t;
  t.system = SystemKind::B;
  t.labels = {"x", "y"};
  auto& x = t.first;
  auto& y = t.second;
  x.reserve(static_cast<std::size_t>(N) + 1);
  y.reserve(static_cast<std::size_t>(N) + 1);
  x = {ics.x0, ics.x1, ics.x2};
  y = {ics.y0, ics.y1, ics.y2};

  for (long n = 0; n + 3 <= N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const Rational w = x[i] * y[i + 1];
    const Rational dx = y[i + 2] * (p.a + p.b * w);
    if (dx.is_zero()) {
      t.singular = Singularity{n + 3, Component::First,
                               sub("y", n + 2) + "*(a + b*" + sub("x", n) + "*" +
                                   sub("y", n + 1) + ")"};
      break;
    }
    const Rational z = y[i] * x[i + 1];
    const Rational dy = x[i + 2] * (p.c + p.d * z);
    if (dy.is_zero()) {
      t.singular = Singularity{n + 3, Component::Second,
                               sub("x", n + 2) + "*(c + d*" + sub("y", n) + "*" +
                                   sub("x", n + 1) + ")"};
      break;
    }
    x.push_back(w / dx);
    y.push_back(z / dy);
  }
  return t;
}

Trajectory shift_back(Trajectory t, int offset) {
  if (offset != 1 && offset != 2) throw InvalidInput("shift_back offset must be 1 or 2");
  t.origin -= offset;
  t.labels = {"x", "y"};
  if (t.singular) t.singular->step -= offset;
  return t;
}

const char* to_string(SystemKind s) { return s == SystemKind::A ? "A" : "B"; }

const char* to_string(Component c) { return c == Component::First ? "first" : "second"; }

}  // namespace sde
