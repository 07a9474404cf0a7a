#include "sde/forbidden.hpp"

#include <sstream>

#include "sde/errors.hpp"

namespace sde {

namespace {

void add(ForbiddenReport& rep, std::string id, long r, long step, Component c) {
  rep.violated.push_back({std::move(id), r, step, c});
}

void predict(ForbiddenReport& rep, long step, Component c) {
  if (!rep.predicted_singular_step || step < *rep.predicted_singular_step ||
      (step == *rep.predicted_singular_step && c == Component::First &&
       rep.predicted_component != Component::First)) {
    rep.predicted_singular_step = step;
    rep.predicted_component = c;
  }
}

void finish(ForbiddenReport& rep) {
  for (const auto& v : rep.violated)
    if (v.step) predict(rep, *v.step, v.component);
}

}  // namespace

ForbiddenReport check_forbidden_a(const SystemAParams& p, const SystemAInitial& ics,
                                  long horizon) {
  ForbiddenReport rep;
  const Rational ab = p.a * p.b;
  const Rational z0 = ics.u0 * ics.v1;  // 1/T0
  const Rational w0 = ics.v0 * ics.u1;  // 1/S0
  const bool alpha = !z0.is_zero();
  const bool beta = !w0.is_zero();
  if (!alpha) rep.inadmissible.push_back("u0*v1");
  if (!beta) rep.inadmissible.push_back("v0*u1");

  for (long r = 0; r <= horizon; ++r) {
    const Rational g = geometric_sum(ab, r);
    const Rational g_prev = geometric_sum(ab, r - 1);
    const Rational abr = pow(ab, r);
    if (alpha) {
      // u0 v1 · S(2r+1) and u0 v1 · T(2r)
      if ((abr * p.a + z0 * (g + p.a * g_prev)).is_zero())
        add(rep, "S(2r+1)", r, 2 * r + 2, Component::First);
      if ((abr + z0 * (1 + p.b) * g_prev).is_zero())
        add(rep, "T(2r)", r, 2 * r + 1, Component::Second);
    }
    if (beta) {
      // v0 u1 · T(2r+1) and v0 u1 · S(2r)
      if ((abr * p.b + w0 * (g + p.b * g_prev)).is_zero())
        add(rep, "T(2r+1)", r, 2 * r + 2, Component::Second);
      if ((abr + w0 * (1 + p.a) * g_prev).is_zero())
        add(rep, "S(2r)", r, 2 * r + 1, Component::First);
    }
  }
  finish(rep);

  // A zero seed product makes one chain of invariants vanish identically;
  // the recurrence then reduces to u(n+2) = u(n)/a or v(n+2) = v(n)/b along it.
  if (!alpha) {
    if (p.a.is_zero()) predict(rep, 2, Component::First);
    else if (p.b.is_zero()) predict(rep, 3, Component::Second);
  }
  if (!beta) {
    if (p.b.is_zero()) predict(rep, 2, Component::Second);
    else if (p.a.is_zero()) predict(rep, 3, Component::First);
  }
  return rep;
}

ForbiddenReport check_forbidden_b(const SystemBParams& p, const SystemBInitial& ics,
                                  long horizon) {
  ForbiddenReport rep;
  const Rational x0y1 = ics.x0 * ics.y1, x1y2 = ics.x1 * ics.y2;
  const Rational y0x1 = ics.y0 * ics.x1, y1x2 = ics.y1 * ics.x2;
  struct Seed {
    const char* id;
    const Rational& q;
  };
  for (const Seed s : {Seed{"x0*y1", x0y1}, Seed{"x1*y2", x1y2}, Seed{"y0*x1", y0x1},
                       Seed{"y1*x2", y1x2}}) {
    if (s.q.is_zero()) {
      rep.inadmissible.push_back(s.id);
      rep.violated.push_back({s.id, 0, std::nullopt, Component::First});
    }
  }
  if (!rep.inadmissible.empty()) return rep;

  const Rational &a = p.a, &b = p.b, &c = p.c, &d = p.d;
  const Rational ac = a * c;
  for (long r = 0; r <= horizon; ++r) {
    const Rational g = geometric_sum(ac, r);
    const Rational g_prev = geometric_sum(ac, r - 1);
    const Rational acr = pow(ac, r);
    const long k = 4 * r;
    // Each expression is the seed product times S(k) or T(k).
    if ((acr + x0y1 * (d + b * c) * g_prev).is_zero())
      add(rep, "S(4r)", r, k + 1, Component::Second);
    if ((acr + y0x1 * (b + a * d) * g_prev).is_zero())
      add(rep, "T(4r)", r, k + 1, Component::First);
    if ((acr + x1y2 * (d + b * c) * g_prev).is_zero())
      add(rep, "S(4r+1)", r, k + 2, Component::Second);
    if ((acr + y1x2 * (b + a * d) * g_prev).is_zero())
      add(rep, "T(4r+1)", r, k + 2, Component::First);
    if ((acr * c + y0x1 * (d * g + b * c * g_prev)).is_zero())
      add(rep, "S(4r+2)", r, k + 3, Component::Second);
    if ((acr * a + x0y1 * (b * g + a * d * g_prev)).is_zero())
      add(rep, "T(4r+2)", r, k + 3, Component::First);
    if ((acr * c + y1x2 * (d * g + b * c * g_prev)).is_zero())
      add(rep, "S(4r+3)", r, k + 4, Component::Second);
    if ((acr * a + x1y2 * (b * g + a * d * g_prev)).is_zero())
      add(rep, "T(4r+3)", r, k + 4, Component::First);
  }
  finish(rep);
  return rep;
}

namespace {

std::string describe(const std::optional<long>& step, const std::optional<Component>& c) {
  if (!step) return "regular";
  return "singular at step " + std::to_string(*step) + " (" + to_string(*c) + ")";
}

Verdict compare(const ForbiddenReport& rep, const Trajectory& t, long N,
                const std::string& repro) {
  std::optional<long> pred_step;
  std::optional<Component> pred_comp;
  if (rep.predicted_singular_step && *rep.predicted_singular_step <= N) {
    pred_step = rep.predicted_singular_step;
    pred_comp = rep.predicted_component;
  }
  std::optional<long> obs_step;
  std::optional<Component> obs_comp;
  if (t.singular) {
    obs_step = t.singular->step;
    obs_comp = t.singular->component;
  }
  if (pred_step == obs_step && pred_comp == obs_comp) {
    if (!obs_step) return {VerdictKind::AgreeRegular, std::nullopt, ""};
    return {VerdictKind::AgreeSingular, obs_step, ""};
  }
  return {VerdictKind::Mismatch, obs_step,
          repro + " N=" + std::to_string(N) + ": predicted " + describe(pred_step, pred_comp) +
              ", observed " + describe(obs_step, obs_comp)};
}

}  // namespace

Verdict predict_vs_observe_a(const SystemAParams& p, const SystemAInitial& ics, long N) {
  if (N < 1) throw InvalidInput("predict_vs_observe requires N >= 1");
  const ForbiddenReport rep = check_forbidden_a(p, ics, N / 2);
  const Trajectory t = iterate_a(p, ics, N);
  std::ostringstream repro;
  repro << "system A a=" << p.a << " b=" << p.b << " u0=" << ics.u0 << " u1=" << ics.u1
        << " v0=" << ics.v0 << " v1=" << ics.v1;
  return compare(rep, t, N, repro.str());
}

Verdict predict_vs_observe_b(const SystemBParams& p, const SystemBInitial& ics, long N) {
  if (N < 2) throw InvalidInput("predict_vs_observe requires N >= 2 for system B");
  const ForbiddenReport rep = check_forbidden_b(p, ics, N / 4);
  if (!rep.inadmissible.empty()) return {VerdictKind::Inadmissible, std::nullopt, ""};
  const Trajectory t = iterate_b(p, ics, N);
  std::ostringstream repro;
  repro << "system B a=" << p.a << " b=" << p.b << " c=" << p.c << " d=" << p.d
        << " x0=" << ics.x0 << " x1=" << ics.x1 << " x2=" << ics.x2 << " y0=" << ics.y0
        << " y1=" << ics.y1 << " y2=" << ics.y2;
  return compare(rep, t, N, repro.str());
}

const char* to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::AgreeRegular: return "agree-regular";
    case VerdictKind::AgreeSingular: return "agree-singular";
    case VerdictKind::Mismatch: return "mismatch";
    case VerdictKind::Inadmissible: return "inadmissible";
  }
  return "?";
}

}  // namespace sde
