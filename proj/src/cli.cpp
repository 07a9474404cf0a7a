#include "sde/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sde/closed_form.hpp"
#include "sde/difftest.hpp"
#include "sde/errors.hpp"
#include "sde/forbidden.hpp"
#include "sde/json_io.hpp"
#include "sde/reduction.hpp"
#include "sde/sampling.hpp"
#include "sde/symmetry.hpp"
#include "sde/systems.hpp"

namespace sde::cli {

namespace {

using io::Json;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// String-valued options of one subcommand; values are parsed on use so the
// diagnostic can name the offending flag and token.
class Options {
 public:
  explicit Options(CLI::App* app) : app_(app) {}

  void add(const std::string& name, const std::string& help) {
    opts_[name] = app_->add_option("--" + name, values_[name], help);
  }
  void flag(const std::string& name, const std::string& help) {
    app_->add_flag("--" + name, flags_[name], help);
  }

  bool has(const std::string& name) const {
    auto it = opts_.find(name);
    return it != opts_.end() && it->second->count() > 0;
  }
  bool on(const std::string& name) const {
    auto it = flags_.find(name);
    return it != flags_.end() && it->second;
  }
  const std::string& str(const std::string& name) const {
    if (!has(name)) throw Usage("missing required option --" + name);
    return values_.at(name);
  }
  std::string str_or(const std::string& name, const std::string& fallback) const {
    return has(name) ? values_.at(name) : fallback;
  }
  Rational rational(const std::string& name) const {
    try {
      return Rational::parse(str(name));
    } catch (const sde::ParseError& e) {
      throw Usage("--" + name + ": " + e.what());
    }
  }
  long integer(const std::string& name, std::optional<long> fallback = std::nullopt) const {
    if (!has(name)) {
      if (fallback) return *fallback;
      throw Usage("missing required option --" + name);
    }
    return parse_long(values_.at(name), "--" + name);
  }

  static long parse_long(const std::string& text, const std::string& what) {
    long v = 0;
    const auto* end = text.data() + text.size();
    const auto [p, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || p != end || text.empty())
      throw Usage(what + ": cannot parse '" + text + "' as an integer");
    return v;
  }

  CLI::App* app() const { return app_; }

 private:
  CLI::App* app_;
  std::map<std::string, std::string> values_;
  std::map<std::string, bool> flags_;
  std::map<std::string, CLI::Option*> opts_;
};

void add_system(Options& o) { o.add("system", "A or B"); }

void add_params_ics(Options& o) {
  for (const char* p : {"a", "b", "c", "d"}) o.add(p, std::string("parameter ") + p);
  for (const char* v : {"u0", "u1", "v0", "v1"}) o.add(v, "System A initial value");
  for (const char* v : {"x0", "x1", "x2", "y0", "y1", "y2"}) o.add(v, "System B initial value");
}

void add_output(Options& o, bool csv) {
  o.add("format", csv ? "json (default) or csv" : "json");
  o.add("output", "write the report to this file instead of standard output");
}

SystemKind system_of(const Options& o) {
  const std::string& s = o.str("system");
  if (s == "A" || s == "a") return SystemKind::A;
  if (s == "B" || s == "b") return SystemKind::B;
  throw Usage("--system: expected A or B, got '" + s + "'");
}

SystemAParams params_a(const Options& o) { return {o.rational("a"), o.rational("b")}; }
SystemBParams params_b(const Options& o) {
  return {o.rational("a"), o.rational("b"), o.rational("c"), o.rational("d")};
}
SystemAInitial ics_a(const Options& o) {
  return {o.rational("u0"), o.rational("u1"), o.rational("v0"), o.rational("v1")};
}
SystemBInitial ics_b(const Options& o) {
  return {o.rational("x0"), o.rational("x1"), o.rational("x2"),
          o.rational("y0"), o.rational("y1"), o.rational("y2")};
}

long nonnegative(const Options& o, const std::string& name,
                 std::optional<long> fallback = std::nullopt) {
  const long v = o.integer(name, fallback);
  if (v < 0) throw Usage("--" + name + " must be >= 0");
  return v;
}

bool csv_format(const Options& o, bool csv_supported) {
  const std::string f = o.str_or("format", "json");
  if (f == "json") return false;
  if (f == "csv" && csv_supported) return true;
  throw Usage("--format: unsupported format '" + f + "'");
}

std::uint64_t seed_of(const Options& o) {
  std::string text;
  if (o.has("seed")) {
    text = o.str("seed");
  } else if (const char* env = std::getenv("SDE_SEED")) {
    text = env;
  } else {
    throw Usage("a seed is required: pass --seed or set SDE_SEED");
  }
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end || text.empty())
    throw Usage("seed: cannot parse '" + text + "' as an unsigned integer");
  return v;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (!o.has("output")) {
    out << text;
    return;
  }
  std::ofstream f(o.str("output"), std::ios::binary);
  if (!f) throw Usage("cannot open output file '" + o.str("output") + "'");
  f << text;
}

void put_system_inputs(Json& doc, SystemKind sys, const Options& o) {
  if (sys == SystemKind::A) {
    doc["params"] = io::to_json(params_a(o));
    doc["initial"] = io::to_json(ics_a(o));
  } else {
    doc["params"] = io::to_json(params_b(o));
    doc["initial"] = io::to_json(ics_b(o));
  }
}

Trajectory run_iterate_a(const Options& o, long N) {
  const SystemAParams p = params_a(o);
  return iterate_a(p, ics_a(o), N);
}

Trajectory run_iterate_b(const Options& o, long N) {
  const SystemBParams p = params_b(o);
  return iterate_b(p, ics_b(o), N);
}

const std::array<std::string, 2>& labels_of(SystemKind sys) {
  static const std::array<std::string, 2> a{"u", "v"}, b{"x", "y"};
  return sys == SystemKind::A ? a : b;
}

std::string show(const Point& p) { return "(" + p.first.str() + ", " + p.second.str() + ")"; }

// ---- iterate ---------------------------------------------------------------

int cmd_iterate(const Options& o, std::ostream& out) {
  const SystemKind sys = system_of(o);
  const long N = nonnegative(o, "n");
  const bool csv = csv_format(o, true);
  Trajectory t = sys == SystemKind::A ? run_iterate_a(o, N) : run_iterate_b(o, N);
  if (o.on("shift-back")) t = shift_back(std::move(t), sys == SystemKind::A ? 1 : 2);

  if (csv) {
    emit(o, io::to_csv(t.labels, t.origin, t.first, t.second), out);
  } else {
    Json doc = io::header("trajectory", sys);
    put_system_inputs(doc, sys, o);
    doc["N"] = N;
    io::put_trajectory(doc, t);
    emit(o, io::dump(doc), out);
  }
  return t.is_singular() && o.on("require-regular") ? kSingular : kOk;
}

// ---- solve -----------------------------------------------------------------

std::vector<Point> solve_points(const Options& o, SystemKind sys, long N, std::string& tag) {
  const std::string req = o.str_or("case", "auto");
  std::vector<Point> pts;
  if (sys == SystemKind::A) {
    const SystemAParams p = params_a(o);
    const SystemAInitial ics = ics_a(o);
    std::optional<CaseA> c = req == "auto" ? std::optional(auto_case(p)) : parse_case_a(req);
    if (!c) throw Usage("--case: unknown System A case '" + req + "'");
    tag = std::string(to_string(*c));
    if (*c == CaseA::Product) return solve_a_product_sweep(p, ics, N);
    for (long n = 0; n <= N; ++n) pts.push_back(solve_a_case(*c, p, ics, n));
  } else {
    const SystemBParams p = params_b(o);
    const SystemBInitial ics = ics_b(o);
    std::optional<CaseB> c = req == "auto" ? std::optional(auto_case(p)) : parse_case_b(req);
    if (!c) throw Usage("--case: unknown System B case '" + req + "'");
    tag = std::string(to_string(*c));
    for (long n = 0; n <= N; ++n) pts.push_back(solve_b_case(*c, p, ics, n));
  }
  return pts;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const SystemKind sys = system_of(o);
  const long N = nonnegative(o, "n");
  const bool csv = csv_format(o, true);
  std::string tag;
  const std::vector<Point> pts = solve_points(o, sys, N, tag);
  if (csv) {
    std::vector<Rational> f, s;
    for (const auto& p : pts) {
      f.push_back(p.first);
      s.push_back(p.second);
    }
    emit(o, io::to_csv(labels_of(sys), 0, f, s), out);
  } else {
    Json doc = io::header("solution", sys);
    doc["case"] = tag;
    put_system_inputs(doc, sys, o);
    doc["N"] = N;
    io::put_points(doc, labels_of(sys), pts);
    emit(o, io::dump(doc), out);
  }
  return kOk;
}

// ---- reduce ----------------------------------------------------------------

struct Reduction {
  InvariantSeq inv;
  LinearSeq lin;
  std::vector<std::pair<std::string, bool>> checks;
};

Reduction reduce_a(const SystemAParams& p, const SystemAInitial& ics, const Trajectory& t,
                   long N) {
  Reduction r;
  r.inv = invariants_a(t);
  r.lin = linearize(r.inv);
  bool mobius = true;
  for (long n = 0; n + 1 < N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const Rational& w = r.inv.w[i];
    const Rational& z = r.inv.z[i];
    mobius = mobius && r.inv.w[i + 1] == z / (p.a + z) && r.inv.z[i + 1] == w / (p.b + w);
  }
  const AuxSeedA seed = aux_seed_a(ics);
  const LinearSeq direct = solve_linear_a(p, seed.S0, seed.T0, N - 1);
  bool closed = true;
  for (long n = 0; n < N; ++n) {
    const auto st = closed_st_a(p, seed.S0, seed.T0, n);
    closed = closed && st.first == r.lin.S[static_cast<std::size_t>(n)] &&
             st.second == r.lin.T[static_cast<std::size_t>(n)];
  }
  const Trajectory back = reconstruct_a(r.lin, ics.u0, ics.v0);
  r.checks = {{"invariant_recurrence", mobius},
              {"linear_recurrence", direct.S == r.lin.S && direct.T == r.lin.T},
              {"closed_form", closed},
              {"reconstruction", back.first == t.first && back.second == t.second}};
  return r;
}

Reduction reduce_b(const SystemBParams& p, const SystemBInitial& ics, const Trajectory& t,
                   long N) {
  Reduction r;
  r.inv = invariants_b(t);
  r.lin = linearize(r.inv);
  bool mobius = true;
  for (long n = 0; n + 2 < N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const Rational& w = r.inv.w[i];
    const Rational& z = r.inv.z[i];
    mobius = mobius && r.inv.w[i + 2] == z / (p.c + p.d * z) &&
             r.inv.z[i + 2] == w / (p.a + p.b * w);
  }
  const AuxSeedB seed = aux_seed_b(ics);
  const LinearSeq direct = solve_linear_b(p, seed.S0, seed.S1, seed.T0, seed.T1, N - 1);
  bool closed = true;
  for (long n = 0; n < N; ++n) {
    const auto st = closed_st_b(p, seed.S0, seed.S1, seed.T0, seed.T1, n);
    closed = closed && st.first == r.lin.S[static_cast<std::size_t>(n)] &&
             st.second == r.lin.T[static_cast<std::size_t>(n)];
  }
  const Trajectory back = reconstruct_b(r.lin, ics.x0, ics.y0);
  r.checks = {{"invariant_recurrence", mobius},
              {"linear_recurrence", direct.S == r.lin.S && direct.T == r.lin.T},
              {"closed_form", closed},
              {"reconstruction", back.first == t.first && back.second == t.second}};
  return r;
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  const SystemKind sys = system_of(o);
  const long N = nonnegative(o, "n");
  const bool csv = csv_format(o, true);
  if (N < (sys == SystemKind::A ? 1 : 2)) throw Usage("--n too small for a reduction");
  const Trajectory t = sys == SystemKind::A ? run_iterate_a(o, N) : run_iterate_b(o, N);
  if (t.is_singular()) {
    err << "error: trajectory is singular at step " << t.singular->step << " ("
        << to_string(t.singular->component) << "), denominator "
        << t.singular->denominator_expression << "\n";
    return kSingular;
  }
  Reduction r;
  if (sys == SystemKind::A) {
    const SystemAParams p = params_a(o);
    r = reduce_a(p, ics_a(o), t, N);
  } else {
    const SystemBParams p = params_b(o);
    r = reduce_b(p, ics_b(o), t, N);
  }
  bool all = true;
  for (const auto& c : r.checks) all = all && c.second;

  if (csv) {
    std::ostringstream os;
    os << "n,w,z,S,T\n";
    for (std::size_t i = 0; i < r.inv.w.size(); ++i)
      os << i << "," << r.inv.w[i] << "," << r.inv.z[i] << "," << r.lin.S[i] << ","
         << r.lin.T[i] << "\n";
    emit(o, os.str(), out);
  } else {
    Json doc = io::header("reduction", sys);
    put_system_inputs(doc, sys, o);
    doc["N"] = N;
    doc["w"] = io::to_json(r.inv.w);
    doc["z"] = io::to_json(r.inv.z);
    doc["S"] = io::to_json(r.lin.S);
    doc["T"] = io::to_json(r.lin.T);
    Json checks = Json::object();
    for (const auto& [name, ok] : r.checks) checks[name] = ok;
    doc["checks"] = std::move(checks);
    emit(o, io::dump(doc), out);
  }
  return all ? kOk : kMismatch;
}

// ---- verify ----------------------------------------------------------------

io::Sequences load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Usage("cannot read '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Usage("'" + path + "' is not valid JSON: " + e.what());
  }
  try {
    return io::read_sequences(doc);
  } catch (const std::invalid_argument& e) {
    throw Usage("'" + path + "': " + e.what());
  }
}

int verify_files(const Options& o, std::ostream& out) {
  const std::string lp = o.str("left"), rp = o.str("right");
  const io::Sequences l = load(lp), r = load(rp);
  Json doc;
  doc["schema_version"] = io::kSchemaVersion;
  doc["kind"] = "verification";
  doc["mode"] = "files";
  doc["left"] = lp;
  doc["right"] = rp;
  std::optional<std::string> diff;
  if (l.system != r.system) diff = "systems differ: " + l.system + " vs " + r.system;
  else if (l.origin != r.origin) diff = "index origins differ";
  else if (l.first.size() != r.first.size()) diff = "lengths differ";
  std::optional<long> at;
  if (!diff) {
    for (std::size_t i = 0; i < l.first.size() && !at; ++i)
      if (l.first[i] != r.first[i] || l.second[i] != r.second[i]) at = static_cast<long>(i);
  }
  doc["compared"] = diff ? 0 : static_cast<long>(l.first.size());
  doc["agree"] = !diff && !at;
  if (diff) {
    doc["first_difference"] = *diff;
  } else if (at) {
    const auto i = static_cast<std::size_t>(*at);
    doc["first_difference"] = {{"n", l.origin + *at},
                               {"left", {l.first[i].str(), l.second[i].str()}},
                               {"right", {r.first[i].str(), r.second[i].str()}}};
  } else {
    doc["first_difference"] = nullptr;
  }
  emit(o, io::dump(doc), out);
  return doc["agree"].get<bool>() ? kOk : kMismatch;
}

// Compares `eval` with the trajectory; returns the case record.
Json verify_case(const std::string& name, const Trajectory& t,
                 const std::function<Point(long)>& eval, int& code) {
  Json rec{{"case", name}};
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Point want{t.first[i], t.second[i]};
    try {
      const Point got = eval(static_cast<long>(i));
      if (!(got == want)) {
        rec["agree"] = false;
        rec["first_difference"] = {{"n", static_cast<long>(i)},
                                   {"iterate", show(want)},
                                   {"closed_form", show(got)}};
        code = std::max<int>(code, kMismatch);
        return rec;
      }
    } catch (const ForbiddenInput& e) {
      rec["agree"] = false;
      rec["first_difference"] = {{"n", static_cast<long>(i)}, {"forbidden", e.what()}};
      if (code == kOk) code = kForbidden;
      return rec;
    }
  }
  rec["agree"] = true;
  rec["first_difference"] = nullptr;
  return rec;
}

int verify_closed_forms(const Options& o, std::ostream& out) {
  const SystemKind sys = system_of(o);
  const long N = nonnegative(o, "n");
  const std::string only = o.str_or("case", "all");
  Json doc = io::header("verification", sys);
  doc["mode"] = "closed-forms";
  put_system_inputs(doc, sys, o);
  doc["N"] = N;
  int code = kOk;
  Json cases = Json::array();
  Trajectory t;
  if (sys == SystemKind::A) {
    const SystemAParams p = params_a(o);
    const SystemAInitial ics = ics_a(o);
    t = iterate_a(p, ics, N);
    if (!t.is_singular()) {
      for (CaseA c : kAllCasesA) {
        const std::string name(to_string(c));
        if (!case_applies(c, p) || (only != "all" && only != name)) continue;
        cases.push_back(verify_case(name, t, [&](long n) { return solve_a_case(c, p, ics, n); },
                                    code));
      }
    }
  } else {
    const SystemBParams p = params_b(o);
    const SystemBInitial ics = ics_b(o);
    t = iterate_b(p, ics, N);
    if (!t.is_singular()) {
      cases.push_back(verify_case("product", t,
                                  [&](long n) { return solve_b_product(p, ics, n); }, code));
      for (CaseB c : kAllCasesB) {
        const std::string name(to_string(c));
        if (!case_applies(c, p) || (only != "all" && only != name)) continue;
        cases.push_back(verify_case(name, t, [&](long n) { return solve_b_case(c, p, ics, n); },
                                    code));
      }
    }
  }
  if (t.is_singular()) {
    doc["singular"] = {{"step", t.singular->step},
                       {"component", to_string(t.singular->component)}};
    code = kSingular;
  } else {
    doc["singular"] = nullptr;
  }
  if (only != "all" && cases.empty() && !t.is_singular())
    throw Usage("--case '" + only + "' is unknown or does not apply");
  doc["cases"] = std::move(cases);
  emit(o, io::dump(doc), out);
  return code;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.has("left") || o.has("right")) return verify_files(o, out);
  return verify_closed_forms(o, out);
}

// ---- symmetry-check --------------------------------------------------------

int cmd_symmetry(const Options& o, std::ostream& out) {
  const SystemKind sys = system_of(o);
  const Characteristic ch{o.rational("c1"), o.rational("c2")};
  const long samples = nonnegative(o, "samples", 100);
  const std::uint64_t seed = seed_of(o);
  const std::string form_name = o.str_or("form", "alternating");
  CharacteristicForm form;
  if (form_name == "alternating") form = CharacteristicForm::Alternating;
  else if (form_name == "ignore-parity") form = CharacteristicForm::IgnoreParity;
  else if (form_name == "swap-variables") form = CharacteristicForm::SwapVariables;
  else throw Usage("--form: unknown characteristic form '" + form_name + "'");

  const SlscCertificate cert = certify_slsc(sys, ch, samples, seed, form);
  Json doc = io::header("symmetry-check", sys);
  doc["characteristic"] = {{"c1", ch.c1.str()}, {"c2", ch.c2.str()}};
  doc["form"] = to_string(form);
  doc["seed"] = seed;
  doc["distribution"] = Distribution{}.describe();
  const Json body = io::to_json(cert);
  for (const auto& [k, v] : body.items()) doc[k] = v;
  emit(o, io::dump(doc), out);
  return cert.identically_zero() ? kOk : kMismatch;
}

// ---- check-forbidden -------------------------------------------------------

int cmd_forbidden(const Options& o, std::ostream& out) {
  const SystemKind sys = system_of(o);
  const long horizon = nonnegative(o, "horizon");
  ForbiddenReport rep;
  if (sys == SystemKind::A) {
    const SystemAParams p = params_a(o);
    rep = check_forbidden_a(p, ics_a(o), horizon);
  } else {
    const SystemBParams p = params_b(o);
    rep = check_forbidden_b(p, ics_b(o), horizon);
  }
  Json doc = io::header("forbidden", sys);
  put_system_inputs(doc, sys, o);
  doc["horizon"] = horizon;
  doc["clean"] = rep.clean();
  const Json body = io::to_json(rep);
  for (const auto& [k, v] : body.items()) doc[k] = v;
  emit(o, io::dump(doc), out);
  return rep.clean() ? kOk : kForbidden;
}

// ---- difftest --------------------------------------------------------------

int cmd_difftest(const Options& o, std::ostream& out) {
  const SystemKind sys = system_of(o);
  const long trials = nonnegative(o, "trials");
  const long N = nonnegative(o, "n");
  const std::uint64_t seed = seed_of(o);
  const long threads = nonnegative(o, "threads", 0);
  const DifftestReport rep = run_difftest(sys, trials, N, seed, static_cast<unsigned>(threads));
  emit(o, io::dump(io::to_json(rep)), out);
  return rep.all_passed() ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact iteration, order reduction and closed-form solutions of two systems "
               "of rational difference equations.",
               "sde"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "show help for every subcommand");

  struct Sub {
    CLI::App* app;
    std::unique_ptr<Options> opts;
  };
  std::map<std::string, Sub> subs;
  auto sub = [&](const std::string& name, const std::string& help) -> Options& {
    CLI::App* s = app.add_subcommand(name, help);
    auto& entry = subs[name];
    entry.app = s;
    entry.opts = std::make_unique<Options>(s);
    return *entry.opts;
  };

  {
    Options& o = sub("iterate", "iterate the system from its initial values");
    add_system(o);
    add_params_ics(o);
    o.add("n", "last index N");
    o.flag("shift-back", "relabel indices to the unshifted system");
    o.flag("require-regular", "exit 2 if the trajectory is singular");
    add_output(o, true);
  }
  {
    Options& o = sub("solve", "evaluate a closed-form solution at n = 0..N");
    add_system(o);
    add_params_ics(o);
    o.add("n", "last index N");
    o.add("case", "case tag, 'auto' (default) or 'Product'");
    add_output(o, true);
  }
  {
    Options& o = sub("reduce", "invariants, auxiliary sequences and reconstruction");
    add_system(o);
    add_params_ics(o);
    o.add("n", "last index N");
    add_output(o, true);
  }
  {
    Options& o = sub("verify",
                     "compare two reports (--left/--right) or every applicable closed form "
                     "with iteration");
    add_system(o);
    add_params_ics(o);
    o.add("n", "last index N");
    o.add("case", "restrict to one case tag (default: all applicable)");
    o.add("left", "first solution or trajectory report");
    o.add("right", "second solution or trajectory report");
    add_output(o, false);
  }
  {
    Options& o = sub("symmetry-check", "certify the linearized symmetry condition by sampling");
    add_system(o);
    o.add("c1", "characteristic constant C1");
    o.add("c2", "characteristic constant C2");
    o.add("samples", "sample points per parity (default 100)");
    o.add("seed", "sampling seed (default: $SDE_SEED)");
    o.add("form", "alternating (default), ignore-parity or swap-variables");
    add_output(o, false);
  }
  {
    Options& o = sub("check-forbidden", "evaluate the forbidden-set restrictions");
    add_system(o);
    add_params_ics(o);
    o.add("horizon", "largest restriction index r");
    add_output(o, false);
  }
  {
    Options& o = sub("difftest", "randomized closed form vs iteration comparison");
    add_system(o);
    o.add("trials", "number of trials");
    o.add("n", "last index N per trial");
    o.add("seed", "base seed (default: $SDE_SEED)");
    o.add("threads", "worker threads, 0 = hardware concurrency (default 0)");
    add_output(o, false);
  }

  std::vector<const char*> argv{"sde"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (auto& [name, s] : subs) {
      if (!s.app->parsed()) continue;
      const Options& o = *s.opts;
      if (name == "iterate") return cmd_iterate(o, out);
      if (name == "solve") return cmd_solve(o, out);
      if (name == "reduce") return cmd_reduce(o, out, err);
      if (name == "verify") return cmd_verify(o, out);
      if (name == "symmetry-check") return cmd_symmetry(o, out);
      if (name == "check-forbidden") return cmd_forbidden(o, out);
      if (name == "difftest") return cmd_difftest(o, out);
    }
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const sde::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ForbiddenInput& e) {
    err << "error: " << e.what() << "\n";
    return kForbidden;
  } catch (const InconsistentCase& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace sde::cli
