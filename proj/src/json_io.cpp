#include "sde/json_io.hpp"

#include <sstream>

#include "sde/errors.hpp"

namespace sde::io {

Json header(const char* kind, SystemKind system) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = kind;
  doc["system"] = to_string(system);
  return doc;
}

Json to_json(const SystemAParams& p) { return Json{{"a", p.a.str()}, {"b", p.b.str()}}; }

Json to_json(const SystemBParams& p) {
  return Json{{"a", p.a.str()}, {"b", p.b.str()}, {"c", p.c.str()}, {"d", p.d.str()}};
}

Json to_json(const SystemAInitial& ics) {
  return Json{{"u0", ics.u0.str()}, {"u1", ics.u1.str()}, {"v0", ics.v0.str()},
              {"v1", ics.v1.str()}};
}

Json to_json(const SystemBInitial& ics) {
  return Json{{"x0", ics.x0.str()}, {"x1", ics.x1.str()}, {"x2", ics.x2.str()},
              {"y0", ics.y0.str()}, {"y1", ics.y1.str()}, {"y2", ics.y2.str()}};
}

Json to_json(const std::vector<Rational>& seq) {
  Json arr = Json::array();
  for (const auto& q : seq) arr.push_back(q.str());
  return arr;
}

void put_trajectory(Json& doc, const Trajectory& t) {
  doc["labels"] = {t.labels[0], t.labels[1]};
  doc["origin"] = t.origin;
  doc["first"] = to_json(t.first);
  doc["second"] = to_json(t.second);
  if (t.singular) {
    doc["singular"] = {{"step", t.singular->step},
                       {"component", to_string(t.singular->component)},
                       {"denominator_expression", t.singular->denominator_expression}};
  } else {
    doc["singular"] = nullptr;
  }
}

void put_points(Json& doc, const std::array<std::string, 2>& labels,
                const std::vector<Point>& pts) {
  Json first = Json::array(), second = Json::array();
  for (const auto& p : pts) {
    first.push_back(p.first.str());
    second.push_back(p.second.str());
  }
  doc["labels"] = {labels[0], labels[1]};
  doc["origin"] = 0;
  doc["first"] = std::move(first);
  doc["second"] = std::move(second);
}

Json to_json(const ForbiddenReport& rep) {
  Json violated = Json::array();
  for (const auto& v : rep.violated) {
    Json item{{"restriction_id", v.restriction_id}, {"r", v.r}};
    if (v.step) {
      item["step"] = *v.step;
      item["component"] = to_string(v.component);
    } else {
      item["step"] = nullptr;
    }
    violated.push_back(std::move(item));
  }
  Json out;
  out["violated"] = std::move(violated);
  out["inadmissible"] = rep.inadmissible;
  if (rep.predicted_singular_step) {
    out["predicted_singular_step"] = *rep.predicted_singular_step;
    out["predicted_component"] = to_string(*rep.predicted_component);
  } else {
    out["predicted_singular_step"] = nullptr;
    out["predicted_component"] = nullptr;
  }
  return out;
}

Json to_json(const DifftestReport& rep) {
  Json out = header("difftest", rep.system);
  out["trials"] = rep.trials;
  out["N"] = rep.N;
  out["seed"] = rep.seed;
  out["distribution"] = rep.distribution;
  out["passed"] = rep.passed;
  out["failed"] = rep.failed;
  out["skipped"] = rep.skipped;
  out["per_stratum"] = rep.per_stratum;
  Json checks = Json::object();
  for (const auto& [name, t] : rep.per_check)
    checks[name] = {{"run", t.run}, {"agreed", t.agreed}};
  out["per_check"] = std::move(checks);
  if (rep.first_failed_trial) {
    out["first_counterexample"] = {{"trial", *rep.first_failed_trial},
                                   {"details", *rep.first_counterexample}};
  } else {
    out["first_counterexample"] = nullptr;
  }
  return out;
}

Json to_json(const SlscCertificate& cert) {
  Json out;
  out["samples_per_parity"] = cert.samples_per_parity;
  out["evaluated"] = cert.evaluated;
  out["nonzero"] = cert.nonzero;
  out["redrawn"] = cert.redrawn;
  out["identically_zero"] = cert.identically_zero();
  if (cert.first_nonzero) out["first_nonzero"] = *cert.first_nonzero;
  else out["first_nonzero"] = nullptr;
  return out;
}

namespace {

std::vector<Rational> read_seq(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw InvalidInput(std::string("document has no array '") + key + "'");
  std::vector<Rational> out;
  for (const auto& item : doc[key]) {
    if (!item.is_string())
      throw InvalidInput(std::string("entries of '") + key + "' must be rational strings");
    out.push_back(Rational::parse(item.get<std::string>()));
  }
  return out;
}

}  // namespace

Sequences read_sequences(const Json& doc) {
  if (!doc.is_object()) throw InvalidInput("document is not a JSON object");
  if (!doc.contains("schema_version") || doc["schema_version"] != kSchemaVersion)
    throw InvalidInput("unsupported or missing schema_version");
  Sequences s;
  if (!doc.contains("system") || !doc["system"].is_string())
    throw InvalidInput("document has no 'system'");
  s.system = doc["system"].get<std::string>();
  if (doc.contains("labels") && doc["labels"].is_array() && doc["labels"].size() == 2) {
    s.labels = {doc["labels"][0].get<std::string>(), doc["labels"][1].get<std::string>()};
  }
  if (doc.contains("origin") && doc["origin"].is_number_integer())
    s.origin = doc["origin"].get<long>();
  s.first = read_seq(doc, "first");
  s.second = read_seq(doc, "second");
  if (s.first.size() != s.second.size())
    throw InvalidInput("'first' and 'second' differ in length");
  return s;
}

std::string to_csv(const std::array<std::string, 2>& labels, long origin,
                   const std::vector<Rational>& first, const std::vector<Rational>& second) {
  std::ostringstream os;
  os << "n," << labels[0] << "," << labels[1] << "\n";
  for (std::size_t i = 0; i < first.size(); ++i)
    os << origin + static_cast<long>(i) << "," << first[i] << "," << second[i] << "\n";
  return os.str();
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace sde::io
