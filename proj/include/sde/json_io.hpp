#pragma once

// Machine-readable reports. Every document carries "schema_version" and a
// "kind"; scalars are always rational literals ("p" or "p/q"), never floats.

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "sde/closed_form.hpp"
#include "sde/difftest.hpp"
#include "sde/forbidden.hpp"
#include "sde/reduction.hpp"
#include "sde/symmetry.hpp"
#include "sde/systems.hpp"

namespace sde::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json header(const char* kind, SystemKind system);

Json to_json(const SystemAParams& p);
Json to_json(const SystemBParams& p);
Json to_json(const SystemAInitial& ics);
Json to_json(const SystemBInitial& ics);
Json to_json(const std::vector<Rational>& seq);

/// Fields labels, origin, first, second, singular (null when regular).
void put_trajectory(Json& doc, const Trajectory& t);
void put_points(Json& doc, const std::array<std::string, 2>& labels,
                const std::vector<Point>& pts);

Json to_json(const ForbiddenReport& rep);
Json to_json(const DifftestReport& rep);
Json to_json(const SlscCertificate& cert);

/// Sequences read back from an "iterate"/"solve" document.
struct Sequences {
  std::string system;
  std::array<std::string, 2> labels;
  long origin = 0;
  std::vector<Rational> first, second;
};
/// InvalidInput on a malformed document; ParseError on a bad scalar.
Sequences read_sequences(const Json& doc);

/// Rows "n,<first>,<second>" after a header line.
std::string to_csv(const std::array<std::string, 2>& labels, long origin,
                   const std::vector<Rational>& first, const std::vector<Rational>& second);
/// Canonical text: two-space indentation and a trailing newline.
std::string dump(const Json& doc);

}  // namespace sde::io
