#ifndef STARCONF_REPORT_HPP
#define STARCONF_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "starconf/conjecture.hpp"
#include "starconf/hilbert_oracle.hpp"
#include "starconf/io.hpp"

namespace starconf {

struct RunReport {
  std::string command;
  json code = json::object();
  std::optional<BivarPoly> tutte;
  std::optional<ShiftedCoeffs> shifted;
  std::optional<WeightHierarchy> hierarchy;
  std::vector<IdealProfile> profiles;
  /// Command-specific block: engines, routes, oracle, conjecture, identity.
  json details = json::object();
  /// Seconds per phase; only filled with --timings.
  std::map<std::string, double> timings;
};

json report_to_json(const RunReport& r);
RunReport report_from_json(const json& j);

ShiftedCoeffs shifted_from_json(const json& j);

json fitted_to_json(const FittedHP& fit);
json oracle_to_json(const OracleCheck& check);
json conjecture_to_json(const ConjectureReport& report);
ConjectureReport conjecture_from_json(const json& j);

/// Human-readable tables; reads only the JSON document.
std::string render_table(const json& report);

}  // namespace starconf

#endif  // STARCONF_REPORT_HPP
