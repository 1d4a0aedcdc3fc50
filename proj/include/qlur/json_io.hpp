#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qlur/analysis.hpp"

namespace qlur {

// JSON forms
// ----------
// Density matrix file:  {"dims":[...], "matrix":[[re,im], ...]}   (row-major, D^2 entries)
// Pure-state file:      {"dims":[...], "amplitudes":[[re,im], ...]}
// Observables file:     {"dims":[...], "sites":[[{"matrix":[[re,im],...]}, ...], ...]}
//   or built-ins:       {"pauli":{"signs":[[1,1,1], ...]}}
//                       {"spin":{"j":[...], "h":[...], "g":[...]}}
// Bounds CLI string:    zero | constant:<file> | commutator |
//                       family-min:<pure-state-file>[:grid] | reference:<pure-state-file>
// Constant-bounds file: {"subsets":[{"sites":[...], "value": v}, ...]}
// Run config file:      {"state": "w3".."w6"|"qutrit3" | {"dims","amplitudes"},
//                        "range": [lo, hi]?, "observables": <as above>?,
//                        "bounds": <string or {"constant": {...}}>?, "grid": N?}
// Named states use their demo observables/bounds when the fields are omitted.

PureState pure_state_from_json(const nlohmann::json& j);
DensityMatrix state_from_json(const nlohmann::json& j);
DensityMatrix load_state(const std::string& path);

ObservableFamily observables_from_json(const nlohmann::json& j);
ObservableFamily load_observables(const std::string& path);

// Parses the CLI bounds string (see table above).
BoundProvider provider_from_string(const std::string& text);

struct RunConfig {
  NoiseFamily family;
  ObservableFamily observables;
  BoundProvider provider;
  int grid = 101;
};
RunConfig load_config(const std::string& path);

nlohmann::json report_to_json(const CriterionReport& report);
nlohmann::json threshold_to_json(const ThresholdResult& result);

nlohmann::json pure_state_to_json(const PureState& psi);
nlohmann::json state_to_json(const DensityMatrix& rho);

nlohmann::json parse_json_file(const std::string& path);

}  // namespace qlur
