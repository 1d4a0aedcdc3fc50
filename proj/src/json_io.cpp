#include "qlur/json_io.hpp"

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlur/errors.hpp"

namespace qlur {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string(where) + ": missing field '" + key + "'");
  return j.at(key);
}

std::vector<int> parse_dims(const json& j, const char* where) {
  const json& d = require_field(j, "dims", where);
  if (!d.is_array() || d.empty())
    throw InputError(std::string(where) + ".dims: expected a nonempty array");
  std::vector<int> dims;
  for (const auto& x : d) {
    if (!x.is_number_integer() || x.get<int>() < 1)
      throw InputError(std::string(where) + ".dims: entries must be positive integers");
    dims.push_back(x.get<int>());
  }
  return dims;
}

cplx parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError(where + ": expected [re, im]");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

Matrix parse_matrix(const json& j, int dim, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim * dim)
    throw InputError(where + ": expected " + std::to_string(dim * dim) +
                     " [re, im] entries (row-major)");
  Matrix m(dim, dim);
  for (int i = 0; i < dim * dim; ++i)
    m.a[i] = parse_complex(j[i], where + "[" + std::to_string(i) + "]");
  return m;
}

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(path + ": invalid JSON: " + e.what());
  }
  return j;
}

PureState pure_state_from_json(const json& j) {
  PureState psi;
  psi.dims = parse_dims(j, "state");
  int D = 1;
  for (int d : psi.dims) D *= d;
  const json& amps = require_field(j, "amplitudes", "state");
  if (!amps.is_array() || static_cast<int>(amps.size()) != D)
    throw InputError("state.amplitudes: expected " + std::to_string(D) + " [re, im] entries");
  psi.amplitudes.resize(D);
  for (int i = 0; i < D; ++i)
    psi.amplitudes[i] = parse_complex(amps[i], "state.amplitudes[" + std::to_string(i) + "]");
  if (std::abs(psi.norm() - 1.0) > 1e-10)
    throw InputError("state.amplitudes: norm deviates from 1 by " +
                     std::to_string(std::abs(psi.norm() - 1.0)));
  return psi;
}

DensityMatrix state_from_json(const json& j) {
  if (j.contains("amplitudes")) return density(pure_state_from_json(j));
  const std::vector<int> dims = parse_dims(j, "state");
  int D = 1;
  for (int d : dims) D *= d;
  const Matrix m = parse_matrix(require_field(j, "matrix", "state"), D, "state.matrix");
  return validate_density(m, dims);
}

DensityMatrix load_state(const std::string& path) { return state_from_json(parse_json_file(path)); }

ObservableFamily observables_from_json(const json& j) {
  if (j.contains("pauli")) {
    const json& p = j.at("pauli");
    const json& signs_j = require_field(p, "signs", "observables.pauli");
    if (!signs_j.is_array() || signs_j.empty())
      throw InputError("observables.pauli.signs: expected a nonempty array of [sx,sy,sz]");
    std::vector<std::array<int, 3>> signs;
    for (const auto& s : signs_j) {
      if (!s.is_array() || s.size() != 3)
        throw InputError("observables.pauli.signs: each entry must be [sx,sy,sz]");
      signs.push_back({s[0].get<int>(), s[1].get<int>(), s[2].get<int>()});
    }
    return pauli_family(signs);
  }
  if (j.contains("spin")) {
    const json& s = j.at("spin");
    auto doubles = [&](const char* key) {
      const json& a = require_field(s, key, "observables.spin");
      if (!a.is_array() || a.empty())
        throw InputError(std::string("observables.spin.") + key + ": expected a nonempty array");
      std::vector<double> out;
      for (const auto& x : a) out.push_back(x.get<double>());
      return out;
    };
    const std::vector<double> js = doubles("j");
    SpinConfig cfg{doubles("h"), doubles("g")};
    return spin_family(js, cfg);
  }
  const std::vector<int> dims = parse_dims(j, "observables");
  const json& sites = require_field(j, "sites", "observables");
  if (!sites.is_array() || sites.size() != dims.size())
    throw InputError("observables.sites: expected one operator list per site");
  std::vector<std::vector<Matrix>> per_site;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const std::string where = "observables.sites[" + std::to_string(i) + "]";
    if (!sites[i].is_array() || sites[i].empty())
      throw InputError(where + ": expected a nonempty operator list");
    std::vector<Matrix> ops;
    for (std::size_t k = 0; k < sites[i].size(); ++k) {
      const json& op = sites[i][k];
      ops.push_back(parse_matrix(require_field(op, "matrix", where.c_str()), dims[i],
                                 where + "[" + std::to_string(k) + "].matrix"));
    }
    per_site.push_back(std::move(ops));
  }
  return make_family(dims, std::move(per_site));
}

ObservableFamily load_observables(const std::string& path) {
  return observables_from_json(parse_json_file(path));
}

namespace {

std::map<std::vector<int>, double> constant_table_from_json(const json& j) {
  const json& subsets = require_field(j, "subsets", "bounds");
  if (!subsets.is_array()) throw InputError("bounds.subsets: expected an array");
  std::map<std::vector<int>, double> table;
  for (const auto& entry : subsets) {
    const json& sites = require_field(entry, "sites", "bounds.subsets[]");
    const json& value = require_field(entry, "value", "bounds.subsets[]");
    if (!sites.is_array() || sites.empty() || !value.is_number())
      throw InputError("bounds.subsets[]: expected {\"sites\":[...], \"value\": v}");
    std::vector<int> subset;
    for (const auto& s : sites) subset.push_back(s.get<int>());
    table[subset] = value.get<double>();
  }
  return table;
}

}  // namespace

BoundProvider provider_from_string(const std::string& text) {
  if (text == "zero") return BoundProvider::zero();
  if (text == "commutator") return BoundProvider::commutator_at_state();
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  if (head == "constant") {
    if (colon == std::string::npos)
      throw InputError("bounds 'constant' needs a file: constant:<file>");
    return BoundProvider::constant(constant_table_from_json(parse_json_file(text.substr(colon + 1))));
  }
  if (head == "family-min") {
    if (colon == std::string::npos)
      throw InputError("bounds 'family-min' needs a pure target: family-min:<file>[:grid]");
    std::string rest = text.substr(colon + 1);
    int grid = 1001;
    const auto colon2 = rest.rfind(':');
    if (colon2 != std::string::npos && rest.find_first_not_of("0123456789", colon2 + 1) ==
                                           std::string::npos && colon2 + 1 < rest.size()) {
      grid = std::stoi(rest.substr(colon2 + 1));
      rest = rest.substr(0, colon2);
    }
    const PureState target = pure_state_from_json(parse_json_file(rest));
    return BoundProvider::family_minimum(NoiseFamily{target, 0.0, 1.0}, grid);
  }
  if (head == "reference") {
    if (colon == std::string::npos)
      throw InputError("bounds 'reference' needs a pure state: reference:<file>");
    return BoundProvider::reference_state(pure_state_from_json(parse_json_file(text.substr(colon + 1))));
  }
  throw InputError("unknown bounds strategy '" + text +
                   "' (expected zero | constant:<file> | commutator | "
                   "family-min:<file>[:grid] | reference:<file>)");
}

RunConfig load_config(const std::string& path) {
  const json j = parse_json_file(path);
  if (!j.is_object()) throw InputError(path + ": config must be a JSON object");

  RunConfig cfg;
  bool have_demo = false;
  const json& state = require_field(j, "state", "config");
  if (state.is_string()) {
    const DemoConfig demo = demo_config(state.get<std::string>());
    cfg.family = demo.family;
    cfg.observables = demo.observables;
    cfg.provider = demo.provider;
    have_demo = true;
  } else {
    cfg.family = NoiseFamily{pure_state_from_json(state), 0.0, 1.0};
  }

  if (j.contains("range")) {
    const json& r = j.at("range");
    if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number())
      throw InputError("config.range: expected [lo, hi]");
    cfg.family.q_lo = r[0].get<double>();
    cfg.family.q_hi = r[1].get<double>();
    if (!(cfg.family.q_lo >= 0 && cfg.family.q_hi <= 1 && cfg.family.q_lo <= cfg.family.q_hi))
      throw InputError("config.range: need 0 <= lo <= hi <= 1");
  }

  if (j.contains("observables")) {
    cfg.observables = observables_from_json(j.at("observables"));
  } else if (!have_demo) {
    throw InputError("config.observables: required unless state names a built-in demo");
  }

  if (j.contains("bounds")) {
    const json& b = j.at("bounds");
    if (b.is_string()) {
      const std::string s = b.get<std::string>();
      // Bare family-min in a config reuses the config's own family.
      if (s == "family-min") {
        cfg.provider = BoundProvider::family_minimum(cfg.family, 1001);
      } else {
        cfg.provider = provider_from_string(s);
      }
    } else if (b.is_object() && b.contains("constant")) {
      cfg.provider = BoundProvider::constant(constant_table_from_json(b.at("constant")));
    } else {
      throw InputError("config.bounds: expected a strategy string or {\"constant\": {...}}");
    }
  } else if (!have_demo) {
    cfg.provider = BoundProvider::family_minimum(cfg.family, 1001);
  }

  if (j.contains("grid")) {
    if (!j.at("grid").is_number_integer() || j.at("grid").get<int>() < 2)
      throw InputError("config.grid: expected an integer >= 2");
    cfg.grid = j.at("grid").get<int>();
  }
  return cfg;
}

json report_to_json(const CriterionReport& report) {
  json bounds = json::array();
  for (const PartitionBound& b : report.partition_bounds) {
    bounds.push_back({{"partition", b.partition.render()},
                      {"u_left", b.u_left},
                      {"u_right", b.u_right},
                      {"v_left", b.v_left},
                      {"v_right", b.v_right},
                      {"w", b.w},
                      {"total", b.total}});
  }
  return json{{"criterion", report.criterion},
              {"f_total", report.f_total},
              {"min_bound", report.min_bound},
              {"f", report.f},
              {"verdict", report.verdict == Verdict::detected ? "Detected" : "Inconclusive"},
              {"argmin_partition", report.argmin().partition.render()},
              {"partition_bounds", bounds}};
}

json threshold_to_json(const ThresholdResult& result) {
  return json{{"q_star", result.q_star},
              {"bracket", json::array({result.lo, result.hi})},
              {"iterations", result.iterations},
              {"sign_lo", result.sign_lo},
              {"sign_hi", result.sign_hi}};
}

json pure_state_to_json(const PureState& psi) {
  json amps = json::array();
  for (const cplx& z : psi.amplitudes) amps.push_back(complex_to_json(z));
  return json{{"dims", psi.dims}, {"amplitudes", amps}};
}

json state_to_json(const DensityMatrix& rho) {
  json entries = json::array();
  for (const cplx& z : rho.m.a) entries.push_back(complex_to_json(z));
  return json{{"dims", rho.dims}, {"matrix", entries}};
}

}  // namespace qlur
