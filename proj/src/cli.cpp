#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "qlur/analysis.hpp"
#include "qlur/errors.hpp"
#include "qlur/json_io.hpp"
#include "qlur/partition.hpp"
#include "qlur/states.hpp"

namespace qlur {

namespace {

void write_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot open output file: " + out_path);
  out << text;
  if (!out) throw InputError("failed writing output file: " + out_path);
}

std::string g12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Local-uncertainty entanglement criteria for multipartite states"};
  app.require_subcommand(1);

  auto* demo_cmd = app.add_subcommand(
      "demo", "Sweep a built-in noisy-state family (w3..w6, qutrit3) and emit CSV");
  std::string demo_name;
  int demo_grid = 101;
  std::string demo_out;
  demo_cmd->add_option("name", demo_name, "Demo name: w3, w4, w5, w6, qutrit3")->required();
  demo_cmd->add_option("--grid", demo_grid, "Number of q grid points")->check(CLI::Range(2, 1000000));
  demo_cmd->add_option("--out", demo_out, "Write CSV here instead of stdout");

  auto* eval_cmd = app.add_subcommand("evaluate", "Evaluate the criterion on one state (JSON report)");
  std::string eval_state, eval_obs, eval_bounds = "zero";
  eval_cmd->add_option("--state", eval_state, "State JSON file")->required();
  eval_cmd->add_option("--observables", eval_obs, "Observable-family JSON file")->required();
  eval_cmd->add_option("--bounds", eval_bounds,
                       "zero | constant:<file> | commutator | family-min:<file>[:grid] | "
                       "reference:<file>");

  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep a configured noise family and emit CSV");
  std::string sweep_config, sweep_out;
  std::optional<int> sweep_grid;
  sweep_cmd->add_option("--config", sweep_config, "Run-config JSON file")->required();
  sweep_cmd->add_option("--grid", sweep_grid, "Override the config grid")->check(CLI::Range(2, 1000000));
  sweep_cmd->add_option("--out", sweep_out, "Write CSV here instead of stdout");

  auto* thr_cmd = app.add_subcommand("threshold", "Bisect for the detection threshold q*");
  std::string thr_config;
  std::optional<double> thr_lo, thr_hi;
  thr_cmd->add_option("--config", thr_config, "Run-config JSON file")->required();
  thr_cmd->add_option("--lo", thr_lo, "Bracket lower end (default: family range)");
  thr_cmd->add_option("--hi", thr_hi, "Bracket upper end (default: family range)");

  auto* part_cmd = app.add_subcommand("partitions", "List the bipartitions of n sites");
  int part_n = 0;
  part_cmd->add_option("--n", part_n, "Number of sites")->required();

  auto* fullsep_cmd =
      app.add_subcommand("fullsep", "Print the noise level below which the noisy W state "
                                    "is provably fully separable");
  int fullsep_n = 0;
  fullsep_cmd->add_option("--n", fullsep_n, "Number of qubits")->required();

  try {
    app.parse(argc, argv);

    if (*demo_cmd) {
      const DemoConfig cfg = demo_config(demo_name);
      const auto rows = sweep(cfg.family, cfg.observables, cfg.provider, demo_grid);
      write_text(to_csv(rows), demo_out);
    } else if (*eval_cmd) {
      const DensityMatrix rho = load_state(eval_state);
      const ObservableFamily family = load_observables(eval_obs);
      const BoundProvider provider = provider_from_string(eval_bounds);
      const CriterionReport report = gme_criterion(rho, family, provider);
      std::cout << report_to_json(report).dump(2) << "\n";
    } else if (*sweep_cmd) {
      const RunConfig cfg = load_config(sweep_config);
      const int grid = sweep_grid.value_or(cfg.grid);
      const auto rows = sweep(cfg.family, cfg.observables, cfg.provider, grid);
      write_text(to_csv(rows), sweep_out);
    } else if (*thr_cmd) {
      const RunConfig cfg = load_config(thr_config);
      const double lo = thr_lo.value_or(cfg.family.q_lo);
      const double hi = thr_hi.value_or(cfg.family.q_hi);
      const ThresholdResult result = find_threshold(cfg.family, cfg.observables, cfg.provider, lo, hi);
      std::cout << threshold_to_json(result).dump(2) << "\n";
    } else if (*part_cmd) {
      for (const Bipartition& p : enumerate_bipartitions(part_n)) std::cout << p.render() << "\n";
    } else if (*fullsep_cmd) {
      std::cout << g12(fully_separable_threshold(fullsep_n)) << "\n";
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  } catch (const UnsoundBoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qlur
