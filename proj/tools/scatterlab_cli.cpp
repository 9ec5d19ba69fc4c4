// Copyright 2026 The scatterlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success, 2 invalid configuration,
// 3 solver failure, 4 I/O failure.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "scatterlab/effective3d/lippmann_schwinger.hpp"
#include "scatterlab/effective3d/sphere_quadrature.hpp"
#include "scatterlab/error.hpp"
#include "scatterlab/experiments/config.hpp"
#include "scatterlab/experiments/convergence.hpp"
#include "scatterlab/experiments/writers.hpp"
#include "scatterlab/kernels/helmholtz_sum.hpp"
#include "scatterlab/oned/oned.hpp"
#include "scatterlab/placement/cloud_io.hpp"
#include "scatterlab/solver3d/foldy_lax.hpp"

namespace fs = std::filesystem;
using namespace scatterlab;
using namespace scatterlab::experiments;

namespace {

enum ExitCode { kOk = 0, kConfig = 2, kSolver = 3, kIo = 4 };

struct CommonArgs {
  std::string config;
  std::string out;
  std::string mode;
  int threads = 0;
  double a = 0.0;
  std::string cloud;
  std::string source = "fl";
};

ExperimentConfig load(const CommonArgs& args) {
  ExperimentConfig cfg = args.config.empty() ? ExperimentConfig{} : load_config(args.config);
  if (!args.out.empty()) cfg.output_dir = args.out;
  if (args.mode == "dense") cfg.solver.mode = SolveMode::dense;
  if (args.mode == "iterative") cfg.solver.mode = SolveMode::iterative;
  if (args.threads > 0) cfg.threads = args.threads;
#ifdef _OPENMP
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
  if (args.a > 0.0) cfg.radii = {args.a};
  const auto diags = validate_config(cfg);
  for (const auto& d : diags) {
    std::cerr << (d.severity == Diagnostic::Severity::error ? "error: " : "warning: ") << d.key << ": " << d.message
              << " (" << d.hint << ")\n";
  }
  if (has_errors(diags)) throw ConfigError("configuration rejected");
  return cfg;
}

void require_dim(const ExperimentConfig& cfg, int dim, const char* command) {
  if (cfg.dimension != dim) {
    throw ConfigError(std::string(command) + " needs experiment.dimension = " + std::to_string(dim));
  }
}

fs::path out_path(const ExperimentConfig& cfg, const std::string& name) { return fs::path(cfg.output_dir) / name; }

std::string radius_tag(double a) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", a);
  return buf;
}

FoldyLaxSystem solve_fl(const ExperimentConfig& cfg, const CommonArgs& args) {
  ScattererCloud cloud;
  if (!args.cloud.empty()) {
    cloud = read_cloud_file(args.cloud);
  } else {
    cloud = place_cloud(cfg, potential_spec(cfg), cfg.radii.front());
  }
  FoldyLaxOptions opt;
  opt.solver = cfg.solver;
  opt.allow_large_ka = cfg.allow_large_ka;
  return assemble_and_solve(cloud, wave_context(cfg), opt);
}

EffectiveSolution solve_effective(const ExperimentConfig& cfg) {
  LsOptions opt;
  opt.solver = cfg.solver;
  opt.q_subsamples = cfg.q_subsamples;
  return solve_ls(catalog::make_field(cfg.potential), cfg.domain, wave_context(cfg), cfg.h, opt);
}

template <class Sys>
void write_grid(const ExperimentConfig& cfg, const std::string& stem, const Sys& eval) {
  if (cfg.grid_points <= 0) return;
  GridField field;
  field.grid = output_grid(cfg);
  std::vector<Vec3> xs(field.grid.size());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = field.grid.node(i);
  field.values = eval(xs);
  if (cfg.grid_format == "raw") {
    write_grid_raw(out_path(cfg, stem + ".bin"), field);
  } else {
    write_grid_csv(out_path(cfg, stem + ".csv"), field);
  }
}

int cmd_place(const CommonArgs& args) {
  const auto cfg = load(args);
  const auto spec = potential_spec(cfg);
  for (const double a : cfg.radii) {
    const auto cloud = place_cloud(cfg, spec, a);
    const auto path = out_path(cfg, "cloud_a" + radius_tag(a) + ".txt");
    write_cloud_file(path, cloud);
    std::cout << "a=" << a << " M=" << cloud.size() << " -> " << path.string() << "\n";
  }
  return kOk;
}

int cmd_solve_fl(const CommonArgs& args) {
  const auto cfg = load(args);
  require_dim(cfg, 3, "solve-fl");
  const auto sys = solve_fl(cfg, args);
  for (const auto& w : sys.warnings()) std::cerr << "warning: " << w << "\n";
  write_center_values_csv(out_path(cfg, "fl_values.csv"), sys.cloud(), sys.values());
  write_grid(cfg, "fl_grid", [&](std::span<const Vec3> xs) { return sys.field(xs); });
  std::cout << "M=" << sys.cloud().size() << " ka=" << sys.ka() << " iterations=" << sys.diagnostics().iterations
            << " residual=" << sys.diagnostics().residual << "\n";
  return kOk;
}

int cmd_solve_ls(const CommonArgs& args) {
  const auto cfg = load(args);
  require_dim(cfg, 3, "solve-ls");
  const auto sol = solve_effective(cfg);
  const auto& disc = sol.discretization();
  std::vector<Vec3> nodes;
  std::vector<Complex> values;
  for (const std::size_t i : disc.active) {
    nodes.push_back(disc.grid.node(i));
    values.push_back(sol.field().values[i]);
  }
  write_points_csv(out_path(cfg, "ls_values.csv"), nodes, values);
  write_grid(cfg, "ls_grid", [&](std::span<const Vec3> xs) { return sol.evaluate(xs); });
  std::cout << "nodes=" << disc.active.size() << " iterations=" << sol.diagnostics().iterations
            << " residual=" << sol.diagnostics().residual << "\n";
  return kOk;
}

int cmd_farfield(const CommonArgs& args) {
  const auto cfg = load(args);
  require_dim(cfg, 3, "farfield");
  const auto dirs = fibonacci_directions(std::size_t(cfg.farfield_directions));
  if (args.source == "ls") {
    const auto sol = solve_effective(cfg);
    write_farfield_csv(out_path(cfg, "farfield_ls.csv"), far_field_effective(sol, dirs));
  } else {
    const auto sys = solve_fl(cfg, args);
    write_farfield_csv(out_path(cfg, "farfield_fl.csv"), far_field(sys, dirs));
  }
  return kOk;
}

int cmd_solve_1d(const CommonArgs& args) {
  const auto cfg = load(args);
  require_dim(cfg, 1, "solve-1d");
  const auto ctx = wave_context_1d(cfg);
  const double a = cfg.radii.front();
  const auto cloud = place_cloud(cfg, potential_spec(cfg), a);
  const auto fl = oned::solve_fl_1d(cloud, ctx);
  const auto effective =
      oned::solve_ls_1d(catalog::make_field(cfg.potential), cfg.interval, ctx, cfg.h_1d);
  const auto exact = oned::transfer_matrix_solve(oned::PiecewisePotential1D::from_cloud(cloud), ctx);

  std::vector<double> xs;
  const int n = std::max(cfg.probe_points, 2);
  const double pad = 0.1 * cfg.interval.length();
  for (int i = 0; i < n; ++i) {
    xs.push_back(cfg.interval.lo - pad + (cfg.interval.length() + 2 * pad) * double(i) / double(n - 1));
  }
  std::vector<Complex> um, ue, uo;
  for (const double x : xs) {
    um.push_back(fl.field(x));
    ue.push_back(effective.field(x));
    uo.push_back(exact.field(x));
  }
  write_cloud_file(out_path(cfg, "cloud_1d.txt"), cloud);
  write_line_csv(out_path(cfg, "fl_1d.csv"), xs, um);
  write_line_csv(out_path(cfg, "effective_1d.csv"), xs, ue);
  write_line_csv(out_path(cfg, "oracle_1d.csv"), xs, uo);
  std::cout << "M=" << cloud.size() << " r=" << exact.reflection() << " t=" << exact.transmission() << "\n";
  return kOk;
}

int cmd_converge(const CommonArgs& args) {
  const auto cfg = load(args);
  require_dim(cfg, 3, "converge");
  const auto report_path = out_path(cfg, "report.csv");
  std::error_code ec;
  fs::remove(report_path, ec);
  const auto report = run_convergence_3d(cfg, [&](const ConvergenceRow& row, const StageTiming& t) {
    append_report_row(report_path, row);
    std::cout << "a=" << row.a << " M=" << row.count << " sup=" << row.sup_error << " far=" << row.farfield_error
              << " (" << t.solve << " s solve)\n"
              << std::flush;
  });
  write_report_csv(report_path, report.rows);
  write_timings_csv(out_path(cfg, "timings.csv"), report.timings);
  write_plot_script(out_path(cfg, "plot.gp"), "report.csv", "convergence", false);
  return kOk;
}

int cmd_converge_1d(const CommonArgs& args) {
  const auto cfg = load(args);
  require_dim(cfg, 1, "converge-1d");
  const auto rows = run_convergence_1d(cfg);
  write_report_1d_csv(out_path(cfg, "report_1d.csv"), rows);
  write_plot_script(out_path(cfg, "plot_1d.gp"), "report_1d.csv", "convergence_1d", true);
  for (const auto& r : rows) {
    std::cout << "a=" << r.a << " M=" << r.count << " sup_vs_ue=" << r.sup_error_vs_ue
              << " sup_vs_oracle=" << r.sup_error_vs_oracle << "\n";
  }
  return kOk;
}

int cmd_validate(const CommonArgs& args) {
  const ExperimentConfig cfg = load_config(args.config);
  const auto diags = validate_config(cfg);
  for (const auto& d : diags) {
    std::cout << (d.severity == Diagnostic::Severity::error ? "error: " : "warning: ") << d.key << ": " << d.message
              << "\n  hint: " << d.hint << "\n";
  }
  if (has_errors(diags)) return kConfig;
  std::cout << "ok\n";
  return kOk;
}

int exit_code_for(std::exception_ptr ep) {
  try {
    std::rethrow_exception(ep);
  } catch (const StageError& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.cause());
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const SolverError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    if (!e.residual_history().empty()) std::cerr << "  last residual: " << e.residual_history().back() << "\n";
    return kSolver;
  } catch (const CapacityError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kSolver;
  } catch (const SingularKernelError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kSolver;
  } catch (const Error& e) {
    // Configuration-level problems: bad keys, infeasible factorization,
    // unplaceable densities, regime and resolution violations.
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSolver;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scattering by many small bodies: point-scatterer and effective-medium solvers"};
  app.require_subcommand(1);
  CommonArgs args;
  std::string isa;
  app.add_option("--isa", isa, "Kernel instruction set (scalar|avx2); default picks the best available")
      ->check(CLI::IsMember({"scalar", "avx2"}));

  auto add_common = [&](CLI::App* sub, bool config_required) {
    auto* opt = sub->add_option("--config", args.config, "Configuration file");
    if (config_required) opt->required();
    sub->add_option("--out", args.out, "Output directory (overrides experiment.output_dir)");
    sub->add_option("--mode", args.mode, "Linear solver")->check(CLI::IsMember({"dense", "iterative"}));
    sub->add_option("--threads", args.threads, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* place = app.add_subcommand("place", "Place scatterer centers and write cloud files");
  add_common(place, false);
  place->add_option("--a", args.a, "Single radius instead of the configured list")->check(CLI::PositiveNumber);

  auto* solve_fl_cmd = app.add_subcommand("solve-fl", "Solve the point-scatterer system");
  add_common(solve_fl_cmd, false);
  solve_fl_cmd->add_option("--a", args.a, "Radius (default: first configured radius)")->check(CLI::PositiveNumber);
  solve_fl_cmd->add_option("--cloud", args.cloud, "Read the cloud from a file instead of placing it");

  auto* solve_ls_cmd = app.add_subcommand("solve-ls", "Solve the effective integral equation");
  add_common(solve_ls_cmd, false);

  auto* solve_1d = app.add_subcommand("solve-1d", "1D point-scatterer, effective and exact fields");
  add_common(solve_1d, true);
  solve_1d->add_option("--a", args.a, "Radius (default: first configured radius)")->check(CLI::PositiveNumber);

  auto* converge = app.add_subcommand("converge", "3D convergence study over the configured radii");
  add_common(converge, true);

  auto* converge_1d = app.add_subcommand("converge-1d", "1D convergence study over the configured radii");
  add_common(converge_1d, true);

  auto* farfield = app.add_subcommand("farfield", "Scattering amplitude on quasi-uniform directions");
  add_common(farfield, false);
  farfield->add_option("--source", args.source, "Which solution")->check(CLI::IsMember({"fl", "ls"}));
  farfield->add_option("--a", args.a, "Radius for the point-scatterer solution")->check(CLI::PositiveNumber);
  farfield->add_option("--cloud", args.cloud, "Read the cloud from a file");

  auto* validate = app.add_subcommand("validate", "Check a configuration and list every problem");
  validate->add_option("--config", args.config, "Configuration file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (isa == "scalar") kernels::set_isa(kernels::Isa::scalar);
    if (isa == "avx2") {
      if (!kernels::isa_available(kernels::Isa::avx2)) throw ConfigError("AVX2 is not available on this machine");
      kernels::set_isa(kernels::Isa::avx2);
    }
    if (*place) return cmd_place(args);
    if (*solve_fl_cmd) return cmd_solve_fl(args);
    if (*solve_ls_cmd) return cmd_solve_ls(args);
    if (*solve_1d) return cmd_solve_1d(args);
    if (*converge) return cmd_converge(args);
    if (*converge_1d) return cmd_converge_1d(args);
    if (*farfield) return cmd_farfield(args);
    if (*validate) return cmd_validate(args);
  } catch (...) {
    return exit_code_for(std::current_exception());
  }
  return kOk;
}
