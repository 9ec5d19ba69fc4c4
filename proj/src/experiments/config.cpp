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

#include "scatterlab/experiments/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "scatterlab/error.hpp"

namespace scatterlab::experiments {

namespace pt = boost::property_tree;

namespace {

std::vector<double> numbers(const std::string& key, const std::string& text) {
  std::istringstream is(text);
  std::vector<double> out;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ConfigError("'" + key + "': '" + tok + "' is not a number");
    }
  }
  return out;
}

double number(const pt::ptree& tree, const std::string& key, double fallback) {
  const auto v = tree.get_optional<std::string>(key);
  if (!v) return fallback;
  const auto xs = numbers(key, *v);
  if (xs.size() != 1) throw ConfigError("'" + key + "' needs exactly one number");
  return xs.front();
}

Vec3 vec3(const pt::ptree& tree, const std::string& key, const Vec3& fallback) {
  const auto v = tree.get_optional<std::string>(key);
  if (!v) return fallback;
  const auto xs = numbers(key, *v);
  if (xs.size() != 3) throw ConfigError("'" + key + "' needs three numbers");
  return {xs[0], xs[1], xs[2]};
}

std::string text(const pt::ptree& tree, const std::string& key, const std::string& fallback) {
  return tree.get<std::string>(key, fallback);
}

bool flag(const pt::ptree& tree, const std::string& key, bool fallback) {
  const std::string v = text(tree, key, fallback ? "true" : "false");
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("'" + key + "' must be true or false");
}

}  // namespace

ExperimentConfig parse_config(std::istream& is) {
  pt::ptree tree;
  try {
    pt::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config syntax: ") + e.what());
  }
  ExperimentConfig cfg;

  cfg.dimension = static_cast<int>(number(tree, "experiment.dimension", cfg.dimension));
  if (cfg.dimension != 1 && cfg.dimension != 3) throw ConfigError("experiment.dimension must be 1 or 3");
  cfg.output_dir = text(tree, "experiment.output_dir", cfg.output_dir);
  cfg.threads = static_cast<int>(number(tree, "experiment.threads", cfg.threads));

  const std::string kind = text(tree, "domain.kind", cfg.dimension == 1 ? "interval" : "box");
  try {
    if (kind == "box") {
      cfg.domain = BoundedDomain::box(vec3(tree, "domain.lo", {0, 0, 0}), vec3(tree, "domain.hi", {1, 1, 1}));
    } else if (kind == "ball") {
      cfg.domain = BoundedDomain::ball(vec3(tree, "domain.center", {0, 0, 0}), number(tree, "domain.radius", 0.5));
    } else if (kind == "interval") {
      cfg.interval = oned::Interval1D(number(tree, "domain.lo", 0.0), number(tree, "domain.hi", 1.0));
    } else {
      throw ConfigError("domain.kind must be box, ball or interval");
    }
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("domain: ") + e.what());
  }
  if ((cfg.dimension == 1) != (kind == "interval")) {
    throw ConfigError("domain.kind = " + kind + " does not match experiment.dimension");
  }

  if (const auto section = tree.get_child_optional("potential")) {
    cfg.potential = {};
    for (const auto& [key, node] : *section) {
      const std::string value = node.get_value<std::string>();
      if (key == "name") {
        cfg.potential.name = value;
        continue;
      }
      const auto xs = numbers("potential." + key, value);
      if (xs.size() == 1) {
        cfg.potential.params[key] = xs[0];
      } else if (xs.size() == 3) {
        cfg.potential.params[key + "_x"] = xs[0];
        cfg.potential.params[key + "_y"] = xs[1];
        cfg.potential.params[key + "_z"] = xs[2];
      } else {
        throw ConfigError("potential." + key + " needs one or three numbers");
      }
    }
  }

  const std::string strategy = text(tree, "factorization.strategy", "constant-density");
  if (strategy == "constant-density") {
    cfg.strategy = FactorizationStrategy::constant_density;
  } else if (strategy == "constant-strength") {
    cfg.strategy = FactorizationStrategy::constant_strength;
  } else {
    throw ConfigError("factorization.strategy must be constant-density or constant-strength");
  }
  cfg.level = number(tree, "factorization.level", cfg.level);
  cfg.n_max = number(tree, "factorization.n_max", cfg.n_max);

  if (const auto radii = tree.get_optional<std::string>("scatterers.a")) cfg.radii = numbers("scatterers.a", *radii);
  cfg.cell_factor = number(tree, "scatterers.cell_factor", cfg.cell_factor);

  cfg.k = number(tree, "wave.k", cfg.k);
  if (cfg.dimension == 1) {
    cfg.direction_1d = static_cast<int>(number(tree, "wave.direction", cfg.direction_1d));
  } else {
    cfg.alpha = vec3(tree, "wave.alpha", cfg.alpha);
  }

  cfg.h = number(tree, "effective.h", cfg.h);
  cfg.q_subsamples = static_cast<int>(number(tree, "effective.q_subsamples", cfg.q_subsamples));
  cfg.richardson = flag(tree, "effective.richardson", cfg.richardson);
  cfg.h_1d = number(tree, "effective.h_1d", cfg.h_1d);

  cfg.probe_points = static_cast<int>(number(tree, "probe.points", cfg.dimension == 1 ? 61 : cfg.probe_points));
  cfg.probe_scale = number(tree, "probe.scale", cfg.probe_scale);
  cfg.probe_exclusion = number(tree, "probe.exclusion", cfg.probe_exclusion);
  cfg.farfield_directions = static_cast<int>(number(tree, "farfield.directions", cfg.farfield_directions));

  cfg.grid_points = static_cast<int>(number(tree, "grid.points", cfg.grid_points));
  cfg.grid_scale = number(tree, "grid.scale", cfg.grid_scale);
  cfg.grid_format = text(tree, "grid.format", cfg.grid_format);
  if (cfg.grid_format != "csv" && cfg.grid_format != "raw") throw ConfigError("grid.format must be csv or raw");

  const std::string mode = text(tree, "solver.mode", "iterative");
  if (mode == "dense") {
    cfg.solver.mode = SolveMode::dense;
  } else if (mode == "iterative") {
    cfg.solver.mode = SolveMode::iterative;
  } else {
    throw ConfigError("solver.mode must be dense or iterative");
  }
  cfg.solver.tolerance = number(tree, "solver.tolerance", cfg.solver.tolerance);
  cfg.solver.max_iterations = static_cast<int>(number(tree, "solver.max_iterations", cfg.solver.max_iterations));
  cfg.solver.restart = static_cast<int>(number(tree, "solver.restart", cfg.solver.restart));
  cfg.solver.dense_cap = static_cast<std::size_t>(number(tree, "solver.dense_cap", double(cfg.solver.dense_cap)));
  cfg.allow_large_ka = flag(tree, "solver.allow_large_ka", cfg.allow_large_ka);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open config " + path.string());
  return parse_config(is);
}

std::vector<Diagnostic> validate_config(const ExperimentConfig& cfg) {
  using Severity = Diagnostic::Severity;
  std::vector<Diagnostic> out;
  auto error = [&](std::string key, std::string message, std::string hint) {
    out.push_back({Severity::error, std::move(key), std::move(message), std::move(hint)});
  };

  if (!catalog::is_known(cfg.potential.name)) {
    error("potential.name", "unknown field '" + cfg.potential.name + "'",
          "use one of constant, gaussian, sinusoid, well");
  } else {
    try {
      (void)catalog::make_field(cfg.potential);
    } catch (const Error& e) {
      error("potential", e.what(), "supply the missing parameters");
    }
  }

  if (cfg.radii.empty()) error("scatterers.a", "no radii given", "list one or more radii, largest first");
  for (std::size_t i = 0; i < cfg.radii.size(); ++i) {
    if (!(cfg.radii[i] > 0.0)) error("scatterers.a", "radii must be positive", "remove nonpositive entries");
    if (i > 0 && !(cfg.radii[i] < cfg.radii[i - 1])) {
      error("scatterers.a", "radii must be strictly decreasing", "sort the radii from largest to smallest");
    }
  }
  if (!(cfg.k > 0.0)) error("wave.k", "wavenumber must be positive", "set k > 0");
  if (cfg.dimension == 3 && std::abs(norm(cfg.alpha) - 1.0) > 1e-8) {
    error("wave.alpha", "incident direction is not a unit vector", "normalize alpha");
  }
  if (cfg.dimension == 1 && cfg.direction_1d != 1 && cfg.direction_1d != -1) {
    error("wave.direction", "1D direction must be +1 or -1", "use 1 (from the left) or -1");
  }

  if (cfg.k > 0.0 && !cfg.radii.empty()) {
    const double a_max = *std::max_element(cfg.radii.begin(), cfg.radii.end());
    const double ka = cfg.k * a_max;
    if (ka > 0.5 && !cfg.allow_large_ka) {
      std::ostringstream os;
      os << "ka = " << ka << " > 0.5: outside the small-scatterer regime ka<<1";
      error("scatterers.a", os.str(), "decrease a or k (or set solver.allow_large_ka = true)");
    }
  }

  if (cfg.strategy == FactorizationStrategy::constant_density) {
    if (!(cfg.level > 0.0)) {
      error("factorization.level", "constant density must be positive", "choose 0 < n0 <= n_max");
    } else if (cfg.level > cfg.n_max) {
      std::ostringstream os;
      os << "density n0 = " << cfg.level << " exceeds n_max = " << cfg.n_max;
      error("factorization.level", os.str(), "lower n0; balls of radius a cannot stay disjoint above n_max");
    }
  } else if (catalog::is_known(cfg.potential.name)) {
    try {
      const ScalarField q = catalog::make_field(cfg.potential);
      const auto probes = cfg.dimension == 3 ? probe_lattice(cfg.domain, 10) : [&] {
        std::vector<Vec3> ps;
        for (int i = 0; i < 100; ++i) ps.push_back({cfg.interval.lo + cfg.interval.length() * i / 100.0, 0.0, 0.0});
        return ps;
      }();
      (void)factorize_potential(q, cfg.strategy, cfg.level, probes, cfg.n_max);
    } catch (const FeasibilityError& e) {
      error("factorization", e.what(), "pick A0 with the sign of q, or use constant-density");
    } catch (const Error&) {
    }
  }

  if (cfg.dimension == 3) {
    if (!(cfg.h > 0.0)) {
      error("effective.h", "grid spacing must be positive", "set h > 0");
    } else if (cfg.k * cfg.h > 0.5) {
      std::ostringstream os;
      os << "kh = " << cfg.k * cfg.h << " > 0.5 under-resolves the wavelength";
      error("effective.h", os.str(), "decrease h");
    }
  } else if (!(cfg.h_1d > 0.0) || cfg.k * cfg.h_1d > 0.2) {
    error("effective.h_1d", "1D grid spacing must satisfy 0 < kh <= 0.2", "decrease h_1d");
  }
  if (cfg.probe_points < 1) error("probe.points", "need at least one probe point", "set probe.points >= 1");
  if (!(cfg.solver.max_iterations > 0) || !(cfg.solver.restart > 0)) {
    error("solver", "iteration cap and restart length must be positive", "use e.g. max_iterations = 500, restart = 50");
  }
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Diagnostic::Severity::error; });
}

WaveContext wave_context(const ExperimentConfig& cfg) { return WaveContext(cfg.k, cfg.alpha); }
oned::WaveContext1D wave_context_1d(const ExperimentConfig& cfg) { return oned::WaveContext1D(cfg.k, cfg.direction_1d); }

}  // namespace scatterlab::experiments
