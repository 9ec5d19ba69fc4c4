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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "scatterlab/core/domain.hpp"
#include "scatterlab/core/field_catalog.hpp"
#include "scatterlab/core/potential.hpp"
#include "scatterlab/core/wave.hpp"
#include "scatterlab/linalg/ball_system.hpp"
#include "scatterlab/oned/oned.hpp"

namespace scatterlab::experiments {

// Everything an experiment needs. Defaults match configs/convergence3d.ini.
struct ExperimentConfig {
  int dimension = 3;

  BoundedDomain domain = BoundedDomain::box({0.0, 0.0, 0.0}, {1.0, 1.0, 1.0});
  oned::Interval1D interval{0.0, 1.0};

  catalog::FieldSpec potential{"gaussian",
                               {{"amplitude", -1.0}, {"width", 0.25}, {"center_x", 0.5}, {"center_y", 0.5},
                                {"center_z", 0.5}}};
  FactorizationStrategy strategy = FactorizationStrategy::constant_density;
  double level = 0.3;
  double n_max = kDefaultMaxDensity;

  std::vector<double> radii{0.04, 0.02, 0.01};
  double cell_factor = 2.5;

  double k = 1.0;
  Vec3 alpha{0.0, 0.0, 1.0};
  int direction_1d = 1;

  double h = 1.0 / 64.0;  // effective-equation grid
  int q_subsamples = 4;
  // Convergence studies combine the solutions on h and h/2 as (4 u_{h/2} - u_h) / 3.
  bool richardson = true;
  double h_1d = 1e-3;

  int probe_points = 9;          // per axis (3D) or along the line (1D)
  double probe_scale = 1.2;      // probe box relative to the domain box
  double probe_exclusion = 2.0;  // in units of a
  int farfield_directions = 64;

  // Optional output grid for solve-fl / solve-ls.
  int grid_points = 0;
  double grid_scale = 1.2;
  std::string grid_format = "csv";  // csv | raw

  SolverOptions solver;
  bool allow_large_ka = false;
  int threads = 0;
  std::string output_dir = "out";
};

// INI-style text: "[section]" headers, "key = value" lines, ';' comments.
// Vectors are whitespace-separated numbers. Throws ConfigError.
ExperimentConfig parse_config(std::istream& is);
ExperimentConfig load_config(const std::filesystem::path& path);

struct Diagnostic {
  enum class Severity { error, warning };
  Severity severity = Severity::error;
  std::string key;
  std::string message;
  std::string hint;
};

// All violations at once; an empty list means the config is usable as is.
std::vector<Diagnostic> validate_config(const ExperimentConfig& cfg);
bool has_errors(const std::vector<Diagnostic>& diagnostics);

WaveContext wave_context(const ExperimentConfig& cfg);
oned::WaveContext1D wave_context_1d(const ExperimentConfig& cfg);

}  // namespace scatterlab::experiments
