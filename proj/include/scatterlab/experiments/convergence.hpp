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

#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "scatterlab/effective3d/lippmann_schwinger.hpp"
#include "scatterlab/error.hpp"
#include "scatterlab/experiments/config.hpp"

namespace scatterlab::experiments {

struct ConvergenceRow {
  double a = 0.0;
  std::size_t count = 0;
  int iterations = 0;
  double residual = 0.0;
  double sup_error = 0.0;       // max over probes |u_M - u_e|
  double l2_error = 0.0;        // RMS over probes
  double sup_error_exterior = 0.0;  // max over probes outside D
  double farfield_error = 0.0;  // max over directions |A_M - A_e| / max |A_e|
  double optical_residual = 0.0;
};

// Wall-clock seconds; kept apart from the rows so reports stay reproducible.
struct StageTiming {
  double a = 0.0;
  double place = 0.0;
  double solve = 0.0;
  double evaluate = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  std::vector<StageTiming> timings;
  std::size_t probe_count = 0;
  std::size_t effective_nodes = 0;
  int effective_iterations = 0;
  double effective_residual = 0.0;
};

// A stage of a pipeline failed. cause() is the original exception.
class StageError : public Error {
 public:
  StageError(std::string stage, std::exception_ptr cause, const std::string& message)
      : Error("stage '" + stage + "' failed: " + message), stage_(std::move(stage)), cause_(std::move(cause)) {}
  const std::string& stage() const { return stage_; }
  std::exception_ptr cause() const { return cause_; }

 private:
  std::string stage_;
  std::exception_ptr cause_;
};

// Probe points: per_axis^3 lattice on the domain's bounding box scaled by
// `scale` about its center.
std::vector<Vec3> probe_grid(const BoundedDomain& domain, int per_axis, double scale);

// Drops probes within `distance` of any center.
std::vector<Vec3> exclude_near(std::span<const Vec3> probes, const ScattererCloud& cloud, double distance);

using RowSink = std::function<void(const ConvergenceRow&, const StageTiming&)>;

// Solves the effective equation once, then for every radius places the cloud,
// solves the point-scatterer system and compares fields and far fields. Each
// finished row is handed to `sink` before the next radius starts, so partial
// results survive a later failure. Failures are rethrown as StageError.
ConvergenceReport run_convergence_3d(const ExperimentConfig& cfg, const RowSink& sink = {});

std::vector<oned::ConvergenceRow1D> run_convergence_1d(const ExperimentConfig& cfg);

// Shared helpers for the single-shot commands.
PotentialSpec potential_spec(const ExperimentConfig& cfg);
ScattererCloud place_cloud(const ExperimentConfig& cfg, const PotentialSpec& spec, double a);
GridSpec output_grid(const ExperimentConfig& cfg);

}  // namespace scatterlab::experiments
