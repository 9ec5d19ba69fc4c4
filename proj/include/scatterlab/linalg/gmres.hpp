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

#include <functional>
#include <span>
#include <vector>

#include "scatterlab/core/vec3.hpp"

namespace scatterlab::linalg {

using LinearOperator = std::function<void(std::span<const Complex> in, std::span<Complex> out)>;

struct GmresOptions {
  double tolerance = 1e-8;
  int max_iterations = 500;  // operator applications inside Arnoldi cycles
  int restart = 50;
};

struct GmresResult {
  std::vector<Complex> x;
  int iterations = 0;
  bool converged = false;
  // max_i |b - A x|_i / max_i |b|_i of the returned x.
  double relative_residual = 0.0;
  // Residual estimate after every Arnoldi step, scaled by max|b|.
  std::vector<double> residual_history;
};

// Restarted GMRES without preconditioning. Stops once ||b - A x||_2 falls
// below tolerance * max|b|, which bounds the relative max-norm residual by
// the tolerance. The initial guess defaults to b.
GmresResult gmres(const LinearOperator& apply, std::span<const Complex> b, const GmresOptions& options,
                  std::span<const Complex> x0 = {});

}  // namespace scatterlab::linalg
