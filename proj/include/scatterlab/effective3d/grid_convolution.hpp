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

#include <array>
#include <memory>
#include <span>

#include "scatterlab/core/grid_field.hpp"

namespace scatterlab {

// Discrete convolution with the Helmholtz kernel on a regular grid,
//
//   out_i = sum_j T(y_i - y_j) w_j,   T(d) = h^3 exp(ik|d|) / (4 pi |d|),  T(0) = self,
//
// computed with zero-padded FFTs (size 2n per axis) in O(N log N). Plans are
// built with FFTW_ESTIMATE so the result is the same bit pattern on every run.
// apply() reuses an internal buffer: one caller at a time.
class GridConvolution {
 public:
  GridConvolution(const GridSpec& grid, double k, Complex self);
  ~GridConvolution();
  GridConvolution(const GridConvolution&) = delete;
  GridConvolution& operator=(const GridConvolution&) = delete;

  std::size_t size() const { return grid_.size(); }
  void apply(std::span<const Complex> w, std::span<Complex> out) const;

 private:
  struct Plans;

  GridSpec grid_;
  std::array<std::size_t, 3> padded_{};
  std::unique_ptr<Plans> plans_;
};

}  // namespace scatterlab
