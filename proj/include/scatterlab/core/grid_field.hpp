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
#include <cstddef>
#include <vector>

#include "scatterlab/core/vec3.hpp"

namespace scatterlab {

// Regular lattice: node(i, j, l) = origin + spacing * (i, j, l).
struct GridSpec {
  Vec3 origin;
  double spacing = 1.0;
  std::array<std::size_t, 3> extents{1, 1, 1};

  std::size_t size() const { return extents[0] * extents[1] * extents[2]; }
  std::size_t index(std::size_t i, std::size_t j, std::size_t l) const {
    return (l * extents[1] + j) * extents[0] + i;
  }
  Vec3 node(std::size_t i, std::size_t j, std::size_t l) const {
    return origin + spacing * Vec3{double(i), double(j), double(l)};
  }
  Vec3 node(std::size_t flat) const {
    const std::size_t i = flat % extents[0];
    const std::size_t j = (flat / extents[0]) % extents[1];
    const std::size_t l = flat / (extents[0] * extents[1]);
    return node(i, j, l);
  }
};

struct GridField {
  GridSpec grid;
  std::vector<Complex> values;

  bool all_finite() const;
};

}  // namespace scatterlab
