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

#include "scatterlab/placement/cloud.hpp"

// Plain-text cloud files:
//
//   # dim=3 a=<a> M=<M>
//   x y z A_m          (one line per scatterer; "x A_m" when dim=1)
//
// Numbers are written with 17 significant digits so files round-trip exactly.
namespace scatterlab {

void write_cloud(std::ostream& os, const ScattererCloud& cloud);
ScattererCloud read_cloud(std::istream& is);

void write_cloud_file(const std::filesystem::path& path, const ScattererCloud& cloud);
ScattererCloud read_cloud_file(const std::filesystem::path& path);

}  // namespace scatterlab
