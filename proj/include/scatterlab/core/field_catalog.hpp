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

#include <map>
#include <string>

#include "scatterlab/core/scalar_field.hpp"

// Built-in analytic fields, addressable by name from experiment configs.
namespace scatterlab::catalog {

ScalarField constant(double value);

// amplitude * exp(-|x - center|^2 / width^2)
ScalarField gaussian_bump(double amplitude, double width, const Vec3& center);

// offset + amplitude * sin(2*pi*frequency*x[axis] + phase)
ScalarField sinusoid(double offset, double amplitude, double frequency, int axis, double phase = 0.0);

// depth inside the open ball |x - center| < radius, zero outside.
ScalarField spherical_well(double depth, double radius, const Vec3& center);

// Parameters for make_field; vector-valued parameters use the keys
// "<name>_x", "<name>_y", "<name>_z".
struct FieldSpec {
  std::string name;
  std::map<std::string, double> params;
};

// Throws ConfigError for unknown names or missing parameters.
ScalarField make_field(const FieldSpec& spec);

bool is_known(const std::string& name);

}  // namespace scatterlab::catalog
