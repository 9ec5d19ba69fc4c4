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

#include "scatterlab/core/field_catalog.hpp"

#include <algorithm>
#include <cmath>

#include "scatterlab/error.hpp"

namespace scatterlab::catalog {

ScalarField constant(double value) { return ScalarField::constant(value); }

ScalarField gaussian_bump(double amplitude, double width, const Vec3& center) {
  if (!(width > 0.0)) throw InvalidArgument("gaussian width must be positive");
  const double inv_w2 = 1.0 / (width * width);
  return ScalarField(
      [=](const Vec3& x) {
        const Vec3 d = x - center;
        return amplitude * std::exp(-dot(d, d) * inv_w2);
      },
      std::min(0.0, amplitude), std::max(0.0, amplitude), "gaussian");
}

ScalarField sinusoid(double offset, double amplitude, double frequency, int axis, double phase) {
  if (axis < 0 || axis > 2) throw InvalidArgument("sinusoid axis must be 0, 1 or 2");
  const double w = 2.0 * kPi * frequency;
  const double amp = std::abs(amplitude);
  return ScalarField([=](const Vec3& x) { return offset + amplitude * std::sin(w * x[axis] + phase); },
                     offset - amp, offset + amp, "sinusoid");
}

ScalarField spherical_well(double depth, double radius, const Vec3& center) {
  if (!(radius > 0.0)) throw InvalidArgument("well radius must be positive");
  const double r2 = radius * radius;
  return ScalarField(
      [=](const Vec3& x) {
        const Vec3 d = x - center;
        return dot(d, d) < r2 ? depth : 0.0;
      },
      std::min(0.0, depth), std::max(0.0, depth), "well");
}

namespace {

double get(const FieldSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    throw ConfigError("field '" + spec.name + "' is missing parameter '" + key + "'");
  }
  return it->second;
}

double get_or(const FieldSpec& spec, const std::string& key, double fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

Vec3 get_vec(const FieldSpec& spec, const std::string& key) {
  return {get_or(spec, key + "_x", 0.0), get_or(spec, key + "_y", 0.0), get_or(spec, key + "_z", 0.0)};
}

}  // namespace

bool is_known(const std::string& name) {
  return name == "constant" || name == "gaussian" || name == "sinusoid" || name == "well";
}

ScalarField make_field(const FieldSpec& spec) {
  if (spec.name == "constant") return constant(get(spec, "value"));
  if (spec.name == "gaussian") {
    return gaussian_bump(get(spec, "amplitude"), get(spec, "width"), get_vec(spec, "center"));
  }
  if (spec.name == "sinusoid") {
    return sinusoid(get_or(spec, "offset", 0.0), get(spec, "amplitude"), get(spec, "frequency"),
                    static_cast<int>(get_or(spec, "axis", 0.0)), get_or(spec, "phase", 0.0));
  }
  if (spec.name == "well") {
    return spherical_well(get(spec, "depth"), get(spec, "radius"), get_vec(spec, "center"));
  }
  throw ConfigError("unknown field '" + spec.name + "' (known: constant, gaussian, sinusoid, well)");
}

}  // namespace scatterlab::catalog
