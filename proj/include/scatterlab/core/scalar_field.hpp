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
#include <string>
#include <utility>
#include <vector>

#include "scatterlab/core/vec3.hpp"

namespace scatterlab {

// Real-valued field with declared bounds. Evaluators must be pure: the type is
// shared across worker threads without synchronisation.
class ScalarField {
 public:
  using Evaluator = std::function<double(const Vec3&)>;

  ScalarField(Evaluator f, double lower, double upper, std::string name = "custom");

  static ScalarField constant(double value);

  double operator()(const Vec3& x) const { return f_(x); }
  double lower_bound() const { return lower_; }
  double upper_bound() const { return upper_; }
  const std::string& name() const { return name_; }

 private:
  Evaluator f_;
  double lower_;
  double upper_;
  std::string name_;
};

}  // namespace scatterlab
