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

#include "scatterlab/core/scalar_field.hpp"

#include <cmath>

#include "scatterlab/error.hpp"

namespace scatterlab {

ScalarField::ScalarField(Evaluator f, double lower, double upper, std::string name)
    : f_(std::move(f)), lower_(lower), upper_(upper), name_(std::move(name)) {
  if (!f_) throw InvalidArgument("scalar field needs an evaluator");
  if (!(lower <= upper) || std::isnan(lower) || std::isnan(upper)) {
    throw InvalidArgument("scalar field bounds must satisfy lower <= upper");
  }
}

ScalarField ScalarField::constant(double value) {
  return ScalarField([value](const Vec3&) { return value; }, value, value, "constant");
}

}  // namespace scatterlab
