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

#include <algorithm>
#include <cmath>

#include "scatterlab/error.hpp"
#include "scatterlab/oned/oned.hpp"

namespace scatterlab::oned {

PiecewisePotential1D::PiecewisePotential1D(std::vector<double> breakpoints, std::vector<double> values)
    : breaks_(std::move(breakpoints)), values_(std::move(values)) {
  if (values_.empty() && breaks_.empty()) return;
  if (breaks_.size() != values_.size() + 1) throw InvalidArgument("need one more breakpoint than step values");
  for (std::size_t i = 1; i < breaks_.size(); ++i) {
    if (!(breaks_[i] >= breaks_[i - 1])) throw InvalidArgument("breakpoints must be nondecreasing");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw InvalidArgument("step values must be finite");
  }
}

PiecewisePotential1D PiecewisePotential1D::constant(double lo, double hi, double value) {
  if (!(hi > lo)) throw InvalidArgument("step potential needs lo < hi");
  return PiecewisePotential1D({lo, hi}, {value});
}

PiecewisePotential1D PiecewisePotential1D::from_cloud(const ScattererCloud& cloud) {
  if (cloud.dim != 1) throw InvalidArgument("literal step potential needs a 1D cloud");
  std::vector<std::size_t> order(cloud.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t l, std::size_t r) { return cloud.centers[l].x < cloud.centers[r].x; });
  std::vector<double> breaks;
  std::vector<double> values;
  const double a = cloud.radius;
  for (std::size_t i : order) {
    const double left = cloud.centers[i].x - a;
    const double right = cloud.centers[i].x + a;
    if (!breaks.empty()) {
      if (left < breaks.back()) throw InvalidArgument("segments overlap");
      values.push_back(0.0);
    }
    breaks.push_back(left);
    values.push_back(cloud.strengths[i]);
    breaks.push_back(right);
  }
  return PiecewisePotential1D(std::move(breaks), std::move(values));
}

double PiecewisePotential1D::operator()(double x) const {
  if (values_.empty() || x < breaks_.front() || x >= breaks_.back()) return 0.0;
  const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  return values_[std::size_t(it - breaks_.begin()) - 1];
}

PiecewisePotential1D PiecewisePotential1D::mirrored() const {
  std::vector<double> b(breaks_.rbegin(), breaks_.rend());
  for (double& x : b) x = -x;
  return PiecewisePotential1D(std::move(b), std::vector<double>(values_.rbegin(), values_.rend()));
}

namespace {

// (u, u') after travelling `length` through a layer with kappa^2 = k^2 - q:
// [cos(kappa L), sin(kappa L)/kappa; -kappa sin(kappa L), cos(kappa L)].
struct Propagator {
  Complex c, s_over_kappa, kappa_s;
};

Propagator propagate(double kappa2, double length) {
  const Complex kappa = std::sqrt(Complex(kappa2, 0.0));
  const Complex z = kappa * length;
  Propagator p;
  p.c = std::cos(z);
  if (std::abs(z) < 1e-6) {
    const Complex z2 = z * z;
    p.s_over_kappa = length * (1.0 - z2 / 6.0 + z2 * z2 / 120.0);
  } else {
    p.s_over_kappa = std::sin(z) / kappa;
  }
  p.kappa_s = kappa2 * p.s_over_kappa;
  return p;
}

// Same potential with zero-width layers dropped, equal neighbours merged and
// zero layers trimmed from both ends. Free stretches then cost no rounding.
PiecewisePotential1D normalized(const PiecewisePotential1D& q) {
  const auto& b = q.breakpoints();
  const auto& v = q.values();
  std::vector<double> breaks, values;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!(b[j + 1] > b[j])) continue;
    if (!values.empty() && values.back() == v[j]) {
      breaks.back() = b[j + 1];
      continue;
    }
    if (values.empty()) breaks.push_back(b[j]);
    values.push_back(v[j]);
    breaks.push_back(b[j + 1]);
  }
  while (!values.empty() && values.back() == 0.0) {
    values.pop_back();
    breaks.pop_back();
  }
  std::size_t first = 0;
  while (first < values.size() && values[first] == 0.0) ++first;
  if (values.empty() || first == values.size()) return {};
  return PiecewisePotential1D(std::vector<double>(breaks.begin() + long(first), breaks.end()),
                              std::vector<double>(values.begin() + long(first), values.end()));
}

}  // namespace

TransferSolution transfer_matrix_solve(const PiecewisePotential1D& q, const WaveContext1D& ctx) {
  TransferSolution sol;
  sol.k_ = ctx.k;
  sol.direction_ = ctx.direction;
  sol.amplitude_ = ctx.amplitude;
  sol.potential_ = normalized(ctx.direction > 0 ? q : q.mirrored());
  const PiecewisePotential1D& pot = sol.potential_;
  const double k = ctx.k;
  const Complex ik(0.0, k);
  if (pot.layers() == 0) return sol;

  const auto& b = pot.breakpoints();
  const std::size_t nb = b.size();
  sol.u_.resize(nb);
  sol.du_.resize(nb);
  // Provisional t = 1 on the right, propagated back with the inverse matrices.
  sol.u_[nb - 1] = std::polar(1.0, k * b[nb - 1]);
  sol.du_[nb - 1] = ik * sol.u_[nb - 1];
  for (std::size_t j = nb - 1; j-- > 0;) {
    const Propagator p = propagate(k * k - pot.values()[j], -(b[j + 1] - b[j]));
    sol.u_[j] = p.c * sol.u_[j + 1] + p.s_over_kappa * sol.du_[j + 1];
    sol.du_[j] = -p.kappa_s * sol.u_[j + 1] + p.c * sol.du_[j + 1];
  }
  const Complex in_coeff = 0.5 * (sol.u_[0] + sol.du_[0] / ik) * std::polar(1.0, -k * b[0]);
  const Complex out_coeff = 0.5 * (sol.u_[0] - sol.du_[0] / ik) * std::polar(1.0, k * b[0]);
  sol.t_ = 1.0 / in_coeff;
  sol.r_ = out_coeff / in_coeff;
  for (std::size_t j = 0; j < nb; ++j) {
    sol.u_[j] /= in_coeff;
    sol.du_[j] /= in_coeff;
  }
  return sol;
}

Complex TransferSolution::field(double x_in) const {
  const double x = direction_ > 0 ? x_in : -x_in;
  if (potential_.layers() == 0) return amplitude_ * std::polar(1.0, k_ * x);
  const auto& b = potential_.breakpoints();
  if (x < b.front()) return amplitude_ * (std::polar(1.0, k_ * x) + r_ * std::polar(1.0, -k_ * x));
  if (x >= b.back()) return amplitude_ * t_ * std::polar(1.0, k_ * x);
  const std::size_t j = std::size_t(std::upper_bound(b.begin(), b.end(), x) - b.begin()) - 1;
  const Propagator p = propagate(k_ * k_ - potential_.values()[j], x - b[j]);
  return amplitude_ * (p.c * u_[j] + p.s_over_kappa * du_[j]);
}

}  // namespace scatterlab::oned
