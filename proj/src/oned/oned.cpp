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

#include "scatterlab/oned/oned.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "scatterlab/error.hpp"

namespace scatterlab::oned {

Interval1D::Interval1D(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) throw InvalidArgument("interval needs finite lo < hi");
}

WaveContext1D::WaveContext1D(double k_, int direction_, Complex amplitude_)
    : k(k_), direction(direction_), amplitude(amplitude_) {
  if (!(k > 0.0)) throw InvalidArgument("wavenumber k must be positive");
  if (direction != 1 && direction != -1) throw InvalidArgument("1D incident direction must be +1 or -1");
}

PlacementReport place1d_with_report(const Interval1D& interval, const ScalarField& n, double a, const ScalarField& A,
                                    const PlacementOptions& options) {
  return place_interval_with_report(interval.lo, interval.hi, CountingLaw{n, a, 1}, A, options);
}

ScattererCloud place1d(const Interval1D& interval, const ScalarField& n, double a, const ScalarField& A,
                       const PlacementOptions& options) {
  return place1d_with_report(interval, n, a, A, options).cloud;
}

namespace {

// exp(ik|x - y|) / (2ik)
Complex kernel(double x, double y, double k) { return std::polar(1.0, k * std::abs(x - y)) / Complex(0.0, 2.0 * k); }

constexpr double kDenseTolerance = 1e-10;

std::vector<Complex> dense_solve(const Eigen::MatrixXcd& mat, const Eigen::VectorXcd& rhs, double& residual,
                                 const char* what) {
  const Eigen::VectorXcd x = mat.partialPivLu().solve(rhs);
  const double scale = std::max(rhs.cwiseAbs().maxCoeff(), 1e-300);
  residual = (mat * x - rhs).cwiseAbs().maxCoeff() / scale;
  if (!std::isfinite(residual) || residual > kDenseTolerance) {
    std::ostringstream os;
    os << what << ": dense solve left relative residual " << residual;
    throw SolverError(os.str(), {residual});
  }
  return {x.data(), x.data() + x.size()};
}

}  // namespace

FoldyLax1D solve_fl_1d(const ScattererCloud& cloud, const WaveContext1D& ctx) {
  if (cloud.dim != 1) throw InvalidArgument("solve_fl_1d needs a 1D cloud");
  FoldyLax1D sol;
  sol.cloud_ = cloud;
  sol.ctx_ = ctx;
  const auto n = static_cast<Eigen::Index>(cloud.size());
  if (n == 0) return sol;
  const double a = cloud.radius;
  const double k = ctx.k;
  Eigen::MatrixXcd mat(n, n);
  Eigen::VectorXcd rhs(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double xj = cloud.centers[std::size_t(j)].x;
    rhs[j] = ctx.incident(xj);
    for (Eigen::Index m = 0; m < n; ++m) {
      const double w = cloud.strengths[std::size_t(m)] * 2.0 * a;
      mat(j, m) = (j == m ? 1.0 : 0.0) - kernel(xj, cloud.centers[std::size_t(m)].x, k) * w;
    }
  }
  sol.u_ = dense_solve(mat, rhs, sol.residual_, "1D point-scatterer system");
  return sol;
}

Complex FoldyLax1D::field(double x) const {
  Complex s = ctx_.incident(x);
  for (std::size_t m = 0; m < cloud_.size(); ++m) {
    s += kernel(x, cloud_.centers[m].x, ctx_.k) * (cloud_.strengths[m] * 2.0 * cloud_.radius) * u_[m];
  }
  return s;
}

Effective1D solve_nystrom_1d(std::vector<double> nodes, std::vector<double> weighted_q, const WaveContext1D& ctx) {
  if (nodes.size() != weighted_q.size()) throw InvalidArgument("one weight per node required");
  Effective1D sol;
  sol.ctx_ = ctx;
  const auto n = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXcd mat(n, n);
  Eigen::VectorXcd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    rhs[i] = ctx.incident(nodes[std::size_t(i)]);
    for (Eigen::Index j = 0; j < n; ++j) {
      mat(i, j) = (i == j ? 1.0 : 0.0) - kernel(nodes[std::size_t(i)], nodes[std::size_t(j)], ctx.k) *
                                             weighted_q[std::size_t(j)];
    }
  }
  sol.u_ = n > 0 ? dense_solve(mat, rhs, sol.residual_, "1D Nystrom system") : std::vector<Complex>{};
  sol.nodes_ = std::move(nodes);
  sol.weights_ = std::move(weighted_q);
  return sol;
}

Complex Effective1D::field(double x) const {
  Complex s = ctx_.incident(x);
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (weights_[j] != 0.0) s += kernel(x, nodes_[j], ctx_.k) * weights_[j] * u_[j];
  }
  return s;
}

namespace {

void check_resolution(double k, double h) {
  if (!(h > 0.0)) throw InvalidArgument("grid spacing h must be positive");
  if (k * h > 0.2) {
    std::ostringstream os;
    os << "kh = " << k * h << " > 0.2 under-resolves the 1D wave";
    throw ResolutionError(os.str());
  }
}

}  // namespace

Effective1D solve_ls_1d(const PiecewisePotential1D& q, const WaveContext1D& ctx, double h) {
  check_resolution(ctx.k, h);
  std::vector<double> nodes;
  std::vector<double> wq;
  const auto& b = q.breakpoints();
  if (q.layers() == 0) return solve_nystrom_1d({}, {}, ctx);
  nodes.push_back(b.front());
  wq.push_back(0.0);
  for (std::size_t j = 0; j < q.layers(); ++j) {
    const double width = b[j + 1] - b[j];
    if (width <= 0.0) continue;
    const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil(width / h - 1e-9)));
    const double step = width / double(panels);
    const double half = 0.5 * step * q.values()[j];
    for (std::size_t p = 0; p < panels; ++p) {
      wq.back() += half;
      nodes.push_back(p + 1 == panels ? b[j + 1] : b[j] + double(p + 1) * step);
      wq.push_back(half);
    }
  }
  return solve_nystrom_1d(std::move(nodes), std::move(wq), ctx);
}

Effective1D solve_ls_1d(const ScalarField& q, const Interval1D& interval, const WaveContext1D& ctx, double h) {
  check_resolution(ctx.k, h);
  const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil(interval.length() / h - 1e-9)));
  const double step = interval.length() / double(panels);
  std::vector<double> nodes(panels + 1);
  std::vector<double> wq(panels + 1);
  for (std::size_t i = 0; i <= panels; ++i) {
    nodes[i] = i == panels ? interval.hi : interval.lo + double(i) * step;
    const double w = (i == 0 || i == panels) ? 0.5 * step : step;
    wq[i] = w * q(Vec3{nodes[i], 0.0, 0.0});
  }
  return solve_nystrom_1d(std::move(nodes), std::move(wq), ctx);
}

std::vector<ConvergenceRow1D> converge_1d(const ScalarField& q, const Interval1D& interval,
                                          FactorizationStrategy strategy, double level, std::span<const double> radii,
                                          const WaveContext1D& ctx, const Convergence1DOptions& options) {
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (!(radii[i] < radii[i - 1])) throw InvalidArgument("radius sequence must be strictly decreasing");
  }
  std::vector<Vec3> probes_fact;
  for (int i = 0; i <= 100; ++i) {
    probes_fact.push_back({interval.lo + interval.length() * std::min(i / 100.0, 1.0 - 1e-12), 0.0, 0.0});
  }
  const PotentialSpec spec = factorize_potential(q, strategy, level, probes_fact, options.placement.n_max);
  const Effective1D effective = solve_ls_1d(q, interval, ctx, options.h);

  const double span = interval.length();
  std::vector<double> probe_line(options.probes);
  for (std::size_t p = 0; p < options.probes; ++p) {
    const double t = options.probes > 1 ? double(p) / double(options.probes - 1) : 0.5;
    probe_line[p] = interval.lo - 0.5 * span + 2.0 * span * t;
  }

  std::vector<ConvergenceRow1D> rows;
  for (double a : radii) {
    const ScattererCloud cloud = place1d(interval, spec.n, a, spec.A, options.placement);
    const TransferSolution oracle = transfer_matrix_solve(PiecewisePotential1D::from_cloud(cloud), ctx);
    const FoldyLax1D fl = solve_fl_1d(cloud, ctx);
    ConvergenceRow1D row;
    row.a = a;
    row.count = cloud.size();
    for (double x : probe_line) {
      const bool near = std::any_of(cloud.centers.begin(), cloud.centers.end(),
                                    [&](const Vec3& c) { return std::abs(c.x - x) < options.exclusion * a; });
      if (near) continue;
      const Complex ue = effective.field(x);
      const Complex um = fl.field(x);
      const Complex ut = oracle.field(x);
      row.sup_error_vs_ue = std::max(row.sup_error_vs_ue, std::abs(um - ue));
      row.sup_error_vs_oracle = std::max(row.sup_error_vs_oracle, std::abs(um - ut));
      row.sup_error_oracle_vs_ue = std::max(row.sup_error_oracle_vs_ue, std::abs(ut - ue));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace scatterlab::oned
