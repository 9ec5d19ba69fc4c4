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

#include "scatterlab/placement/placement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "scatterlab/core/green.hpp"
#include "scatterlab/error.hpp"

namespace scatterlab {

double CountingLaw::volume() const { return dim == 1 ? 2.0 * a : ball_volume(a); }

namespace {

// Slot pitch is kept a hair above 2a so that rounding in the slot coordinates
// can never bring two centers (or a center and the boundary) closer than
// 2a (resp. a).
constexpr double kPitchMargin = 1e-9;

struct Region {
  int dim = 3;
  Vec3 lo;
  Vec3 hi;
  std::function<bool(const Vec3&)> inside;
  std::function<double(const Vec3&)> boundary_distance;
};

struct AxisLayout {
  int cells = 1;
  double cell_side = 0.0;
  int slots = 1;
  double pitch = 0.0;
};

AxisLayout layout_axis(double length, double a, double cell_factor) {
  AxisLayout ax;
  const double target = cell_factor * std::sqrt(a);
  ax.cells = std::max(1, static_cast<int>(std::lround(length / target)));
  ax.cell_side = length / ax.cells;
  ax.slots = static_cast<int>(std::floor(ax.cell_side / (2.0 * a * (1.0 + kPitchMargin))));
  if (ax.slots < 1) {
    std::ostringstream os;
    os << "radius a = " << a << " is too large for cells of side " << ax.cell_side
       << " (increase cell_factor or decrease a)";
    throw PlacementError(os.str());
  }
  ax.pitch = ax.cell_side / ax.slots;
  return ax;
}

// Caps every weight at 1 (one center per slot) while preserving the total,
// spreading any excess proportionally over the slots that still have room.
void water_fill(std::vector<double>& w) {
  for (int pass = 0; pass < 64; ++pass) {
    double excess = 0.0;
    double room = 0.0;
    for (double& v : w) {
      if (v > 1.0) {
        excess += v - 1.0;
        v = 1.0;
      } else {
        room += 1.0 - v;
      }
    }
    if (excess <= 0.0) return;
    if (room <= 0.0) return;
    const double frac = std::min(1.0, excess / room);
    for (double& v : w) {
      if (v < 1.0) v += frac * (1.0 - v);
    }
  }
}

PlacementReport place_impl(const Region& region, const CountingLaw& law, const ScalarField& A,
                           const PlacementOptions& opt) {
  if (!(law.a > 0.0)) throw InvalidArgument("placement radius a must be positive");
  if (law.dim != region.dim) throw InvalidArgument("counting law dimension does not match the domain");
  if (law.n.lower_bound() < 0.0) throw FeasibilityError("density n must be nonnegative");
  if (law.n.upper_bound() > opt.n_max) {
    std::ostringstream os;
    os << "density n reaches " << law.n.upper_bound() << " > n_max = " << opt.n_max
       << "; balls of radius a cannot be kept disjoint";
    throw FeasibilityError(os.str());
  }

  const double a = law.a;
  const double vol = law.volume();
  std::array<AxisLayout, 3> axes{};
  for (int d = 0; d < region.dim; ++d) axes[std::size_t(d)] = layout_axis(region.hi[d] - region.lo[d], a, opt.cell_factor);

  double slot_measure = 1.0;
  for (int d = 0; d < region.dim; ++d) slot_measure *= axes[std::size_t(d)].pitch;
  const double slot_weight_scale = slot_measure / vol;

  PlacementReport report;
  report.cloud.dim = region.dim;
  report.cloud.radius = a;
  report.slots_per_cell = std::size_t(axes[0].slots) * std::size_t(axes[1].slots) * std::size_t(axes[2].slots);

  std::vector<Vec3> elig_pos;
  std::vector<double> elig_w;
  double carry = 0.0;

  for (int cl = 0; cl < axes[2].cells; ++cl) {
    for (int cj = 0; cj < axes[1].cells; ++cj) {
      for (int ci = 0; ci < axes[0].cells; ++ci) {
        const std::array<int, 3> cidx{ci, cj, cl};
        PlacementCell cell;
        for (int d = 0; d < 3; ++d) {
          const auto& ax = axes[std::size_t(d)];
          cell.lo[d] = d < region.dim ? region.lo[d] + cidx[std::size_t(d)] * ax.cell_side : 0.0;
          cell.hi[d] = d < region.dim ? cell.lo[d] + ax.cell_side : 0.0;
        }

        // Midpoint rule on the slot lattice for V^{-1} * integral of n over the cell.
        double target = 0.0;
        for (int sl = 0; sl < axes[2].slots; ++sl) {
          for (int sj = 0; sj < axes[1].slots; ++sj) {
            for (int si = 0; si < axes[0].slots; ++si) {
              const std::array<int, 3> sidx{si, sj, sl};
              Vec3 p;
              for (int d = 0; d < region.dim; ++d) {
                p[d] = cell.lo[d] + (sidx[std::size_t(d)] + 0.5) * axes[std::size_t(d)].pitch;
              }
              if (region.inside(p)) target += law.n(p) * slot_weight_scale;
            }
          }
        }

        const double wanted = target + carry;
        const double rounded = std::max(0.0, std::floor(wanted + 0.5));
        carry = wanted - rounded;
        const auto count = static_cast<std::size_t>(rounded);
        cell.target = target;
        cell.count = count;
        report.cells.push_back(cell);
        if (count == 0) continue;

        // Candidate sites: the same lattice, minus slots closer than a to the boundary.
        elig_pos.clear();
        elig_w.clear();
        for (int sl = 0; sl < axes[2].slots; ++sl) {
          for (int sj = 0; sj < axes[1].slots; ++sj) {
            for (int si = 0; si < axes[0].slots; ++si) {
              const std::array<int, 3> sidx{si, sj, sl};
              Vec3 p;
              for (int d = 0; d < region.dim; ++d) {
                p[d] = cell.lo[d] + (sidx[std::size_t(d)] + 0.5) * axes[std::size_t(d)].pitch;
              }
              if (region.inside(p) && region.boundary_distance(p) >= a) {
                elig_pos.push_back(p);
                elig_w.push_back(law.n(p));
              }
            }
          }
        }
        if (count > elig_pos.size()) {
          std::ostringstream os;
          os << "cell (" << ci << ", " << cj << ", " << cl << ") spanning [" << cell.lo.x << ", " << cell.hi.x
             << "] x [" << cell.lo.y << ", " << cell.hi.y << "] x [" << cell.lo.z << ", " << cell.hi.z
             << "] needs " << count << " centers but only " << elig_pos.size()
             << " non-overlapping slots exist (density too high for this radius)";
          throw PlacementError(os.str());
        }

        double total = 0.0;
        for (double w : elig_w) total += w;
        if (total <= 0.0) {
          std::fill(elig_w.begin(), elig_w.end(), 1.0);
          total = double(elig_w.size());
        }
        for (double& w : elig_w) w *= double(count) / total;
        water_fill(elig_w);

        // Cumulative rounding: slot s is taken when round(prefix sum) steps up.
        double prefix = 0.0;
        double taken_before = 0.0;
        std::size_t taken = 0;
        for (std::size_t s = 0; s < elig_pos.size() && taken < count; ++s) {
          prefix += elig_w[s];
          const double now = std::floor(prefix + 0.5);
          if (now > taken_before) {
            report.cloud.centers.push_back(elig_pos[s]);
            taken_before = now;
            ++taken;
          }
        }
        // Guard against the prefix sum ending a rounding step short.
        for (std::size_t s = elig_pos.size(); taken < count && s-- > 0;) {
          const Vec3& p = elig_pos[s];
          if (std::find(report.cloud.centers.end() - std::ptrdiff_t(taken), report.cloud.centers.end(), p) ==
              report.cloud.centers.end()) {
            report.cloud.centers.push_back(p);
            ++taken;
          }
        }
      }
    }
  }

  report.cloud.strengths.reserve(report.cloud.centers.size());
  for (const Vec3& p : report.cloud.centers) report.cloud.strengths.push_back(A(p));
  return report;
}

}  // namespace

PlacementReport place_with_report(const BoundedDomain& domain, const CountingLaw& law, const ScalarField& A,
                                  const PlacementOptions& options) {
  Region region;
  region.dim = 3;
  region.lo = domain.lower();
  region.hi = domain.upper();
  region.inside = [&domain](const Vec3& x) { return domain.contains(x); };
  region.boundary_distance = [&domain](const Vec3& x) { return domain.distance_to_boundary(x); };
  return place_impl(region, law, A, options);
}

ScattererCloud place(const BoundedDomain& domain, const CountingLaw& law, const ScalarField& A,
                     const PlacementOptions& options) {
  return place_with_report(domain, law, A, options).cloud;
}

PlacementReport place_interval_with_report(double lo, double hi, const CountingLaw& law, const ScalarField& A,
                                           const PlacementOptions& options) {
  if (!(hi > lo)) throw InvalidArgument("interval needs lo < hi");
  Region region;
  region.dim = 1;
  region.lo = {lo, 0.0, 0.0};
  region.hi = {hi, 0.0, 0.0};
  region.inside = [lo, hi](const Vec3& x) { return x.x > lo && x.x < hi; };
  region.boundary_distance = [lo, hi](const Vec3& x) { return std::min(x.x - lo, hi - x.x); };
  return place_impl(region, law, A, options);
}

std::size_t count_in_region(const ScattererCloud& cloud, const BoundedDomain& region) {
  return static_cast<std::size_t>(
      std::count_if(cloud.centers.begin(), cloud.centers.end(), [&](const Vec3& c) { return region.contains(c); }));
}

double min_pair_distance(const ScattererCloud& cloud) {
  const std::size_t n = cloud.size();
  double best = std::numeric_limits<double>::infinity();
  if (n < 2) return best;
  const double bucket = 4.0 * std::max(cloud.radius, 1e-300);
  auto key_of = [bucket](const Vec3& p) {
    return std::array<long long, 3>{static_cast<long long>(std::floor(p.x / bucket)),
                                    static_cast<long long>(std::floor(p.y / bucket)),
                                    static_cast<long long>(std::floor(p.z / bucket))};
  };
  auto hash = [](const std::array<long long, 3>& k) {
    return std::size_t(k[0] * 73856093LL ^ k[1] * 19349663LL ^ k[2] * 83492791LL);
  };
  std::unordered_map<std::array<long long, 3>, std::vector<std::size_t>, decltype(hash)> buckets(n, hash);
  for (std::size_t i = 0; i < n; ++i) buckets[key_of(cloud.centers[i])].push_back(i);
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = key_of(cloud.centers[i]);
    for (long long dz = -1; dz <= 1; ++dz) {
      for (long long dy = -1; dy <= 1; ++dy) {
        for (long long dx = -1; dx <= 1; ++dx) {
          auto it = buckets.find({k[0] + dx, k[1] + dy, k[2] + dz});
          if (it == buckets.end()) continue;
          for (std::size_t j : it->second) {
            if (j > i) best = std::min(best, distance(cloud.centers[i], cloud.centers[j]));
          }
        }
      }
    }
  }
  if (best <= bucket) return best;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) best = std::min(best, distance(cloud.centers[i], cloud.centers[j]));
  }
  return best;
}

}  // namespace scatterlab
