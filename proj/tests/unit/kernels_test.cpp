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

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "scatterlab/error.hpp"
#include "scatterlab/kernels/helmholtz_sum.hpp"

using namespace scatterlab;
using namespace scatterlab::kernels;

namespace {

// Straight std::complex evaluation, no shared code with either variant.
Complex direct_sum(const Vec3& t, const SourceArrays& src, std::span<const Complex> s, double k, double cutoff) {
  Complex acc = 0.0;
  for (std::size_t m = 0; m < src.size(); ++m) {
    const double r = distance(t, src.position(m));
    if (r < cutoff) continue;
    acc += std::exp(Complex(0.0, k * r)) / r * s[m];
  }
  return acc;
}

struct RandomSources {
  std::vector<Vec3> positions;
  std::vector<Complex> strengths;
  SourceArrays arrays;
};

RandomSources make_sources(std::size_t count, std::uint64_t seed, double spread) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-spread, spread), s(-1.0, 1.0);
  RandomSources out;
  for (std::size_t m = 0; m < count; ++m) {
    out.positions.push_back({u(rng), u(rng), u(rng)});
    out.strengths.emplace_back(s(rng), s(rng));
  }
  out.arrays = SourceArrays(out.positions);
  for (std::size_t m = 0; m < count; ++m) out.arrays.set_strength(m, out.strengths[m]);
  return out;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar kernel against direct evaluation") {
  const auto src = make_sources(257, 11, 1.0);
  const Vec3 t{0.1, -0.3, 0.2};
  const Complex ref = direct_sum(t, src.arrays, src.strengths, 2.5, 1e-3);
  const Complex got = detail::helmholtz_sum_scalar(t, src.arrays.view(), 2.5, 1e-3);
  CHECK(std::abs(got - ref) <= 1e-12 * std::abs(ref));
}

#if defined(SCATTERLAB_HAVE_AVX2)
TEST_CASE("avx2 and scalar kernels agree") {
  if (!isa_available(Isa::avx2)) return;
  // Every remainder length modulo the vector width, a wide spread of kr and
  // sources inside the cutoff.
  for (std::size_t count : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 31u, 100u, 1001u}) {
    for (double spread : {0.01, 1.0, 300.0}) {
      const auto src = make_sources(count, 1000 + count, spread);
      for (double k : {0.0, 0.7, 40.0}) {
        for (const Vec3& t : {Vec3{0.0, 0.0, 0.0}, Vec3{0.3, 0.1, -0.2}, src.positions.empty() ? Vec3{} : src.positions[0]}) {
          const double cutoff = 0.2 * spread;
          const Complex a = detail::helmholtz_sum_scalar(t, src.arrays.view(), k, cutoff);
          const Complex b = detail::helmholtz_sum_avx2(t, src.arrays.view(), k, cutoff);
          // Each term carries a phase error of a few ulps of kr on top of the
          // rounding of |s|/r, so the bound grows with kr.
          double bound = 0.0;
          for (std::size_t m = 0; m < count; ++m) {
            const double r = distance(t, src.positions[m]);
            if (r >= cutoff) bound += 4e-16 * (8.0 + k * r) * std::abs(src.strengths[m]) / r;
          }
          CHECK(std::abs(a - b) <= bound);
        }
      }
    }
  }
}
#endif

TEST_CASE("sources at the target are skipped by the cutoff") {
  const std::vector<Vec3> pos{{0, 0, 0}, {1, 0, 0}};
  SourceArrays src(pos);
  src.set_strength(0, 5.0);
  src.set_strength(1, 1.0);
  const Complex s = helmholtz_sum({0, 0, 0}, src.view(), 1.0, 1e-9);
  CHECK(std::abs(s - std::exp(Complex(0.0, 1.0))) < 1e-15);
}

TEST_CASE("runtime dispatch can be switched") {
  const Isa original = active_isa();
  set_isa(Isa::scalar);
  CHECK(active_isa() == Isa::scalar);
  CHECK(isa_name(Isa::scalar) == "scalar");
  if (isa_available(Isa::avx2)) {
    set_isa(Isa::avx2);
    CHECK(active_isa() == Isa::avx2);
  } else {
    CHECK_THROWS_AS(set_isa(Isa::avx2), InvalidArgument);
  }
  set_isa(original);
}

}  // TEST_SUITE
