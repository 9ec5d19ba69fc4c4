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

#include "scatterlab/kernels/helmholtz_sum.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "scatterlab/error.hpp"

namespace scatterlab::kernels {

SourceArrays::SourceArrays(std::span<const Vec3> positions)
    : x_(positions.size()),
      y_(positions.size()),
      z_(positions.size()),
      re_(positions.size(), 0.0),
      im_(positions.size(), 0.0) {
  for (std::size_t m = 0; m < positions.size(); ++m) {
    x_[m] = positions[m].x;
    y_[m] = positions[m].y;
    z_[m] = positions[m].z;
  }
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(SCATTERLAB_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

namespace {

Isa detect() {
  if (const char* env = std::getenv("SCATTERLAB_ISA")) {
    const std::string want(env);
    if (want == "scalar") return Isa::scalar;
    if (want == "avx2" && isa_available(Isa::avx2)) return Isa::avx2;
  }
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw InvalidArgument("kernel variant '" + std::string(isa_name(isa)) + "' is not available on this CPU");
  }
  current().store(isa, std::memory_order_relaxed);
}

Complex helmholtz_sum(const Vec3& target, const SourceView& sources, double k, double cutoff) {
#if defined(SCATTERLAB_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return detail::helmholtz_sum_avx2(target, sources, k, cutoff);
#endif
  return detail::helmholtz_sum_scalar(target, sources, k, cutoff);
}

}  // namespace scatterlab::kernels
