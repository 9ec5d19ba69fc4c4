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

#include "scatterlab/effective3d/grid_convolution.hpp"

#include <cmath>
#include <cstring>

#include <fftw3.h>

#include "scatterlab/error.hpp"

namespace scatterlab {

struct GridConvolution::Plans {
  std::size_t total = 0;
  fftw_complex* buffer = nullptr;
  std::vector<Complex> kernel_hat;  // already divided by total
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  ~Plans() {
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
    if (buffer) fftw_free(buffer);
  }
};

GridConvolution::GridConvolution(const GridSpec& grid, double k, Complex self)
    : grid_(grid), plans_(std::make_unique<Plans>()) {
  for (int d = 0; d < 3; ++d) padded_[d] = 2 * grid.extents[d];
  const std::size_t px = padded_[0], py = padded_[1], pz = padded_[2];
  Plans& p = *plans_;
  p.total = px * py * pz;
  p.buffer = fftw_alloc_complex(p.total);
  if (!p.buffer) throw CapacityError("cannot allocate the FFT buffer");
  // Row-major dims with x fastest: (z, y, x).
  p.forward = fftw_plan_dft_3d(int(pz), int(py), int(px), p.buffer, p.buffer, FFTW_FORWARD, FFTW_ESTIMATE);
  p.backward = fftw_plan_dft_3d(int(pz), int(py), int(px), p.buffer, p.buffer, FFTW_BACKWARD, FFTW_ESTIMATE);

  auto* buf = reinterpret_cast<Complex*>(p.buffer);
  std::fill(buf, buf + p.total, Complex(0.0));
  const double h = grid.spacing;
  const double vol = h * h * h;
  const auto nx = std::ptrdiff_t(grid.extents[0]);
  const auto ny = std::ptrdiff_t(grid.extents[1]);
  const auto nz = std::ptrdiff_t(grid.extents[2]);
  auto wrap = [](std::ptrdiff_t d, std::size_t n) { return std::size_t(d < 0 ? d + std::ptrdiff_t(n) : d); };
  for (std::ptrdiff_t dz = -(nz - 1); dz < nz; ++dz) {
    for (std::ptrdiff_t dy = -(ny - 1); dy < ny; ++dy) {
      for (std::ptrdiff_t dx = -(nx - 1); dx < nx; ++dx) {
        const std::size_t idx = (wrap(dz, pz) * py + wrap(dy, py)) * px + wrap(dx, px);
        if (dx == 0 && dy == 0 && dz == 0) {
          buf[idx] = self;
          continue;
        }
        const double r = h * std::sqrt(double(dx * dx + dy * dy + dz * dz));
        buf[idx] = vol * std::polar(1.0, k * r) / (4.0 * kPi * r);
      }
    }
  }
  fftw_execute(p.forward);
  p.kernel_hat.assign(buf, buf + p.total);
  const double scale = 1.0 / double(p.total);
  for (Complex& v : p.kernel_hat) v *= scale;
}

GridConvolution::~GridConvolution() = default;

void GridConvolution::apply(std::span<const Complex> w, std::span<Complex> out) const {
  if (w.size() != size() || out.size() != size()) throw InvalidArgument("convolution input has the wrong size");
  Plans& p = *plans_;
  auto* buf = reinterpret_cast<Complex*>(p.buffer);
  std::fill(buf, buf + p.total, Complex(0.0));
  const std::size_t nx = grid_.extents[0], ny = grid_.extents[1], nz = grid_.extents[2];
  const std::size_t px = padded_[0], py = padded_[1];
  for (std::size_t l = 0; l < nz; ++l) {
    for (std::size_t j = 0; j < ny; ++j) {
      std::memcpy(static_cast<void*>(buf + (l * py + j) * px), w.data() + (l * ny + j) * nx, nx * sizeof(Complex));
    }
  }
  fftw_execute(p.forward);
  for (std::size_t i = 0; i < p.total; ++i) buf[i] *= p.kernel_hat[i];
  fftw_execute(p.backward);
  for (std::size_t l = 0; l < nz; ++l) {
    for (std::size_t j = 0; j < ny; ++j) {
      std::memcpy(static_cast<void*>(out.data() + (l * ny + j) * nx), buf + (l * py + j) * px, nx * sizeof(Complex));
    }
  }
}

}  // namespace scatterlab
