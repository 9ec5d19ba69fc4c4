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

// AVX2 + FMA variant of the point-source Helmholtz sum. Compiled with
// -mavx2 -mfma in isolation; only reached through the runtime dispatch in
// helmholtz_sum.cpp after the CPU flags have been checked.

#include <immintrin.h>

#include "scatterlab/kernels/helmholtz_sum.hpp"

namespace scatterlab::kernels::detail {

namespace {

// pi/2 split into three parts (33 + 33 + rest bits) for Cody-Waite reduction.
constexpr double kPio2Hi = 1.57079632673412561417e+00;
constexpr double kPio2Mid = 6.07710050630396597660e-11;
constexpr double kPio2Lo = 2.02226624871116645580e-21;
constexpr double kTwoOverPi = 6.36619772367581382433e-01;

// Minimax coefficients on [-pi/4, pi/4].
constexpr double kS1 = -1.66666666666666324348e-01;
constexpr double kS2 = 8.33333333332248946124e-03;
constexpr double kS3 = -1.98412698298579493134e-04;
constexpr double kS4 = 2.75573137070700676789e-06;
constexpr double kS5 = -2.50507602534068634195e-08;
constexpr double kS6 = 1.58969099521155010221e-10;

constexpr double kC1 = 4.16666666666666019037e-02;
constexpr double kC2 = -1.38888888888741095749e-03;
constexpr double kC3 = 2.48015872894767294178e-05;
constexpr double kC4 = -2.75573143513906633035e-07;
constexpr double kC5 = 2.08757232129817482790e-09;
constexpr double kC6 = -1.13596475577881948265e-11;

// Valid for |x| < 2^30 or so; kr stays far below that in practice.
inline void sincos_pd(__m256d x, __m256d& s, __m256d& c) {
  const __m256d q = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kTwoOverPi)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d y = _mm256_fnmadd_pd(q, _mm256_set1_pd(kPio2Hi), x);
  y = _mm256_fnmadd_pd(q, _mm256_set1_pd(kPio2Mid), y);
  y = _mm256_fnmadd_pd(q, _mm256_set1_pd(kPio2Lo), y);
  const __m256d z = _mm256_mul_pd(y, y);

  __m256d ps = _mm256_set1_pd(kS6);
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kS5));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kS4));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kS3));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kS2));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(kS1));
  const __m256d sy = _mm256_fmadd_pd(_mm256_mul_pd(y, z), ps, y);

  __m256d pc = _mm256_set1_pd(kC6);
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kC5));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kC4));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kC3));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kC2));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(kC1));
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d hz = _mm256_mul_pd(_mm256_set1_pd(0.5), z);
  const __m256d w = _mm256_sub_pd(one, hz);
  // 1 - z/2 + z^2 p(z) with the rounding error of (1 - z/2) folded back in.
  const __m256d tail = _mm256_fmadd_pd(_mm256_mul_pd(z, z), pc, _mm256_sub_pd(_mm256_sub_pd(one, w), hz));
  const __m256d cy = _mm256_add_pd(w, tail);

  const __m256i q64 = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(q));
  const __m256i bit0 = _mm256_set1_epi64x(1);
  const __m256i bit1 = _mm256_set1_epi64x(2);
  const __m256d swap = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q64, bit0), bit0));
  const __m256d sin_sign = _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_and_si256(q64, bit1), 62));
  const __m256d cos_sign =
      _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_and_si256(_mm256_add_epi64(q64, bit0), bit1), 62));

  s = _mm256_xor_pd(_mm256_blendv_pd(sy, cy, swap), sin_sign);
  c = _mm256_xor_pd(_mm256_blendv_pd(cy, sy, swap), cos_sign);
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

Complex helmholtz_sum_avx2(const Vec3& target, const SourceView& src, double k, double cutoff) {
  const std::size_t n = src.size();
  const __m256d tx = _mm256_set1_pd(target.x);
  const __m256d ty = _mm256_set1_pd(target.y);
  const __m256d tz = _mm256_set1_pd(target.z);
  const __m256d kk = _mm256_set1_pd(k);
  const __m256d cut2 = _mm256_set1_pd(cutoff * cutoff);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);

  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t m = 0;
  for (; m + 4 <= n; m += 4) {
    const __m256d dx = _mm256_sub_pd(tx, _mm256_loadu_pd(src.x.data() + m));
    const __m256d dy = _mm256_sub_pd(ty, _mm256_loadu_pd(src.y.data() + m));
    const __m256d dz = _mm256_sub_pd(tz, _mm256_loadu_pd(src.z.data() + m));
    const __m256d r2 = _mm256_fmadd_pd(dz, dz, _mm256_fmadd_pd(dy, dy, _mm256_mul_pd(dx, dx)));
    const __m256d keep = _mm256_and_pd(_mm256_cmp_pd(r2, cut2, _CMP_GE_OQ), _mm256_cmp_pd(r2, zero, _CMP_GT_OQ));
    const __m256d r = _mm256_sqrt_pd(_mm256_blendv_pd(one, r2, keep));
    const __m256d inv_r = _mm256_and_pd(_mm256_div_pd(one, r), keep);
    __m256d s, c;
    sincos_pd(_mm256_mul_pd(kk, r), s, c);
    const __m256d er = _mm256_mul_pd(c, inv_r);
    const __m256d ei = _mm256_mul_pd(s, inv_r);
    const __m256d sre = _mm256_loadu_pd(src.re.data() + m);
    const __m256d sim = _mm256_loadu_pd(src.im.data() + m);
    acc_re = _mm256_fmadd_pd(er, sre, acc_re);
    acc_re = _mm256_fnmadd_pd(ei, sim, acc_re);
    acc_im = _mm256_fmadd_pd(er, sim, acc_im);
    acc_im = _mm256_fmadd_pd(ei, sre, acc_im);
  }
  Complex total(hsum(acc_re), hsum(acc_im));
  if (m < n) {
    const SourceView rest{src.x.subspan(m), src.y.subspan(m), src.z.subspan(m), src.re.subspan(m),
                          src.im.subspan(m)};
    total += helmholtz_sum_scalar(target, rest, k, cutoff);
  }
  return total;
}

}  // namespace scatterlab::kernels::detail
