// Copyright 2026 The echochain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "echochain/kernels.hpp"

#include <immintrin.h>

#include <algorithm>

#include "complex_ops.hpp"

// Two complex doubles per __m256d as (re0, im0, re1, im1). Complex products
// are formed as addsub(u * a.re, swap(u) * a.im), which evaluates the same
// products and sums as detail::cmul, so results match the scalar kernels bit
// for bit.

namespace echochain::kernels {
namespace {

inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

inline __m256d pack(cplx lo, cplx hi) {
    return _mm256_setr_pd(lo.real(), lo.imag(), hi.real(), hi.imag());
}

void apply_4x4_avx2(cplx *amps, std::size_t dim, unsigned pos_hi,
                    unsigned pos_lo, const cplx *m) {
    const std::size_t mask_hi = std::size_t{1} << pos_hi;
    const std::size_t mask_lo = std::size_t{1} << pos_lo;
    const unsigned lo = std::min(pos_hi, pos_lo);
    const unsigned hi = std::max(pos_hi, pos_lo);

    // col01[k] holds (m[0][k], m[1][k]); col23[k] holds (m[2][k], m[3][k]).
    __m256d col01[4], col23[4], col01_sw[4], col23_sw[4];
    for (int k = 0; k < 4; ++k) {
        col01[k] = pack(m[k], m[4 + k]);
        col23[k] = pack(m[8 + k], m[12 + k]);
        col01_sw[k] = swap_re_im(col01[k]);
        col23_sw[k] = swap_re_im(col23[k]);
    }

    auto *raw = reinterpret_cast<double *>(amps);
    const std::size_t groups = dim >> 2;
    for (std::size_t g = 0; g < groups; ++g) {
        const std::size_t base = detail::insert_two_zeros(g, lo, hi);
        const std::size_t idx[4] = {base, base | mask_lo, base | mask_hi,
                                    base | mask_hi | mask_lo};
        __m256d acc01 = _mm256_setzero_pd();
        __m256d acc23 = _mm256_setzero_pd();
        for (int k = 0; k < 4; ++k) {
            const __m256d ar = _mm256_broadcast_sd(raw + 2 * idx[k]);
            const __m256d ai = _mm256_broadcast_sd(raw + 2 * idx[k] + 1);
            const __m256d t01 = _mm256_addsub_pd(_mm256_mul_pd(col01[k], ar),
                                                 _mm256_mul_pd(col01_sw[k], ai));
            const __m256d t23 = _mm256_addsub_pd(_mm256_mul_pd(col23[k], ar),
                                                 _mm256_mul_pd(col23_sw[k], ai));
            if (k == 0) {
                acc01 = t01;
                acc23 = t23;
            } else {
                acc01 = _mm256_add_pd(acc01, t01);
                acc23 = _mm256_add_pd(acc23, t23);
            }
        }
        _mm_storeu_pd(raw + 2 * idx[0], _mm256_castpd256_pd128(acc01));
        _mm_storeu_pd(raw + 2 * idx[1], _mm256_extractf128_pd(acc01, 1));
        _mm_storeu_pd(raw + 2 * idx[2], _mm256_castpd256_pd128(acc23));
        _mm_storeu_pd(raw + 2 * idx[3], _mm256_extractf128_pd(acc23, 1));
    }
}

void apply_diag_avx2(cplx *amps, std::size_t dim, unsigned pos, cplx phase0,
                     cplx phase1) {
    auto *raw = reinterpret_cast<double *>(amps);
    const std::size_t mask = std::size_t{1} << pos;
    // Neighbouring indices share bit `pos` unless pos == 0.
    const __m256d re_same0 = _mm256_set1_pd(phase0.real());
    const __m256d im_same0 = _mm256_set1_pd(phase0.imag());
    const __m256d re_same1 = _mm256_set1_pd(phase1.real());
    const __m256d im_same1 = _mm256_set1_pd(phase1.imag());
    const __m256d re_alt = _mm256_setr_pd(phase0.real(), phase0.real(),
                                          phase1.real(), phase1.real());
    const __m256d im_alt = _mm256_setr_pd(phase0.imag(), phase0.imag(),
                                          phase1.imag(), phase1.imag());
    for (std::size_t k = 0; k + 1 < dim; k += 2) {
        __m256d pr, pi;
        if (pos == 0) {
            pr = re_alt;
            pi = im_alt;
        } else if (k & mask) {
            pr = re_same1;
            pi = im_same1;
        } else {
            pr = re_same0;
            pi = im_same0;
        }
        const __m256d a = _mm256_loadu_pd(raw + 2 * k);
        const __m256d out = _mm256_addsub_pd(_mm256_mul_pd(a, pr),
                                             _mm256_mul_pd(swap_re_im(a), pi));
        _mm256_storeu_pd(raw + 2 * k, out);
    }
}

} // namespace

const KernelSet *avx2_kernels() {
    static const KernelSet set{"avx2", &apply_4x4_avx2, &apply_diag_avx2};
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &set : nullptr;
}

} // namespace echochain::kernels
