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

#include <algorithm>

#include "complex_ops.hpp"

namespace echochain::kernels {
namespace {

using detail::cadd;
using detail::cmul;

void apply_4x4_scalar(cplx *amps, std::size_t dim, unsigned pos_hi,
                      unsigned pos_lo, const cplx *m) {
    const std::size_t mask_hi = std::size_t{1} << pos_hi;
    const std::size_t mask_lo = std::size_t{1} << pos_lo;
    const unsigned lo = std::min(pos_hi, pos_lo);
    const unsigned hi = std::max(pos_hi, pos_lo);
    const std::size_t groups = dim >> 2;
    for (std::size_t g = 0; g < groups; ++g) {
        const std::size_t base = detail::insert_two_zeros(g, lo, hi);
        const std::size_t idx[4] = {base, base | mask_lo, base | mask_hi,
                                    base | mask_hi | mask_lo};
        const cplx a[4] = {amps[idx[0]], amps[idx[1]], amps[idx[2]],
                           amps[idx[3]]};
        for (int r = 0; r < 4; ++r) {
            const cplx *row = m + 4 * r;
            cplx acc = cmul(row[0], a[0]);
            acc = cadd(acc, cmul(row[1], a[1]));
            acc = cadd(acc, cmul(row[2], a[2]));
            acc = cadd(acc, cmul(row[3], a[3]));
            amps[idx[r]] = acc;
        }
    }
}

void apply_diag_scalar(cplx *amps, std::size_t dim, unsigned pos, cplx phase0,
                       cplx phase1) {
    const std::size_t mask = std::size_t{1} << pos;
    for (std::size_t k = 0; k < dim; ++k) {
        amps[k] = cmul((k & mask) ? phase1 : phase0, amps[k]);
    }
}

} // namespace

const KernelSet &scalar_kernels() {
    static const KernelSet set{"scalar", &apply_4x4_scalar, &apply_diag_scalar};
    return set;
}

} // namespace echochain::kernels
