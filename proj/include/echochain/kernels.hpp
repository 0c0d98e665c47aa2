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

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace echochain::kernels {

using cplx = std::complex<double>;

/**
 * Gate kernels over a dense amplitude array of length 2^num_bits.
 *
 * Bit positions count from the least significant bit. Every variant must
 * produce bitwise identical output to the scalar reference: the complex
 * products and the accumulation order are fixed, and all kernel sources are
 * compiled without floating point contraction.
 */
struct KernelSet {
    std::string_view name;

    /// Applies the row-major 4x4 matrix `m` on the bit pair (pos_hi, pos_lo).
    /// Local basis index is 2*b_hi + b_lo, pos_hi != pos_lo.
    void (*apply_4x4)(cplx *amps, std::size_t dim, unsigned pos_hi,
                      unsigned pos_lo, const cplx *m);

    /// Multiplies amplitudes with bit `pos` clear by `phase0` and set by `phase1`.
    void (*apply_diag)(cplx *amps, std::size_t dim, unsigned pos, cplx phase0,
                       cplx phase1);
};

const KernelSet &scalar_kernels();

/// Returns nullptr when the AVX2 variant was not built or the CPU lacks AVX2.
const KernelSet *avx2_kernels();

/// Kernel set chosen at first use: AVX2 when available, scalar otherwise.
/// Setting ECHOCHAIN_KERNEL=scalar in the environment forces the reference.
const KernelSet &active_kernels();

} // namespace echochain::kernels
