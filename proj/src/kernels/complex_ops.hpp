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

namespace echochain::kernels::detail {

// Spelled out so every variant evaluates the same expression tree;
// std::complex operator* may route through __muldc3.
inline std::complex<double> cmul(std::complex<double> u, std::complex<double> a) {
    const double ur = u.real(), ui = u.imag(), ar = a.real(), ai = a.imag();
    return {ur * ar - ui * ai, ui * ar + ur * ai};
}

inline std::complex<double> cadd(std::complex<double> x, std::complex<double> y) {
    return {x.real() + y.real(), x.imag() + y.imag()};
}

/// Index of group `g` with zero bits inserted at lo < hi.
inline std::size_t insert_two_zeros(std::size_t g, unsigned lo, unsigned hi) {
    const std::size_t lo_mask = (std::size_t{1} << lo) - 1;
    g = ((g & ~lo_mask) << 1) | (g & lo_mask);
    const std::size_t hi_mask = (std::size_t{1} << hi) - 1;
    return ((g & ~hi_mask) << 1) | (g & hi_mask);
}

} // namespace echochain::kernels::detail
