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

#include <cstdlib>
#include <string_view>

#include "echochain/kernels.hpp"

namespace echochain::kernels {

#ifndef ECHOCHAIN_HAVE_AVX2
const KernelSet *avx2_kernels() { return nullptr; }
#endif

const KernelSet &active_kernels() {
    static const KernelSet &chosen = []() -> const KernelSet & {
        const char *forced = std::getenv("ECHOCHAIN_KERNEL");
        if (forced != nullptr && std::string_view(forced) == "scalar") {
            return scalar_kernels();
        }
        if (const KernelSet *simd = avx2_kernels()) {
            return *simd;
        }
        return scalar_kernels();
    }();
    return chosen;
}

} // namespace echochain::kernels
