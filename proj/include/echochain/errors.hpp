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

#include <stdexcept>
#include <string>

namespace echochain {

/// Bad argument: wrong site index, wrong size, non-finite parameter.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A gate matrix that fails the unitarity check.
class InvalidGate : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A duration outside the single wrap period of the ferromagnet mapping.
class OutOfRange : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Request exceeds the dense-oracle size limit.
class ResourceLimit : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace echochain
