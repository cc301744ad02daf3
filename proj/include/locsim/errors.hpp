// Copyright 2026 The locsim authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace locsim {

/// Base class for all locsim input/consistency errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotNormalized : Error {
    using Error::Error;
};
struct NonFiniteAmplitude : Error {
    using Error::Error;
};
struct InvalidBipartition : Error {
    using Error::Error;
};
struct UnsortedInput : Error {
    using Error::Error;
};
struct NonOrthonormalBasis : Error {
    using Error::Error;
};
struct NotBipartite : Error {
    using Error::Error;
};
struct NotTripartite : Error {
    using Error::Error;
};
struct NotUnitary : Error {
    using Error::Error;
};
struct NotSimulable : Error {
    using Error::Error;
};
struct RankMismatch : Error {
    using Error::Error;
};
struct IncompleteSource : Error {
    using Error::Error;
};
struct ZeroProbabilityBranch : Error {
    using Error::Error;
};
struct SingularSupport : Error {
    using Error::Error;
};
struct InfeasibleSpectrum : Error {
    using Error::Error;
};

}  // namespace locsim
