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

#include <map>
#include <string>
#include <vector>

#include "locsim/schmidt.hpp"
#include "locsim/tensor.hpp"

namespace locsim {

/// A set of measurement operators {O_j} on one party.
struct MeasurementSet {
    std::vector<Matrix> operators;
    /// ‖Σ_j O_j†O_j − I‖ in spectral norm.
    double completeness_residual = 0.0;
};

MeasurementSet make_measurement_set(std::vector<Matrix> operators);

/// One measurement branch: outcome index, its probability, the normalized
/// post state, and the paper-style normalization constant 1/√probability.
struct BranchOutcome {
    int outcome_index = 0;
    double probability = 0.0;
    StateVector post_state;
    double norm_constant = 0.0;
};

BranchOutcome measure_branch(const StateVector& state, const Matrix& op, int party);

/// Copy a measurement set's coefficient matrices from the source party's
/// Schmidt frame into the target party's. With equal party dimensions the
/// whole frame matrix transfers, which preserves completeness exactly;
/// with unequal dimensions only the rank-r support block transfers and the
/// complement is filled with identity, so the returned completeness
/// residual is evaluated on the support.
MeasurementSet mirror_measurement(const MultiSchmidtDecomposition& msd,
                                  const MeasurementSet& source_ops, int source, int target);

/// Residuals of every separately-verifiable equivalence between one
/// mirrored branch and its original. There is deliberately no aggregate
/// "equivalent: yes" verdict; full local-unitary equivalence does not hold
/// in general and the fields record exactly what does.
struct BranchComparison {
    int outcome_index = 0;
    bool zero_probability = false;  // both branches vanish; distances skipped
    double probability_match = 0.0;
    std::map<int, double> spectator_state_distance;  // spectator party → ‖Δρ‖
    double swap_relation_distance = 0.0;
    std::map<std::string, double> bipartite_spectra_deviation;  // cut label → max dev
    double max_spectra_deviation = 0.0;
};

struct MirrorReport {
    std::vector<BranchComparison> outcomes;
    double mirrored_completeness_residual = 0.0;
};

MirrorReport compare_branches(const MultiSchmidtDecomposition& msd,
                              const MeasurementSet& source_ops, int source, int target);

}  // namespace locsim
