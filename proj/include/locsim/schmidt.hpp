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

#include <optional>
#include <vector>

#include "locsim/tensor.hpp"

namespace locsim {

/// Default relative gap below which adjacent Schmidt coefficients are
/// grouped into one degeneracy block.
inline constexpr double kGroupTol = 1e-8;
/// Default absolute cutoff below which singular values are dropped.
inline constexpr double kRankTol = 1e-10;

/// Schmidt decomposition of a state across one bipartition:
/// state = Σ_ℓ coeffs[ℓ] · left_basis.col(ℓ) ⊗ right_basis.col(ℓ).
///
/// Coefficients are positive and descending; bases have orthonormal
/// columns. Each left vector is phase-rotated so its largest-magnitude
/// entry is real positive, with the inverse phase on the right vector,
/// which makes the output reproducible across runs.
struct SchmidtDecomposition {
    RealVector coeffs;
    Matrix left_basis;   // (∏ left dims) × rank
    Matrix right_basis;  // (∏ right dims) × rank
    int rank = 0;
    std::vector<int> row_parties, col_parties;
    std::vector<int> row_dims, col_dims;
};

SchmidtDecomposition schmidt_decompose(const StateVector& state, const Bipartition& cut,
                                       double rank_tol = kRankTol);

/// Partition of a descending coefficient list into blocks of equal value,
/// plus a trailing zero-block when the ambient operator space exceeds the
/// Schmidt rank.
struct DegeneracyBlocks {
    std::vector<int> block_sizes;
    std::vector<double> block_values;

    int total_size() const;
    /// Block id owning a given frame index.
    int block_of(int index) const;
};

DegeneracyBlocks degeneracy_blocks(const RealVector& coeffs, int ambient_dim,
                                   double group_tol = kGroupTol);

/// Reassemble Σ_ℓ λ_ℓ |ℓ_left⟩⊗|ℓ_right⟩ in the original party ordering.
StateVector reconstruct(const SchmidtDecomposition& sd);

/// Multipartite Schmidt form: state = Σ_ℓ coeffs[ℓ] ⊗_P bases[P].col(ℓ),
/// with each party's vector set orthonormal.
struct MultiSchmidtDecomposition {
    RealVector coeffs;
    std::vector<Matrix> per_party_bases;  // one (dim_P × rank) block per party
    std::vector<int> party_dims;

    int rank() const { return static_cast<int>(coeffs.size()); }
};

StateVector reconstruct_multi(const MultiSchmidtDecomposition& msd);

/// Why a state failed the Schmidt-decomposability test.
struct InfeasibilityWitness {
    enum class Kind {
        EntangledCofactor,     // a right Schmidt vector is not a product
        NonOrthogonalFactors,  // a party's factor set fails orthonormality
    };
    Kind kind = Kind::EntangledCofactor;
    /// Cofactor index ℓ (EntangledCofactor) or party index (NonOrthogonalFactors).
    int index = 0;
    /// Second singular value of the failing cofactor, or the largest
    /// off-diagonal overlap magnitude.
    double witness = 0.0;
};

struct DecomposabilityResult {
    std::optional<MultiSchmidtDecomposition> decomposition;
    std::optional<InfeasibilityWitness> infeasibility;

    bool feasible() const { return decomposition.has_value(); }
};

/// Decide whether a multipartite state admits a Schmidt decomposition
/// (orthonormal single-party vectors against one shared coefficient list).
/// Bipartite states are always decomposable and returned directly. The
/// test decomposes across party 0 | rest, splits each right vector into
/// per-party factors (requiring each cofactor's second singular value
/// below tol), then checks every factor set for orthonormality.
DecomposabilityResult check_schmidt_decomposable(const StateVector& state,
                                                 double tol = 1e-8);

}  // namespace locsim
