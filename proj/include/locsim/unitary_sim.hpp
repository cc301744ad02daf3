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

#include "locsim/schmidt.hpp"
#include "locsim/tensor.hpp"

namespace locsim {

/// Tolerances for the bipartite unitary-simulation decision. The decision
/// threshold is kept strictly looser than the construction/verification
/// threshold so borderline arithmetic cannot flip the verdict.
struct UnitarySimTols {
    double decision_tol = 1e-8;  // off-block residual threshold
    double verify_tol = 1e-9;    // state-distance threshold after construction
    double unitary_tol = 1e-10;  // ‖U†U − I‖ bound on inputs
    double group_tol = kGroupTol;
    double rank_tol = kRankTol;
};

/// Decision output for "can Alice undo/replay Bob's unitary on this state".
struct UnitarySimVerdict {
    bool simulable = false;
    DegeneracyBlocks blocks;          // spectrum blocks incl. the kernel block
    double offblock_residual = 0.0;   // max |Ũ_ij| across distinct-λ blocks
    std::optional<LocalOperator> partner;  // Alice's unitary, iff simulable
    double verification_distance = 0.0;    // filled iff simulable
};

/// Conjugate `op` into the frame spanned by `basis_columns` extended by an
/// orthonormal completion: returns S† · op · S with S = [basis | completion].
Matrix to_schmidt_frame(const Matrix& op, const Matrix& basis_columns);

/// Orthonormal completion helper: unitary [basis | completion].
Matrix complete_basis(const Matrix& basis_columns);

UnitarySimVerdict check_unitary_simulable(const StateVector& state, const Matrix& u_bob,
                                          const UnitarySimTols& tols = {});

/// Partner unitary for Alice: transpose of Bob's operator in the Schmidt
/// frames, identity on Alice's orthogonal complement, returned in Alice's
/// computational basis. Throws NotSimulable when the block condition fails.
LocalOperator construct_partner_unitary(const StateVector& state, const Matrix& u_bob,
                                        const UnitarySimTols& tols = {});

/// The proof-side oracle: candidate V = D Ũ D⁻¹ on the Schmidt support.
/// V is unitary exactly when the simulation is possible, independently of
/// the block test.
struct OraclePartner {
    Matrix candidate;
    double unitarity_residual = 0.0;
};

OraclePartner oracle_partner(const StateVector& state, const Matrix& u_bob,
                             double rank_tol = kRankTol);

/// Distance between (U_A ⊗ I)|ψ⟩ and (I ⊗ U_B)|ψ⟩, phase quotiented.
double verify_unitary_simulation(const StateVector& state, const Matrix& u_bob,
                                 const Matrix& u_alice);

}  // namespace locsim
