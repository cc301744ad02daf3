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

#include "locsim/unitary_sim.hpp"

#include <Eigen/QR>
#include <cmath>

namespace locsim {

namespace {

void require_bipartite(const StateVector& state) {
    if (state.num_parties() != 2) throw NotBipartite("operation requires a bipartite state");
}

SchmidtDecomposition decompose_bipartite(const StateVector& state, double rank_tol) {
    return schmidt_decompose(state, Bipartition({0}, 2), rank_tol);
}

}  // namespace

Matrix complete_basis(const Matrix& basis_columns) {
    const Eigen::Index d = basis_columns.rows();
    const Eigen::Index r = basis_columns.cols();
    if (r > d) throw NonOrthonormalBasis("more columns than dimensions");
    if (r == d) return basis_columns;
    // QR of the basis: the trailing Q columns span the orthogonal complement
    // of the column space, so [basis | Q_tail] is unitary.
    Eigen::HouseholderQR<Matrix> qr(basis_columns);
    Matrix q = qr.householderQ();
    Matrix full(d, d);
    full.leftCols(r) = basis_columns;
    full.rightCols(d - r) = q.rightCols(d - r);
    return full;
}

Matrix to_schmidt_frame(const Matrix& op, const Matrix& basis_columns) {
    if (op.rows() != op.cols()) throw DimensionMismatch("operator must be square");
    if (basis_columns.rows() != op.rows())
        throw DimensionMismatch("basis dimension does not match operator");
    const Matrix gram = basis_columns.adjoint() * basis_columns;
    if ((gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() > 1e-8)
        throw NonOrthonormalBasis("basis columns are not orthonormal");
    const Matrix s = complete_basis(basis_columns);
    return s.adjoint() * op * s;
}

UnitarySimVerdict check_unitary_simulable(const StateVector& state, const Matrix& u_bob,
                                          const UnitarySimTols& tols) {
    require_bipartite(state);
    const int dim_b = state.dim(1);
    if (u_bob.rows() != dim_b || u_bob.cols() != dim_b)
        throw DimensionMismatch("operator dimension does not match Bob's party");
    if (unitarity_residual(u_bob) > tols.unitary_tol)
        throw NotUnitary("U_B is not unitary within tolerance");

    const SchmidtDecomposition sd = decompose_bipartite(state, tols.rank_tol);
    const Matrix u_frame = to_schmidt_frame(u_bob, sd.right_basis);

    UnitarySimVerdict verdict;
    // Zero coefficients form their own trailing block: mixing Bob's kernel
    // with the Schmidt support is as fatal as mixing distinct λ's.
    verdict.blocks = degeneracy_blocks(sd.coeffs, dim_b, tols.group_tol);

    double residual = 0.0;
    for (int i = 0; i < dim_b; ++i)
        for (int j = 0; j < dim_b; ++j)
            if (verdict.blocks.block_of(i) != verdict.blocks.block_of(j))
                residual = std::max(residual, std::abs(u_frame(i, j)));
    verdict.offblock_residual = residual;
    verdict.simulable = residual < tols.decision_tol;

    if (verdict.simulable) {
        verdict.partner = construct_partner_unitary(state, u_bob, tols);
        verdict.verification_distance =
            verify_unitary_simulation(state, u_bob, verdict.partner->matrix);
    }
    return verdict;
}

LocalOperator construct_partner_unitary(const StateVector& state, const Matrix& u_bob,
                                        const UnitarySimTols& tols) {
    require_bipartite(state);
    const SchmidtDecomposition sd = decompose_bipartite(state, tols.rank_tol);
    const Matrix u_frame = to_schmidt_frame(u_bob, sd.right_basis);

    double residual = 0.0;
    const DegeneracyBlocks blocks = degeneracy_blocks(sd.coeffs, state.dim(1), tols.group_tol);
    for (int i = 0; i < state.dim(1); ++i)
        for (int j = 0; j < state.dim(1); ++j)
            if (blocks.block_of(i) != blocks.block_of(j))
                residual = std::max(residual, std::abs(u_frame(i, j)));
    if (residual >= tols.decision_tol)
        throw NotSimulable("U_B mixes distinct Schmidt blocks; no partner exists");

    // Transpose rule on the Schmidt support, identity on Alice's complement.
    const int r = sd.rank;
    const int dim_a = state.dim(0);
    const Matrix support = sd.left_basis;  // dim_a × r
    const Matrix u_support = u_frame.topLeftCorner(r, r).transpose();
    Matrix u_alice = support * u_support * support.adjoint() +
                     (Matrix::Identity(dim_a, dim_a) - support * support.adjoint());
    return LocalOperator{0, std::move(u_alice)};
}

OraclePartner oracle_partner(const StateVector& state, const Matrix& u_bob,
                             double rank_tol) {
    require_bipartite(state);
    if (u_bob.rows() != state.dim(1) || u_bob.cols() != state.dim(1))
        throw DimensionMismatch("operator dimension does not match Bob's party");

    const SchmidtDecomposition sd = decompose_bipartite(state, rank_tol);
    const Matrix u_frame = to_schmidt_frame(u_bob, sd.right_basis);
    const int r = sd.rank;

    OraclePartner oracle;
    const Vector lambda = sd.coeffs.head(r).cast<Complex>();
    oracle.candidate = lambda.asDiagonal() * u_frame.topLeftCorner(r, r) *
                       lambda.cwiseInverse().asDiagonal();
    oracle.unitarity_residual = unitarity_residual(oracle.candidate);
    return oracle;
}

double verify_unitary_simulation(const StateVector& state, const Matrix& u_bob,
                                 const Matrix& u_alice) {
    require_bipartite(state);
    if (unitarity_residual(u_bob) > 1e-8 || unitarity_residual(u_alice) > 1e-8)
        throw NotUnitary("verification requires unitary operators");
    const AppliedLocal via_bob = apply_local(state, LocalOperator{1, u_bob});
    const AppliedLocal via_alice = apply_local(state, LocalOperator{0, u_alice});
    return phase_invariant_distance(via_alice.state, via_bob.state);
}

}  // namespace locsim
