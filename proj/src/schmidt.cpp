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

#include "locsim/schmidt.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace locsim {

namespace {

// Rotate each left column so its largest-magnitude entry is real positive;
// the inverse phase goes to the right column so the outer product is kept.
void canonicalize_phases(Matrix& left, Matrix& right) {
    for (Eigen::Index c = 0; c < left.cols(); ++c) {
        Eigen::Index imax = 0;
        left.col(c).cwiseAbs().maxCoeff(&imax);
        const Complex entry = left(imax, c);
        if (std::abs(entry) < 1e-300) continue;
        const Complex phase = entry / std::abs(entry);
        left.col(c) *= std::conj(phase);
        right.col(c) *= phase;
    }
}

}  // namespace

SchmidtDecomposition schmidt_decompose(const StateVector& state, const Bipartition& cut,
                                       double rank_tol) {
    const Matricization m = matricize(state, cut);
    Eigen::JacobiSVD<Matrix> svd(m.entries, Eigen::ComputeThinU | Eigen::ComputeThinV);

    const RealVector& sv = svd.singularValues();
    int rank = 0;
    while (rank < sv.size() && sv(rank) > rank_tol) ++rank;

    SchmidtDecomposition sd;
    sd.coeffs = sv.head(rank);
    sd.left_basis = svd.matrixU().leftCols(rank);
    // The right Schmidt vector is the conjugated V column, so that
    // entries = left · diag(coeffs) · rightᵀ.
    sd.right_basis = svd.matrixV().leftCols(rank).conjugate();
    sd.rank = rank;
    sd.row_parties = m.row_parties;
    sd.col_parties = m.col_parties;
    sd.row_dims = m.row_dims;
    sd.col_dims = m.col_dims;
    canonicalize_phases(sd.left_basis, sd.right_basis);
    return sd;
}

int DegeneracyBlocks::total_size() const {
    int t = 0;
    for (int s : block_sizes) t += s;
    return t;
}

int DegeneracyBlocks::block_of(int index) const {
    int upto = 0;
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
        upto += block_sizes[b];
        if (index < upto) return static_cast<int>(b);
    }
    throw DimensionMismatch("index beyond the blocked spectrum");
}

DegeneracyBlocks degeneracy_blocks(const RealVector& coeffs, int ambient_dim,
                                   double group_tol) {
    for (Eigen::Index i = 1; i < coeffs.size(); ++i)
        if (coeffs(i) > coeffs(i - 1) + 1e-15)
            throw UnsortedInput("coefficients must be descending");
    if (ambient_dim < coeffs.size())
        throw DimensionMismatch("ambient dimension smaller than coefficient count");

    DegeneracyBlocks blocks;
    Eigen::Index i = 0;
    while (i < coeffs.size()) {
        Eigen::Index j = i + 1;
        double sum = coeffs(i);
        while (j < coeffs.size() &&
               (coeffs(j - 1) - coeffs(j)) < group_tol * coeffs(i)) {
            sum += coeffs(j);
            ++j;
        }
        blocks.block_sizes.push_back(static_cast<int>(j - i));
        blocks.block_values.push_back(sum / static_cast<double>(j - i));
        i = j;
    }
    if (ambient_dim > coeffs.size()) {
        blocks.block_sizes.push_back(ambient_dim - static_cast<int>(coeffs.size()));
        blocks.block_values.push_back(0.0);
    }
    return blocks;
}

StateVector reconstruct(const SchmidtDecomposition& sd) {
    Matricization m;
    m.row_parties = sd.row_parties;
    m.col_parties = sd.col_parties;
    m.row_dims = sd.row_dims;
    m.col_dims = sd.col_dims;
    m.entries = sd.left_basis * sd.coeffs.cast<Complex>().asDiagonal() * sd.right_basis.transpose();
    return unmatricize(m);
}

StateVector reconstruct_multi(const MultiSchmidtDecomposition& msd) {
    const int n = static_cast<int>(msd.party_dims.size());
    Eigen::Index total = 1;
    for (int d : msd.party_dims) total *= d;

    Vector amps = Vector::Zero(total);
    for (int l = 0; l < msd.rank(); ++l) {
        // Kronecker product across parties, last party fastest-varying.
        Vector term = msd.per_party_bases[0].col(l);
        for (int p = 1; p < n; ++p) {
            const Vector& factor = msd.per_party_bases[static_cast<std::size_t>(p)].col(l);
            Vector next(term.size() * factor.size());
            for (Eigen::Index a = 0; a < term.size(); ++a)
                next.segment(a * factor.size(), factor.size()) = term(a) * factor;
            term = std::move(next);
        }
        amps += msd.coeffs(l) * term;
    }
    return StateVector(msd.party_dims, std::move(amps));
}

namespace {

// Split one normalized vector over parties [first, last) into per-party
// factors. Fails with the index of the offending matricization's second
// singular value when the vector is not a product.
bool split_into_factors(const Vector& vec, const std::vector<int>& dims, std::size_t first,
                        std::vector<Vector>& factors, double tol, double& witness) {
    if (first + 1 == dims.size()) {
        factors.push_back(vec);
        return true;
    }
    const int head_dim = dims[first];
    const Eigen::Index tail_dim = vec.size() / head_dim;
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        m(vec.data(), head_dim, tail_dim);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.singularValues().size() > 1 && svd.singularValues()(1) > tol) {
        witness = svd.singularValues()(1);
        return false;
    }
    Vector head = svd.matrixU().col(0);
    Vector tail = svd.singularValues()(0) * svd.matrixV().col(0).conjugate();
    // Keep the head factor's largest entry real positive for determinism.
    Eigen::Index imax = 0;
    head.cwiseAbs().maxCoeff(&imax);
    if (std::abs(head(imax)) > 1e-300) {
        const Complex phase = head(imax) / std::abs(head(imax));
        head *= std::conj(phase);
        tail *= phase;
    }
    factors.push_back(head);
    return split_into_factors(tail, dims, first + 1, factors, tol, witness);
}

}  // namespace

DecomposabilityResult check_schmidt_decomposable(const StateVector& state, double tol) {
    DecomposabilityResult result;
    const int n = state.num_parties();
    if (n < 2) throw InvalidBipartition("need at least two parties");

    const SchmidtDecomposition sd =
        schmidt_decompose(state, Bipartition({0}, n), kRankTol);

    MultiSchmidtDecomposition msd;
    msd.coeffs = sd.coeffs;
    msd.party_dims = state.party_dims();
    msd.per_party_bases.assign(static_cast<std::size_t>(n),
                               Matrix(0, 0));
    for (int p = 0; p < n; ++p)
        msd.per_party_bases[static_cast<std::size_t>(p)] =
            Matrix(state.dim(p), sd.rank);
    msd.per_party_bases[0] = sd.left_basis;

    if (n == 2) {
        msd.per_party_bases[1] = sd.right_basis;
        result.decomposition = std::move(msd);
        return result;
    }

    for (int l = 0; l < sd.rank; ++l) {
        std::vector<Vector> factors;
        double witness = 0.0;
        if (!split_into_factors(sd.right_basis.col(l), state.party_dims(), 1, factors, tol,
                                witness)) {
            result.infeasibility = InfeasibilityWitness{
                InfeasibilityWitness::Kind::EntangledCofactor, l, witness};
            return result;
        }
        for (int p = 1; p < n; ++p)
            msd.per_party_bases[static_cast<std::size_t>(p)].col(l) =
                factors[static_cast<std::size_t>(p - 1)];
    }

    for (int p = 1; p < n; ++p) {
        const Matrix& basis = msd.per_party_bases[static_cast<std::size_t>(p)];
        const Matrix gram = basis.adjoint() * basis;
        const double deviation =
            (gram - Matrix::Identity(sd.rank, sd.rank)).cwiseAbs().maxCoeff();
        if (deviation > tol) {
            result.infeasibility = InfeasibilityWitness{
                InfeasibilityWitness::Kind::NonOrthogonalFactors, p, deviation};
            return result;
        }
    }

    result.decomposition = std::move(msd);
    return result;
}

}  // namespace locsim
