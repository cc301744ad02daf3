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

#include "locsim/protocol_sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "locsim/unitary_sim.hpp"

namespace locsim {

namespace {

constexpr double kZeroBranchTol = 1e-14;

std::string cut_label(const Bipartition& cut) {
    std::ostringstream out;
    for (std::size_t i = 0; i < cut.left().size(); ++i)
        out << (i ? "," : "") << cut.left()[i];
    out << '|';
    for (std::size_t i = 0; i < cut.right().size(); ++i)
        out << (i ? "," : "") << cut.right()[i];
    return out.str();
}

// Rotate every party of `state` into its frame coordinates (S_P† per party).
StateVector to_frame_coords(const StateVector& state, const std::vector<Matrix>& frames) {
    StateVector current = state;
    for (int p = 0; p < state.num_parties(); ++p) {
        LocalOperator rot{p, frames[static_cast<std::size_t>(p)].adjoint()};
        current = apply_local(current, rot).state;
    }
    return current;
}

// Zero-pad one party's axis to a larger dimension.
StateVector embed_party_dim(const StateVector& state, int party, int new_dim) {
    const int old_dim = state.dim(party);
    if (new_dim == old_dim) return state;
    std::vector<int> new_dims = state.party_dims();
    new_dims[static_cast<std::size_t>(party)] = new_dim;

    Eigen::Index stride = 1;
    for (int p = party + 1; p < state.num_parties(); ++p) stride *= state.dim(p);
    const Eigen::Index outer = state.total_dim() / (stride * old_dim);

    Eigen::Index total = 1;
    for (int d : new_dims) total *= d;
    Vector out = Vector::Zero(total);
    for (Eigen::Index a = 0; a < outer; ++a)
        for (int k = 0; k < old_dim; ++k)
            out.segment((a * new_dim + k) * stride, stride) =
                state.amps().segment((a * old_dim + k) * stride, stride);
    return StateVector(std::move(new_dims), std::move(out));
}

RealVector sorted_spectrum(const StateVector& state, const Bipartition& cut) {
    Eigen::JacobiSVD<Matrix> svd(matricize(state, cut).entries);
    return svd.singularValues();  // descending by convention
}

}  // namespace

MeasurementSet make_measurement_set(std::vector<Matrix> operators) {
    if (operators.empty()) throw IncompleteSource("measurement set has no operators");
    const Eigen::Index d = operators.front().rows();
    Matrix sum = Matrix::Zero(d, d);
    for (const Matrix& op : operators) {
        if (op.rows() != d || op.cols() != d)
            throw DimensionMismatch("measurement operators must share one dimension");
        sum += op.adjoint() * op;
    }
    MeasurementSet set;
    set.operators = std::move(operators);
    set.completeness_residual = spectral_norm(sum - Matrix::Identity(d, d));
    return set;
}

BranchOutcome measure_branch(const StateVector& state, const Matrix& op, int party) {
    const AppliedLocal applied = apply_local(state, LocalOperator{party, op});
    if (applied.norm < kZeroBranchTol)
        throw ZeroProbabilityBranch("branch probability vanishes; post state undefined");
    return BranchOutcome{
        0,
        applied.norm * applied.norm,
        StateVector(applied.state.party_dims(), applied.state.amps() / applied.norm),
        1.0 / applied.norm,
    };
}

MeasurementSet mirror_measurement(const MultiSchmidtDecomposition& msd,
                                  const MeasurementSet& source_ops, int source, int target) {
    const int n = static_cast<int>(msd.party_dims.size());
    if (source < 0 || source >= n || target < 0 || target >= n || source == target)
        throw DimensionMismatch("source/target party indices invalid");
    const Matrix& src_basis = msd.per_party_bases[static_cast<std::size_t>(source)];
    const Matrix& tgt_basis = msd.per_party_bases[static_cast<std::size_t>(target)];
    if (src_basis.cols() != tgt_basis.cols())
        throw RankMismatch("source and target Schmidt supports differ in dimension");
    if (source_ops.completeness_residual > 1e-9)
        throw IncompleteSource("source measurement set is not complete");

    const int d_s = msd.party_dims[static_cast<std::size_t>(source)];
    const int d_t = msd.party_dims[static_cast<std::size_t>(target)];
    const int r = static_cast<int>(src_basis.cols());
    const Matrix frame_s = complete_basis(src_basis);
    const Matrix frame_t = complete_basis(tgt_basis);

    std::vector<Matrix> mirrored;
    mirrored.reserve(source_ops.operators.size());
    for (const Matrix& op : source_ops.operators) {
        if (op.rows() != d_s || op.cols() != d_s)
            throw DimensionMismatch("source operator does not match source party dimension");
        const Matrix coeff = frame_s.adjoint() * op * frame_s;
        Matrix copy;
        if (d_s == d_t) {
            copy = coeff;  // full frame transfers, completeness preserved exactly
        } else {
            copy = Matrix::Identity(d_t, d_t);
            copy.topLeftCorner(r, r) = coeff.topLeftCorner(r, r);
        }
        mirrored.push_back(frame_t * copy * frame_t.adjoint());
    }

    MeasurementSet result;
    result.operators = std::move(mirrored);
    if (d_s == d_t) {
        Matrix sum = Matrix::Zero(d_t, d_t);
        for (const Matrix& op : result.operators) sum += op.adjoint() * op;
        result.completeness_residual = spectral_norm(sum - Matrix::Identity(d_t, d_t));
    } else {
        // Identity complements stack across outcomes, so completeness is
        // only meaningful on the rank-r support.
        Matrix sum = Matrix::Zero(r, r);
        for (const Matrix& op : result.operators) {
            const Matrix on_support = tgt_basis.adjoint() * op.adjoint() * op * tgt_basis;
            sum += on_support;
        }
        result.completeness_residual = spectral_norm(sum - Matrix::Identity(r, r));
    }
    return result;
}

MirrorReport compare_branches(const MultiSchmidtDecomposition& msd,
                              const MeasurementSet& source_ops, int source, int target) {
    const MeasurementSet mirrored = mirror_measurement(msd, source_ops, source, target);
    const StateVector state = reconstruct_multi(msd);
    const int n = state.num_parties();

    std::vector<Matrix> frames;
    frames.reserve(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
        frames.push_back(complete_basis(msd.per_party_bases[static_cast<std::size_t>(p)]));

    MirrorReport report;
    report.mirrored_completeness_residual = mirrored.completeness_residual;

    for (std::size_t j = 0; j < source_ops.operators.size(); ++j) {
        BranchComparison cmp;
        cmp.outcome_index = static_cast<int>(j);

        const AppliedLocal src = apply_local(state, LocalOperator{source, source_ops.operators[j]});
        const AppliedLocal tgt = apply_local(state, LocalOperator{target, mirrored.operators[j]});
        const double p_s = src.norm * src.norm;
        const double p_t = tgt.norm * tgt.norm;
        cmp.probability_match = std::abs(p_t - p_s);

        if (src.norm < kZeroBranchTol || tgt.norm < kZeroBranchTol) {
            cmp.zero_probability = true;
            report.outcomes.push_back(std::move(cmp));
            continue;
        }

        const StateVector branch_s(state.party_dims(), src.state.amps() / src.norm);
        const StateVector branch_t(state.party_dims(), tgt.state.amps() / tgt.norm);

        for (int p = 0; p < n; ++p) {
            if (p == source || p == target) continue;
            cmp.spectator_state_distance[p] =
                spectral_norm(reduced_density(branch_t, {p}) - reduced_density(branch_s, {p}));
        }

        // Swap relation: in frame coordinates the mirrored branch is the
        // original with the source and target axes exchanged.
        StateVector frame_s = to_frame_coords(branch_s, frames);
        StateVector frame_t = to_frame_coords(branch_t, frames);
        const int common = std::max(state.dim(source), state.dim(target));
        frame_s = embed_party_dim(frame_s, source, common);
        frame_s = embed_party_dim(frame_s, target, common);
        frame_t = embed_party_dim(frame_t, source, common);
        frame_t = embed_party_dim(frame_t, target, common);
        cmp.swap_relation_distance =
            phase_invariant_distance(swap_parties(frame_t, source, target), frame_s);

        for (const Bipartition& cut : all_bipartitions(n)) {
            const RealVector spec_s = sorted_spectrum(branch_s, cut);
            const RealVector spec_t = sorted_spectrum(branch_t, cut);
            const Eigen::Index len = std::max(spec_s.size(), spec_t.size());
            double dev = 0.0;
            for (Eigen::Index i = 0; i < len; ++i) {
                const double a = i < spec_s.size() ? spec_s(i) : 0.0;
                const double b = i < spec_t.size() ? spec_t(i) : 0.0;
                dev = std::max(dev, std::abs(a - b));
            }
            cmp.bipartite_spectra_deviation[cut_label(cut)] = dev;
            cmp.max_spectra_deviation = std::max(cmp.max_spectra_deviation, dev);
        }

        report.outcomes.push_back(std::move(cmp));
    }
    return report;
}

}  // namespace locsim
