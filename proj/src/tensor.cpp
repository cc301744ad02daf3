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

#include "locsim/tensor.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace locsim {

namespace {

Eigen::Index product_of(const std::vector<int>& dims) {
    Eigen::Index p = 1;
    for (int d : dims) p *= d;
    return p;
}

// Strides for row-major indexing, last party fastest-varying.
std::vector<Eigen::Index> strides_of(const std::vector<int>& dims) {
    std::vector<Eigen::Index> s(dims.size(), 1);
    for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i)
        s[static_cast<std::size_t>(i)] =
            s[static_cast<std::size_t>(i + 1)] * dims[static_cast<std::size_t>(i + 1)];
    return s;
}

}  // namespace

double spectral_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

double unitarity_residual(const Matrix& m) {
    return spectral_norm(m.adjoint() * m - Matrix::Identity(m.cols(), m.cols()));
}

StateVector::StateVector(std::vector<int> party_dims, Vector amps)
    : dims_(std::move(party_dims)), amps_(std::move(amps)) {
    if (dims_.empty()) throw DimensionMismatch("state needs at least one party");
    for (int d : dims_)
        if (d < 1) throw DimensionMismatch("party dimension must be positive");
    if (amps_.size() != product_of(dims_))
        throw DimensionMismatch("amplitude count does not match product of party dims");
    if (!amps_.allFinite()) throw NonFiniteAmplitude("state contains NaN or Inf amplitude");
}

Complex StateVector::amp_at(const std::vector<int>& index) const {
    if (index.size() != dims_.size()) throw DimensionMismatch("multi-index arity mismatch");
    const auto strides = strides_of(dims_);
    Eigen::Index flat = 0;
    for (std::size_t p = 0; p < dims_.size(); ++p) {
        if (index[p] < 0 || index[p] >= dims_[p])
            throw DimensionMismatch("multi-index out of range");
        flat += strides[p] * index[p];
    }
    return amps_(flat);
}

StateVector make_state(std::vector<int> party_dims, Vector amps, double norm_tol,
                       bool renormalize) {
    StateVector s(std::move(party_dims), std::move(amps));
    const double n = s.norm();
    if (std::abs(n - 1.0) <= norm_tol) return s;
    if (!renormalize || n < 1e-14)
        throw NotNormalized("state norm " + std::to_string(n) + " outside tolerance");
    return StateVector(s.party_dims(), s.amps() / n);
}

Bipartition::Bipartition(std::vector<int> left, int num_parties) : left_(std::move(left)) {
    if (num_parties < 2) throw InvalidBipartition("need at least two parties to cut");
    std::sort(left_.begin(), left_.end());
    left_.erase(std::unique(left_.begin(), left_.end()), left_.end());
    if (left_.empty()) throw InvalidBipartition("left side of cut is empty");
    for (int p : left_)
        if (p < 0 || p >= num_parties) throw InvalidBipartition("party index out of range");
    for (int p = 0; p < num_parties; ++p)
        if (!std::binary_search(left_.begin(), left_.end(), p)) right_.push_back(p);
    if (right_.empty()) throw InvalidBipartition("right side of cut is empty");
}

Bipartition Bipartition::swapped() const {
    const int n = static_cast<int>(left_.size() + right_.size());
    return Bipartition(right_, n);
}

std::vector<Bipartition> all_bipartitions(int num_parties) {
    std::vector<Bipartition> cuts;
    // Fixing party 0 on the left enumerates each unordered cut once.
    for (unsigned mask = 0; mask < (1u << (num_parties - 1)); ++mask) {
        std::vector<int> left{0};
        for (int p = 1; p < num_parties; ++p)
            if (mask & (1u << (p - 1))) left.push_back(p);
        if (static_cast<int>(left.size()) == num_parties) continue;
        cuts.emplace_back(left, num_parties);
    }
    return cuts;
}

Matricization matricize(const StateVector& state, const Bipartition& cut) {
    const int n = state.num_parties();
    if (static_cast<int>(cut.left().size() + cut.right().size()) != n)
        throw InvalidBipartition("cut does not cover the state's parties");

    Matricization m;
    m.row_parties = cut.left();
    m.col_parties = cut.right();
    for (int p : m.row_parties) m.row_dims.push_back(state.dim(p));
    for (int p : m.col_parties) m.col_dims.push_back(state.dim(p));

    const Eigen::Index rows = product_of(m.row_dims);
    const Eigen::Index cols = product_of(m.col_dims);
    m.entries.resize(rows, cols);

    const auto full_strides = strides_of(state.party_dims());
    const auto row_strides = strides_of(m.row_dims);
    const auto col_strides = strides_of(m.col_dims);

    // Flat source index decomposed per party, then re-merged per group.
    std::vector<int> index(static_cast<std::size_t>(n));
    for (Eigen::Index flat = 0; flat < state.total_dim(); ++flat) {
        Eigen::Index rest = flat;
        for (int p = 0; p < n; ++p) {
            index[static_cast<std::size_t>(p)] =
                static_cast<int>(rest / full_strides[static_cast<std::size_t>(p)]);
            rest %= full_strides[static_cast<std::size_t>(p)];
        }
        Eigen::Index r = 0, c = 0;
        for (std::size_t k = 0; k < m.row_parties.size(); ++k)
            r += row_strides[k] * index[static_cast<std::size_t>(m.row_parties[k])];
        for (std::size_t k = 0; k < m.col_parties.size(); ++k)
            c += col_strides[k] * index[static_cast<std::size_t>(m.col_parties[k])];
        m.entries(r, c) = state.amps()(flat);
    }
    return m;
}

StateVector unmatricize(const Matricization& m) {
    const int n = static_cast<int>(m.row_parties.size() + m.col_parties.size());
    std::vector<int> dims(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < m.row_parties.size(); ++k)
        dims[static_cast<std::size_t>(m.row_parties[k])] = m.row_dims[k];
    for (std::size_t k = 0; k < m.col_parties.size(); ++k)
        dims[static_cast<std::size_t>(m.col_parties[k])] = m.col_dims[k];
    for (int d : dims)
        if (d == 0) throw InvalidBipartition("matricization does not cover all parties");

    const auto full_strides = strides_of(dims);
    const auto row_strides = strides_of(m.row_dims);
    const auto col_strides = strides_of(m.col_dims);

    Vector amps = Vector::Zero(product_of(dims));
    for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.entries.cols(); ++c) {
            Eigen::Index flat = 0;
            Eigen::Index rest = r;
            for (std::size_t k = 0; k < m.row_parties.size(); ++k) {
                flat += full_strides[static_cast<std::size_t>(m.row_parties[k])] *
                        (rest / row_strides[k]);
                rest %= row_strides[k];
            }
            rest = c;
            for (std::size_t k = 0; k < m.col_parties.size(); ++k) {
                flat += full_strides[static_cast<std::size_t>(m.col_parties[k])] *
                        (rest / col_strides[k]);
                rest %= col_strides[k];
            }
            amps(flat) = m.entries(r, c);
        }
    }
    return StateVector(dims, std::move(amps));
}

AppliedLocal apply_local(const StateVector& state, const LocalOperator& op) {
    if (op.party < 0 || op.party >= state.num_parties())
        throw DimensionMismatch("operator party index out of range");
    const int d = state.dim(op.party);
    if (op.matrix.rows() != d || op.matrix.cols() != d)
        throw DimensionMismatch("operator dimension does not match party dimension");

    const auto strides = strides_of(state.party_dims());
    const Eigen::Index stride = strides[static_cast<std::size_t>(op.party)];
    const Eigen::Index block = stride * d;

    Vector out = Vector::Zero(state.total_dim());
    for (Eigen::Index base = 0; base < state.total_dim(); base += block) {
        for (Eigen::Index inner = 0; inner < stride; ++inner) {
            for (int i = 0; i < d; ++i) {
                Complex acc = 0.0;
                for (int j = 0; j < d; ++j)
                    acc += op.matrix(i, j) * state.amps()(base + j * stride + inner);
                out(base + i * stride + inner) = acc;
            }
        }
    }
    StateVector result(state.party_dims(), std::move(out));
    const double n = result.norm();
    return AppliedLocal{std::move(result), n};
}

double phase_invariant_distance(const StateVector& s1, const StateVector& s2) {
    if (s1.party_dims() != s2.party_dims())
        throw DimensionMismatch("states live on different party dimensions");
    const double overlap = std::abs(s1.amps().dot(s2.amps()));
    return std::max(0.0, 1.0 - overlap);
}

Matrix reduced_density(const StateVector& state, const std::vector<int>& parties_kept) {
    auto sorted = parties_kept;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidBipartition("kept parties contain duplicates");
    const Matricization m = matricize(state, Bipartition(sorted, state.num_parties()));
    return m.entries * m.entries.adjoint();
}

StateVector swap_parties(const StateVector& state, int i, int j) {
    if (i < 0 || j < 0 || i >= state.num_parties() || j >= state.num_parties())
        throw DimensionMismatch("party index out of range");
    if (state.dim(i) != state.dim(j))
        throw DimensionMismatch("swapped parties must have equal dimensions");
    if (i == j) return state;

    const auto strides = strides_of(state.party_dims());
    const int n = state.num_parties();
    Vector out(state.total_dim());
    std::vector<int> index(static_cast<std::size_t>(n));
    for (Eigen::Index flat = 0; flat < state.total_dim(); ++flat) {
        Eigen::Index rest = flat;
        for (int p = 0; p < n; ++p) {
            index[static_cast<std::size_t>(p)] =
                static_cast<int>(rest / strides[static_cast<std::size_t>(p)]);
            rest %= strides[static_cast<std::size_t>(p)];
        }
        std::swap(index[static_cast<std::size_t>(i)], index[static_cast<std::size_t>(j)]);
        Eigen::Index target = 0;
        for (int p = 0; p < n; ++p)
            target += strides[static_cast<std::size_t>(p)] * index[static_cast<std::size_t>(p)];
        out(target) = state.amps()(flat);
    }
    return StateVector(state.party_dims(), std::move(out));
}

}  // namespace locsim
