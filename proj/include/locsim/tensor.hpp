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

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "locsim/errors.hpp"

namespace locsim {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Default tolerance for generic arithmetic comparisons.
inline constexpr double kDefaultTol = 1e-10;
/// Default tolerance for state-norm checks.
inline constexpr double kNormTol = 1e-12;

/// Largest singular value. The operator-norm residuals throughout the
/// library are measured with this.
double spectral_norm(const Matrix& m);

/// ‖m† m − I‖ in spectral norm.
double unitarity_residual(const Matrix& m);

/// Pure state over an ordered list of parties. Amplitudes are stored flat
/// in row-major order with the LAST party's index fastest-varying; every
/// matricization and file format in the library inherits this convention.
///
/// The constructor validates shapes and finiteness only, so intermediate
/// results of measurement branches may carry norm < 1. `make_state` is the
/// validating entry point for unit-norm states.
class StateVector {
  public:
    StateVector(std::vector<int> party_dims, Vector amps);

    int num_parties() const { return static_cast<int>(dims_.size()); }
    int dim(int party) const { return dims_.at(static_cast<std::size_t>(party)); }
    const std::vector<int>& party_dims() const { return dims_; }
    Eigen::Index total_dim() const { return amps_.size(); }
    const Vector& amps() const { return amps_; }
    double norm() const { return amps_.norm(); }

    /// Amplitude at a full multi-index (one entry per party).
    Complex amp_at(const std::vector<int>& index) const;

  private:
    std::vector<int> dims_;
    Vector amps_;
};

/// Validated constructor: amplitudes must be normalized within norm_tol
/// unless `renormalize` is set, in which case they are scaled to unit norm.
StateVector make_state(std::vector<int> party_dims, Vector amps,
                       double norm_tol = kNormTol, bool renormalize = false);

/// Operator acting on a single party, given as a dim×dim matrix in that
/// party's computational basis.
struct LocalOperator {
    int party = 0;
    Matrix matrix;

    int dim() const { return static_cast<int>(matrix.rows()); }
};

/// A split of the parties into two disjoint, non-empty groups. Both sides
/// are kept sorted ascending.
class Bipartition {
  public:
    Bipartition(std::vector<int> left, int num_parties);

    const std::vector<int>& left() const { return left_; }
    const std::vector<int>& right() const { return right_; }
    Bipartition swapped() const;

  private:
    std::vector<int> left_, right_;
};

/// All distinct unordered bipartitions of n parties, each oriented with
/// party 0 on the left.
std::vector<Bipartition> all_bipartitions(int num_parties);

/// State amplitudes reshaped into a matrix: rows indexed by the merged
/// left-party multi-index, columns by the right one (last party of each
/// group fastest-varying).
struct Matricization {
    Matrix entries;
    std::vector<int> row_parties, col_parties;
    std::vector<int> row_dims, col_dims;
};

Matricization matricize(const StateVector& state, const Bipartition& cut);

/// Inverse of `matricize`: reassembles the flat amplitude vector in the
/// original party order.
StateVector unmatricize(const Matricization& m);

/// Result of contracting a local operator into a state. `state` is NOT
/// renormalized; `norm` is its 2-norm (branch probability = norm²).
struct AppliedLocal {
    StateVector state;
    double norm = 0.0;
};

AppliedLocal apply_local(const StateVector& state, const LocalOperator& op);

/// 1 − |⟨s1|s2⟩|. Zero iff the states agree up to a global phase.
double phase_invariant_distance(const StateVector& s1, const StateVector& s2);

/// Reduced density matrix of the kept parties, computed as M·M† with
/// M = matricize(state, kept | rest).
Matrix reduced_density(const StateVector& state, const std::vector<int>& parties_kept);

/// Exchange the roles of parties i and j (an involution).
StateVector swap_parties(const StateVector& state, int i, int j);

}  // namespace locsim
