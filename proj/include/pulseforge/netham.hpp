// Copyright 2026 The Pulseforge Authors
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

#include <cstdint>
#include <vector>

#include "pulseforge/linalg.hpp"

namespace pulseforge::netham {

/// d^2 - 1 traceless Hermitian matrices with tr(s_a s_b) = 2 delta_ab.
struct SuBasis {
    int d = 0;
    std::vector<CMatrix> sigma;

    int size() const { return static_cast<int>(sigma.size()); }
};

/// Generalized Gell-Mann matrices: symmetric and antisymmetric off-diagonal
/// pairs (j < k, lexicographic) followed by the diagonal ones. For d = 2 this
/// is (sigma_x, sigma_y, sigma_z).
SuBasis gell_mann_basis(int d);

/// Throws unless the matrices are traceless, Hermitian and trace-orthonormal
/// (normalization 2) with exactly d^2 - 1 members.
void check_su_basis(const SuBasis& basis, double tol = 1e-12);

/// n-node pair-interaction model over a fixed su(d) basis with m = d^2 - 1:
///
///   H = sum_{k != l} sum_{a,b} J[k m + a, l m + b] s_a^k s_b^l + sum_{k,a} r[k m + a] s_a^k
///
/// The coupling sum runs over ordered pairs, so an unordered coupling of
/// strength c between nodes k and l sets J_kl and J_lk to c / 2.
struct PairHamiltonian {
    int n = 0;
    int d = 0;
    RMatrix J;
    RVector r;

    int m() const { return d * d - 1; }
};

/// Throws std::invalid_argument if J is not symmetric with zero diagonal blocks.
void validate(const PairHamiltonian& model, double tol = 1e-12);

/// Checks the block structure of a J-matrix with blocks of size m.
void validate_j_matrix(const RMatrix& J, int m, double tol = 1e-12);

constexpr long long kMaxHilbertDimension = 4096;

long long hilbert_dimension(int n, int d);

CMatrix assemble(const PairHamiltonian& model);
CMatrix assemble(const PairHamiltonian& model, const SuBasis& basis);

/// Symmetric J with zero diagonal blocks and r, all entries uniform in [-1, 1].
PairHamiltonian random_model(int n, int d, std::uint64_t seed);

/// Same coupling operator s_alpha x s_alpha on every pair, J entries equal to
/// `strength` on the (alpha, alpha) slot of each off-diagonal block.
PairHamiltonian complete_network(int n, int d, int alpha, double strength = 1.0);

/// Sub-model acting as zero outside `nodes`: only couplings within the set
/// and local terms on it survive.
PairHamiltonian restrict_to(const PairHamiltonian& model, const std::vector<int>& nodes);

/// Real orthogonal R with U s_a U^dag = sum_b R[b, a] s_b.
RMatrix adjoint_rotation(const SuBasis& basis, const CMatrix& U);

/// Model whose assembled Hamiltonian is (x_k U_k) H (x_k U_k)^dag.
PairHamiltonian rotate_nodes(const PairHamiltonian& model, const SuBasis& basis, const std::vector<CMatrix>& unitaries);

/// Descending eigenvalues of a real symmetric or complex Hermitian matrix.
RVector eigvals_sym(const RMatrix& M);
RVector eigvals_sym(const CMatrix& M);

/// Haar-ish random unitary from the QR of a complex Gaussian matrix.
CMatrix random_unitary(int d, std::uint64_t seed);

/// Embeds a d x d operator on `node` into the n-node space.
CMatrix embed_local(const CMatrix& op, int node, int n, int d);

/// Dense Hamiltonian with random traceless local and pair terms for nodes of
/// (possibly different) dimensions; used for mixed-dimension decoupling.
CMatrix random_mixed_pair_hamiltonian(const std::vector<int>& dims, std::uint64_t seed);

}  // namespace pulseforge::netham
