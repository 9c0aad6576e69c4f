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

#include "pulseforge/netham.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "pulseforge/tensor.hpp"

namespace pulseforge::netham {

SuBasis gell_mann_basis(int d) {
    if (d < 2 || d > 4) {
        throw std::invalid_argument("gell_mann_basis: dimension " + std::to_string(d) + " outside [2, 4]");
    }
    SuBasis basis;
    basis.d = d;
    const Complex i(0.0, 1.0);
    // Order within each pair (j, k): symmetric then antisymmetric, so the
    // d = 2 case reads (sigma_x, sigma_y, sigma_z).
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            CMatrix sym = CMatrix::Zero(d, d);
            sym(j, k) = 1.0;
            sym(k, j) = 1.0;
            CMatrix anti = CMatrix::Zero(d, d);
            anti(j, k) = -i;
            anti(k, j) = i;
            basis.sigma.push_back(std::move(sym));
            basis.sigma.push_back(std::move(anti));
        }
    }
    for (int l = 1; l < d; ++l) {
        CMatrix diag = CMatrix::Zero(d, d);
        const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
        for (int j = 0; j < l; ++j) {
            diag(j, j) = scale;
        }
        diag(l, l) = -l * scale;
        basis.sigma.push_back(std::move(diag));
    }
    return basis;
}

void check_su_basis(const SuBasis& basis, double tol) {
    const int d = basis.d;
    if (basis.size() != d * d - 1) {
        throw std::invalid_argument("su basis: expected d^2 - 1 elements");
    }
    for (int a = 0; a < basis.size(); ++a) {
        const CMatrix& s = basis.sigma[static_cast<std::size_t>(a)];
        if (s.rows() != d || s.cols() != d) {
            throw std::invalid_argument("su basis: element has wrong shape");
        }
        if ((s - s.adjoint()).norm() > tol) {
            throw std::invalid_argument("su basis: element " + std::to_string(a) + " is not Hermitian");
        }
        if (std::abs(s.trace()) > tol) {
            throw std::invalid_argument("su basis: element " + std::to_string(a) + " is not traceless");
        }
        for (int b = 0; b < basis.size(); ++b) {
            const Complex ip = (s * basis.sigma[static_cast<std::size_t>(b)]).trace();
            if (std::abs(ip - (a == b ? 2.0 : 0.0)) > tol) {
                throw std::invalid_argument("su basis: elements are not trace-orthonormal");
            }
        }
    }
}

void validate_j_matrix(const RMatrix& J, int m, double tol) {
    if (m <= 0 || J.rows() != J.cols() || J.rows() % m != 0) {
        throw std::invalid_argument("J-matrix: shape is not a multiple of the block size");
    }
    if ((J - J.transpose()).cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument("J-matrix: not symmetric");
    }
    const int n = static_cast<int>(J.rows()) / m;
    for (int k = 0; k < n; ++k) {
        if (J.block(k * m, k * m, m, m).cwiseAbs().maxCoeff() > tol) {
            throw std::invalid_argument("J-matrix: diagonal block " + std::to_string(k) + " is not zero");
        }
    }
}

void validate(const PairHamiltonian& model, double tol) {
    if (model.n < 1 || model.d < 2) {
        throw std::invalid_argument("PairHamiltonian: need n >= 1 and d >= 2");
    }
    const int size = model.n * model.m();
    if (model.J.rows() != size || model.J.cols() != size) {
        throw std::invalid_argument("PairHamiltonian: J must be (n m) x (n m)");
    }
    if (model.r.size() != size) {
        throw std::invalid_argument("PairHamiltonian: r must have length n m");
    }
    validate_j_matrix(model.J, model.m(), tol);
}

long long hilbert_dimension(int n, int d) {
    long long dim = 1;
    for (int k = 0; k < n; ++k) {
        dim *= d;
        if (dim > kMaxHilbertDimension) {
            throw std::invalid_argument("Hilbert space dimension " + std::to_string(d) + "^" + std::to_string(n) +
                                        " exceeds " + std::to_string(kMaxHilbertDimension));
        }
    }
    return dim;
}

CMatrix assemble(const PairHamiltonian& model) { return assemble(model, gell_mann_basis(model.d)); }

CMatrix assemble(const PairHamiltonian& model, const SuBasis& basis) {
    validate(model);
    if (basis.d != model.d || basis.size() != model.m()) {
        throw std::invalid_argument("assemble: basis does not match model dimension");
    }
    const int n = model.n;
    const int d = model.d;
    const int m = model.m();
    const auto dim = hilbert_dimension(n, d);
    const std::vector<int> dims(static_cast<std::size_t>(n), d);
    CMatrix H = CMatrix::Zero(dim, dim);
    for (int k = 0; k < n; ++k) {
        CMatrix local = CMatrix::Zero(d, d);
        for (int a = 0; a < m; ++a) {
            local += model.r(k * m + a) * basis.sigma[static_cast<std::size_t>(a)];
        }
        tensor::add_embedded(H, local, {k}, dims);
        for (int l = k + 1; l < n; ++l) {
            CMatrix pair = CMatrix::Zero(d * d, d * d);
            for (int a = 0; a < m; ++a) {
                for (int b = 0; b < m; ++b) {
                    // Ordered-pair sum: J_kl;ab s_a^k s_b^l + J_lk;ba s_b^l s_a^k.
                    const double c = model.J(k * m + a, l * m + b) + model.J(l * m + b, k * m + a);
                    if (c != 0.0) {
                        pair += c * tensor::kron(basis.sigma[static_cast<std::size_t>(a)],
                                                 basis.sigma[static_cast<std::size_t>(b)]);
                    }
                }
            }
            tensor::add_embedded(H, pair, {k, l}, dims);
        }
    }
    return H;
}

PairHamiltonian random_model(int n, int d, std::uint64_t seed) {
    PairHamiltonian model;
    model.n = n;
    model.d = d;
    const int m = model.m();
    const int size = n * m;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    model.J = RMatrix::Zero(size, size);
    model.r = RVector::Zero(size);
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            for (int a = 0; a < m; ++a) {
                for (int b = 0; b < m; ++b) {
                    const double v = coef(rng);
                    model.J(k * m + a, l * m + b) = v;
                    model.J(l * m + b, k * m + a) = v;
                }
            }
        }
    }
    for (int i = 0; i < size; ++i) {
        model.r(i) = coef(rng);
    }
    return model;
}

PairHamiltonian complete_network(int n, int d, int alpha, double strength) {
    PairHamiltonian model;
    model.n = n;
    model.d = d;
    const int m = model.m();
    if (alpha < 0 || alpha >= m) {
        throw std::invalid_argument("complete_network: basis index out of range");
    }
    model.J = RMatrix::Zero(n * m, n * m);
    model.r = RVector::Zero(n * m);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            if (k != l) {
                model.J(k * m + alpha, l * m + alpha) = strength;
            }
        }
    }
    return model;
}

PairHamiltonian restrict_to(const PairHamiltonian& model, const std::vector<int>& nodes) {
    PairHamiltonian out = model;
    const int m = model.m();
    std::vector<bool> keep(static_cast<std::size_t>(model.n), false);
    for (int k : nodes) {
        if (k < 0 || k >= model.n) {
            throw std::out_of_range("restrict_to: node index out of range");
        }
        keep[static_cast<std::size_t>(k)] = true;
    }
    for (int k = 0; k < model.n; ++k) {
        if (!keep[static_cast<std::size_t>(k)]) {
            out.r.segment(k * m, m).setZero();
        }
        for (int l = 0; l < model.n; ++l) {
            if (!keep[static_cast<std::size_t>(k)] || !keep[static_cast<std::size_t>(l)]) {
                out.J.block(k * m, l * m, m, m).setZero();
            }
        }
    }
    return out;
}

RMatrix adjoint_rotation(const SuBasis& basis, const CMatrix& U) {
    const int m = basis.size();
    RMatrix R(m, m);
    for (int a = 0; a < m; ++a) {
        const CMatrix rotated = U * basis.sigma[static_cast<std::size_t>(a)] * U.adjoint();
        for (int b = 0; b < m; ++b) {
            R(b, a) = 0.5 * (basis.sigma[static_cast<std::size_t>(b)] * rotated).trace().real();
        }
    }
    return R;
}

PairHamiltonian rotate_nodes(const PairHamiltonian& model, const SuBasis& basis,
                             const std::vector<CMatrix>& unitaries) {
    if (static_cast<int>(unitaries.size()) != model.n) {
        throw std::invalid_argument("rotate_nodes: need one unitary per node");
    }
    const int m = model.m();
    std::vector<RMatrix> rotations;
    rotations.reserve(unitaries.size());
    for (const auto& U : unitaries) {
        rotations.push_back(adjoint_rotation(basis, U));
    }
    PairHamiltonian out = model;
    for (int k = 0; k < model.n; ++k) {
        const auto& Rk = rotations[static_cast<std::size_t>(k)];
        out.r.segment(k * m, m) = Rk * model.r.segment(k * m, m);
        for (int l = 0; l < model.n; ++l) {
            const auto& Rl = rotations[static_cast<std::size_t>(l)];
            out.J.block(k * m, l * m, m, m) = Rk * model.J.block(k * m, l * m, m, m) * Rl.transpose();
        }
    }
    return out;
}

RVector eigvals_sym(const RMatrix& M) {
    if (M.rows() != M.cols()) {
        throw std::invalid_argument("eigvals_sym: matrix is not square");
    }
    Eigen::SelfAdjointEigenSolver<RMatrix> solver(M, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigvals_sym: eigensolver failed");
    }
    return solver.eigenvalues().reverse();
}

RVector eigvals_sym(const CMatrix& M) {
    if (M.rows() != M.cols()) {
        throw std::invalid_argument("eigvals_sym: matrix is not square");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(M, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigvals_sym: eigensolver failed");
    }
    return solver.eigenvalues().reverse();
}

CMatrix random_unitary(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    CMatrix G(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            G(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(G);
    CMatrix Q = qr.householderQ();
    const CMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const Complex rjj = R(j, j);
        if (std::abs(rjj) > 0.0) {
            Q.col(j) *= rjj / std::abs(rjj);
        }
    }
    return Q;
}

CMatrix embed_local(const CMatrix& op, int node, int n, int d) {
    const auto dim = hilbert_dimension(n, d);
    CMatrix out = CMatrix::Zero(dim, dim);
    tensor::add_embedded(out, op, {node}, std::vector<int>(static_cast<std::size_t>(n), d));
    return out;
}

namespace {

CMatrix random_traceless_hermitian(int d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    CMatrix G(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            G(i, j) = Complex(coef(rng), coef(rng));
        }
    }
    CMatrix A = 0.5 * (G + G.adjoint());
    A -= (A.trace() / static_cast<double>(d)) * CMatrix::Identity(d, d);
    return A;
}

}  // namespace

CMatrix random_mixed_pair_hamiltonian(const std::vector<int>& dims, std::uint64_t seed) {
    long long dim = 1;
    for (int d : dims) {
        if (d < 2) {
            throw std::invalid_argument("random_mixed_pair_hamiltonian: node dimension must be at least 2");
        }
        dim *= d;
        if (dim > kMaxHilbertDimension) {
            throw std::invalid_argument("random_mixed_pair_hamiltonian: dimension exceeds limit");
        }
    }
    std::mt19937_64 rng(seed);
    const int n = static_cast<int>(dims.size());
    CMatrix H = CMatrix::Zero(dim, dim);
    for (int k = 0; k < n; ++k) {
        const int dk = dims[static_cast<std::size_t>(k)];
        tensor::add_embedded(H, random_traceless_hermitian(dk, rng), {k}, dims);
        for (int l = k + 1; l < n; ++l) {
            const int dl = dims[static_cast<std::size_t>(l)];
            CMatrix pair = CMatrix::Zero(dk * dl, dk * dl);
            for (int term = 0; term < 3; ++term) {
                pair += tensor::kron(random_traceless_hermitian(dk, rng), random_traceless_hermitian(dl, rng));
            }
            tensor::add_embedded(H, pair, {k, l}, dims);
        }
    }
    return H;
}

}  // namespace pulseforge::netham
