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

// Reference implementations used as test oracles. They build every operator
// on the full space by explicit Kronecker products and are deliberately slow.
#pragma once

#include <vector>

#include "pulseforge/linalg.hpp"
#include "pulseforge/netham.hpp"
#include "pulseforge/scheme.hpp"

namespace oracle {

using pulseforge::CMatrix;
using pulseforge::Complex;

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            for (Eigen::Index p = 0; p < b.rows(); ++p) {
                for (Eigen::Index q = 0; q < b.cols(); ++q) {
                    out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
                }
            }
        }
    }
    return out;
}

// 1 x ... x op (slot k) x ... x 1, slot 0 leftmost.
inline CMatrix embed(const CMatrix& op, int k, const std::vector<int>& dims) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int t = 0; t < static_cast<int>(dims.size()); ++t) {
        out = kron(out, t == k ? op : CMatrix(CMatrix::Identity(dims[t], dims[t])));
    }
    return out;
}

inline CMatrix product(const std::vector<CMatrix>& ops) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (const auto& op : ops) {
        out = kron(out, op);
    }
    return out;
}

inline CMatrix assemble_h(const pulseforge::netham::PairHamiltonian& model, const pulseforge::netham::SuBasis& basis) {
    const int m = model.m();
    const std::vector<int> dims(static_cast<std::size_t>(model.n), model.d);
    long long D = 1;
    for (int k = 0; k < model.n; ++k) {
        D *= model.d;
    }
    CMatrix H = CMatrix::Zero(D, D);
    for (int k = 0; k < model.n; ++k) {
        for (int a = 0; a < m; ++a) {
            const CMatrix sk = embed(basis.sigma[static_cast<std::size_t>(a)], k, dims);
            H += model.r(k * m + a) * sk;
            for (int l = 0; l < model.n; ++l) {
                if (l == k) {
                    continue;
                }
                for (int b = 0; b < m; ++b) {
                    const double J = model.J(k * m + a, l * m + b);
                    if (J != 0.0) {
                        H += J * (sk * embed(basis.sigma[static_cast<std::size_t>(b)], l, dims));
                    }
                }
            }
        }
    }
    return H;
}

inline CMatrix assemble_h(const pulseforge::netham::PairHamiltonian& model) {
    return assemble_h(model, pulseforge::netham::gell_mann_basis(model.d));
}

// sum_j t_j U_j^dag H U_j with U_j the full Kronecker product of the pulses.
inline CMatrix average_h(const CMatrix& H, const pulseforge::scheme::PulseScheme& sch) {
    CMatrix avg = CMatrix::Zero(H.rows(), H.cols());
    for (int j = 0; j < sch.N; ++j) {
        std::vector<CMatrix> ops;
        for (int k = 0; k < sch.n; ++k) {
            const auto& b = sch.bases[static_cast<std::size_t>(k)];
            ops.push_back(b.elements[static_cast<std::size_t>(sch.pulses[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])]);
        }
        const CMatrix U = product(ops);
        avg += sch.times[static_cast<std::size_t>(j)] * (U.adjoint() * H * U);
    }
    return avg;
}

inline CMatrix pauli(char which) {
    CMatrix s = CMatrix::Zero(2, 2);
    const Complex i(0.0, 1.0);
    switch (which) {
        case 'x': s(0, 1) = 1.0; s(1, 0) = 1.0; break;
        case 'y': s(0, 1) = -i; s(1, 0) = i; break;
        case 'z': s(0, 0) = 1.0; s(1, 1) = -1.0; break;
        default: s = CMatrix::Identity(2, 2);
    }
    return s;
}

}  // namespace oracle
