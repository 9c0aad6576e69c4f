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

#include "pulseforge/error_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "pulseforge/netham.hpp"

namespace pulseforge::error_basis {

UnitaryErrorBasis generalized_pauli_basis(int d) {
    if (d < 2 || d > 8) {
        throw std::invalid_argument("generalized_pauli_basis: dimension " + std::to_string(d) + " outside [2, 8]");
    }
    CMatrix X = CMatrix::Zero(d, d);
    CMatrix Z = CMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        X((j + 1) % d, j) = 1.0;
        Z(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * j / d);
    }
    UnitaryErrorBasis basis;
    basis.d = d;
    basis.kind = "generalized_pauli";
    basis.group = designs::FiniteGroup::zd_squared(d);
    CMatrix Xa = CMatrix::Identity(d, d);
    for (int a = 0; a < d; ++a) {
        CMatrix XaZb = Xa;
        for (int b = 0; b < d; ++b) {
            basis.elements.push_back(XaZb);
            XaZb = XaZb * Z;
        }
        Xa = X * Xa;
    }
    return basis;
}

BasisReport check_basis(const UnitaryErrorBasis& basis, double tol) {
    BasisReport report;
    const int d = basis.d;
    if (d < 1 || basis.size() != d * d) {
        report.ok = false;
        return report;
    }
    const CMatrix id = CMatrix::Identity(d, d);
    for (const auto& E : basis.elements) {
        if (E.rows() != d || E.cols() != d) {
            report.ok = false;
            return report;
        }
        report.max_unitarity_error = std::max(report.max_unitarity_error, (E.adjoint() * E - id).cwiseAbs().maxCoeff());
    }
    for (int i = 0; i < basis.size(); ++i) {
        for (int j = 0; j < basis.size(); ++j) {
            const Complex ip = (basis.elements[static_cast<std::size_t>(i)].adjoint() *
                                basis.elements[static_cast<std::size_t>(j)])
                                   .trace() /
                               static_cast<double>(d);
            report.max_orthogonality_error =
                std::max(report.max_orthogonality_error, std::abs(ip - (i == j ? 1.0 : 0.0)));
        }
    }
    report.identity_first = (basis.elements.front() - id).cwiseAbs().maxCoeff() <= tol;
    report.ok = report.max_unitarity_error <= tol && report.max_orthogonality_error <= tol;
    return report;
}

UnitaryErrorBasis inline_basis(std::vector<CMatrix> elements) {
    UnitaryErrorBasis basis;
    const auto count = static_cast<int>(elements.size());
    const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(count))));
    if (d < 2 || d * d != count) {
        throw std::invalid_argument("inline_basis: element count must be d^2 with d >= 2");
    }
    basis.d = d;
    basis.kind = "inline";
    basis.elements = std::move(elements);
    basis.group = designs::FiniteGroup::zd_squared(d);
    const auto report = check_basis(basis);
    if (!report.ok) {
        throw std::invalid_argument("inline_basis: matrices are not a unitary error basis");
    }
    return basis;
}

CMatrix subset_average(const UnitaryErrorBasis& basis, const std::vector<int>& subset, const CMatrix& a) {
    if (a.rows() != basis.d || a.cols() != basis.d) {
        throw std::invalid_argument("subset_average: operator dimension mismatch");
    }
    CMatrix out = CMatrix::Zero(basis.d, basis.d);
    for (int i : subset) {
        const CMatrix& E = basis.elements.at(static_cast<std::size_t>(i));
        out += E.adjoint() * a * E;
    }
    return out / static_cast<double>(subset.size());
}

CMatrix annihilate(const UnitaryErrorBasis& basis, const CMatrix& a) {
    if (a.rows() != basis.d || a.cols() != basis.d) {
        throw std::invalid_argument("annihilate: operator dimension mismatch");
    }
    const double scale = std::max(1.0, a.norm());
    if ((a - a.adjoint()).norm() > 1e-10 * scale) {
        throw std::invalid_argument("annihilate: operator is not Hermitian");
    }
    std::vector<int> all(static_cast<std::size_t>(basis.size()));
    for (int i = 0; i < basis.size(); ++i) {
        all[static_cast<std::size_t>(i)] = i;
    }
    return subset_average(basis, all, a);
}

namespace {

bool annihilates_all(const UnitaryErrorBasis& basis, const netham::SuBasis& su, const std::vector<int>& subset) {
    for (const auto& s : su.sigma) {
        if (subset_average(basis, subset, s).norm() > 1e-10) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool minimality_check(int d, int trials, unsigned long long seed) {
    if (d < 2 || d > 4) {
        throw std::invalid_argument("minimality_check: dimension outside [2, 4]");
    }
    const auto basis = generalized_pauli_basis(d);
    const auto su = netham::gell_mann_basis(d);
    const int size = d * d;
    if (!annihilates_all(basis, su, [&] {
            std::vector<int> all(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i) {
                all[static_cast<std::size_t>(i)] = i;
            }
            return all;
        }())) {
        return false;
    }
    if (d <= 3) {
        // Every proper non-empty subset.
        for (unsigned mask = 1; mask + 1 < (1u << size); ++mask) {
            std::vector<int> subset;
            for (int i = 0; i < size; ++i) {
                if (mask & (1u << i)) {
                    subset.push_back(i);
                }
            }
            if (annihilates_all(basis, su, subset)) {
                return false;
            }
        }
    }
    std::mt19937_64 rng(seed);
    std::vector<int> order(static_cast<std::size_t>(size));
    for (int t = 0; t < trials; ++t) {
        for (int i = 0; i < size; ++i) {
            order[static_cast<std::size_t>(i)] = i;
        }
        std::shuffle(order.begin(), order.end(), rng);
        const std::vector<int> subset(order.begin(), order.end() - 1);
        if (annihilates_all(basis, su, subset)) {
            return false;
        }
    }
    return true;
}

}  // namespace pulseforge::error_basis
