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

#include <string>
#include <vector>

#include "pulseforge/designs.hpp"
#include "pulseforge/linalg.hpp"

namespace pulseforge::error_basis {

/// d^2 unitaries on C^d, pairwise orthogonal under tr(A^dag B) / d.
///
/// Element i carries the group label i of `group`; label 0 must be the
/// identity matrix for the normal-form inversion path. The shift/clock
/// family labels X^a Z^b with i = a*d + b.
struct UnitaryErrorBasis {
    int d = 0;
    std::vector<CMatrix> elements;
    designs::FiniteGroup group = designs::FiniteGroup::cyclic(1);
    std::string kind;  // "generalized_pauli" or "inline"

    int size() const { return static_cast<int>(elements.size()); }
};

/// Elements X^a Z^b, X|j> = |j+1 mod d>, Z|j> = exp(2 pi i j / d)|j>.
UnitaryErrorBasis generalized_pauli_basis(int d);

/// Wraps user-provided matrices; throws if they are not a unitary error basis.
/// The group defaults to Z_d x Z_d labels.
UnitaryErrorBasis inline_basis(std::vector<CMatrix> elements);

struct BasisReport {
    bool ok = true;
    double max_unitarity_error = 0.0;
    double max_orthogonality_error = 0.0;
    bool identity_first = false;
};

BasisReport check_basis(const UnitaryErrorBasis& basis, double tol = 1e-12);

/// (1/d^2) sum_i E_i^dag a E_i. Zero for traceless a; tr(a)/d * 1 in general.
CMatrix annihilate(const UnitaryErrorBasis& basis, const CMatrix& a);

/// Uniformly weighted conjugation average over a subset of basis elements.
CMatrix subset_average(const UnitaryErrorBasis& basis, const std::vector<int>& subset, const CMatrix& a);

/// True when no proper subset (size < d^2, uniform weights) annihilates su(d).
/// Exhaustive for d = 2; for d = 3 checks `trials` seeded random 8-subsets.
bool minimality_check(int d, int trials = 100, unsigned long long seed = 0);

}  // namespace pulseforge::error_basis
