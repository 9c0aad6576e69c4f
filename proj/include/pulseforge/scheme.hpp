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

#include <vector>

#include "pulseforge/designs.hpp"
#include "pulseforge/error_basis.hpp"
#include "pulseforge/linalg.hpp"
#include "pulseforge/netham.hpp"

namespace pulseforge::scheme {

/// Per-node, per-interval pulses from each node's unitary error basis.
///
/// In interval j node k is conjugated by bases[k].elements[pulses[k][j]]
/// (0-based); the interval lasts times[j] of the unit cycle.
struct PulseScheme {
    int n = 0;
    int N = 0;
    std::vector<double> times;
    designs::IntMatrix pulses;
    std::vector<error_basis::UnitaryErrorBasis> bases;
    double target_overhead = 1.0;

    std::vector<int> dims() const;
};

/// Throws std::invalid_argument on shape, time or index violations.
void validate(const PulseScheme& sch);

/// Scheme from an OA: entry e on row k selects basis element e - 1.
PulseScheme from_oa(const designs::OrthogonalArray& oa, const std::vector<error_basis::UnitaryErrorBasis>& bases);

/// Single interval with the identity pulse on every node.
PulseScheme identity_scheme(int n, int d);

/// sum_j times[j] U_j^dag H U_j with U_j the product of the pulses in interval j.
CMatrix average_hamiltonian(const CMatrix& H, const PulseScheme& sch);
CMatrix average_hamiltonian(const netham::PairHamiltonian& model, const PulseScheme& sch);

/// OA-based decoupling for n nodes of dimension d (smallest_oa_for(n, d^2)).
PulseScheme decoupling_scheme(int n, int d);

/// Decoupling for nodes of different dimensions via the mixed product array.
PulseScheme mixed_decoupling_scheme(const std::vector<int>& dims);

/// Decouples everything except the nodes in `keep` (one or two, 0-based),
/// which see the identity in every interval.
PulseScheme selective_scheme(int n, int d, const std::vector<int>& keep);

/// Normal-form OA with the all-identity column dropped; overhead N - 1.
PulseScheme inversion_scheme(int n, int d);

struct SchemeReport {
    bool ok = false;
    double residual = 0.0;
};

constexpr double kSchemeTolerance = 1e-9;

/// residual = ||overhead * average - target||_F / max(1, ||target||_F).
SchemeReport verify_scheme(const CMatrix& H, const PulseScheme& sch, const CMatrix& target, double overhead);
SchemeReport verify_scheme(const netham::PairHamiltonian& model, const PulseScheme& sch, const CMatrix& target,
                           double overhead);

}  // namespace pulseforge::scheme
