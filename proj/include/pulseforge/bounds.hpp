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
#include <optional>
#include <vector>

#include "pulseforge/linalg.hpp"
#include "pulseforge/netham.hpp"

// Spectral lower bounds on simulation time overhead. Every value here is a
// necessary condition only; none of them certifies that a scheme achieving
// the bound exists.
namespace pulseforge::bounds {

/// x majorized by y: descending partial sums of x bounded by those of y for
/// k < len, equal totals, all up to tol.
bool majorizes(const RVector& x, const RVector& y, double tol = 1e-9);

struct TauBound {
    /// nullopt when no rescaling of y can majorize x.
    std::optional<double> tau;
    /// Partial-sum length that attains the maximum (1-based), 0 if none.
    int binding_k = 0;
    bool lower_bound = true;
};

/// Smallest tau >= 0 with Spec(x) majorized by tau Spec(y), for two traceless
/// spectra given in any order.
TauBound tau_min_spectra(const RVector& x, const RVector& y, double tol = 1e-9);

/// tau_min for J-matrices with diagonal blocks of size `block`.
TauBound tau_min(const RMatrix& Jtilde, const RMatrix& J, int block);

/// Blockwise Schur rescaling J_kl -> s_kl J_kl with S symmetric n x n.
RMatrix rescale(const RMatrix& J, const RMatrix& S, int block);

TauBound tau_min_rescaled(const RMatrix& Jtilde, const RMatrix& J, const RMatrix& S, int block);

struct RescaledSearch {
    double rescaled_max = 0.0;
    RMatrix S_argmax;
    int candidates = 0;
};

constexpr std::uint64_t kRescaleSeed = 0xC0FFEE;

/// Max of tau_min_rescaled over the all-ones S, the supplied candidates and
/// `trials` seeded random symmetric +-1 matrices. Infeasible candidates are
/// skipped.
RescaledSearch rescaled_search(const RMatrix& Jtilde, const RMatrix& J, int block, int trials,
                               const std::vector<RMatrix>& candidates = {}, std::uint64_t seed = kRescaleSeed);

/// r / (-q) with r, q the largest and smallest eigenvalues of J.
double inversion_lower_bound(const RMatrix& J);

/// Same tau_min test applied to the spectra of the assembled Hamiltonians.
TauBound hamiltonian_spectrum_bound(const netham::PairHamiltonian& target, const netham::PairHamiltonian& given);

}  // namespace pulseforge::bounds
