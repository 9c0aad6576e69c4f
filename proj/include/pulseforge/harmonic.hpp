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
#include <string>
#include <vector>

#include "pulseforge/designs.hpp"
#include "pulseforge/graphcolor.hpp"
#include "pulseforge/linalg.hpp"
#include "pulseforge/netham.hpp"

// Bilinearly coupled oscillators H_C = sum_{k != l} c_kl a_k a_l^dag on a
// truncated Fock space (levels 0..d-1 per oscillator), steered by phase
// rotations exp(i h_k t).
namespace pulseforge::harmonic {

struct OscillatorNetwork {
    int n = 0;
    int d = 0;
    RMatrix C;
};

void validate(const OscillatorNetwork& net, double tol = 1e-12);

/// Random symmetric C with zero diagonal, off-diagonal entries in [-1, 1].
OscillatorNetwork random_network(int n, int d, std::uint64_t seed);

/// Rows m_k of unit-modulus entries; in interval j oscillator k is rotated by
/// exp(i h_k t) with exp(i t) = phases(k, j).
struct PhaseScheme {
    int n = 0;
    int N = 0;
    CMatrix phases;
    std::vector<double> times;
};

void validate(const PhaseScheme& ps, double tol = 1e-12);

/// Entries exp(2 pi i r / u), uniform times.
PhaseScheme phase_scheme_from_ds(const designs::DifferenceScheme& ds);

/// Truncated annihilation operator, a|E> = sqrt(E)|E-1>.
CMatrix annihilation(int d);

CMatrix build_hc(const OscillatorNetwork& net);

/// sum_{k != l} K_kl a_k a_l^dag for a Hermitian coefficient matrix K.
CMatrix build_bilinear(int n, int d, const CMatrix& K);

/// G_kl = sum_j times[j] * phases(l, j) * conj(phases(k, j)): the factor the
/// term a_k a_l^dag picks up under the time-weighted average.
CMatrix weighted_gram(const PhaseScheme& ps);

/// Plain Gram matrix <m_k|m_l> = sum_j conj(m_k[j]) m_l[j].
CMatrix gram_matrix(const PhaseScheme& ps);

struct PhaseAverage {
    CMatrix hamiltonian;         // explicit conjugation average
    CMatrix effective_coupling;  // c_kl times the weighted Gram factor
    double path_mismatch = 0.0;
};

constexpr double kPathTolerance = 1e-10;

/// Averages H_C over the scheme twice (algebraic Gram factors and explicit
/// conjugation) and throws std::logic_error if the two disagree.
PhaseAverage phase_average(const OscillatorNetwork& net, const PhaseScheme& ps);

/// First net.n rows of the difference scheme, exponentiated.
PhaseScheme ds_decoupling(const OscillatorNetwork& net, const designs::DifferenceScheme& ds);

struct FourierDecoupling {
    PhaseScheme scheme;
    /// Smallest nonzero rotation angle 2 pi / n; small angles are hard to
    /// realize accurately for large n.
    double min_rotation_angle = 0.0;
};

/// Discrete Fourier rows m_k[j] = exp(2 pi i j k / n), j = 0..n-1.
FourierDecoupling fourier_decoupling(int n);

/// One difference-scheme row per clique, shared by all members. Optional
/// node_signs (+1 / -1) multiply a node's row, which negates its couplings to
/// clique members of the opposite sign.
PhaseScheme clique_recoupling(const OscillatorNetwork& net, const std::vector<std::vector<int>>& partition,
                              const designs::DifferenceScheme& ds, const std::vector<int>& node_signs = {});

/// Rows m_k[j] = exp(2 pi i j k / n), j = 1..n-1: Gram diagonal n - 1 and
/// off-diagonal -1, so (n - 1) times the average is -H_C.
PhaseScheme fourier_inversion(int n);

/// Ladder basis of su(d): X_1..X_{d-1}, Y_1..Y_{d-1}, then the remaining
/// Gell-Mann matrices. Normalized so tr(s_a s_b) = 2 delta_ab.
netham::SuBasis ladder_basis(int d);

/// J = M (x) A' with M the all-ones off-diagonal n x n matrix and A' the
/// (d^2-1)-square embedding of |phi><phi| + |psi><psi| in the ladder basis.
RMatrix harmonic_j_matrix(int n, int d);

/// Pair model in the ladder basis whose assembly equals build_hc for the
/// all-ones coupling; J is harmonic_j_matrix / 4 under the ordered-pair sum.
netham::PairHamiltonian harmonic_pair_model(int n, int d);

struct SynthesisStep {
    int color = 0;
    std::vector<std::vector<int>> partition;
    std::vector<int> node_signs;
    PhaseScheme scheme;
};

struct GramSynthesisReport {
    double lower = 0.0;
    bool has_upper = false;
    double upper = 0.0;
    bool upper_exact = false;
    std::vector<SynthesisStep> schedule;
    std::string note;
};

/// Gram-matrix bounds for simulating T o C: lower = max(0, -lambda_min(T))
/// (diagonal ignored), upper = W_T with a clique-recoupling schedule when T
/// has entries in {0, +1, -1}. Throws for entries outside [-1, 1].
GramSynthesisReport gram_synthesis_report(const RMatrix& T);

/// Sum over schedule steps (each of unit duration) of the effective coupling.
CMatrix schedule_coupling(const OscillatorNetwork& net, const std::vector<SynthesisStep>& schedule);

}  // namespace pulseforge::harmonic
