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
#include "pulseforge/scheme.hpp"

// Qubit decoupling by sign matrices: in interval j the Pauli terms of qubit k
// acquire the signs Sx[k][j], Sy[k][j], Sz[k][j].
namespace pulseforge::signs {

struct SignTriple {
    int n = 0;
    int N = 0;
    designs::IntMatrix Sx;
    designs::IntMatrix Sy;
    designs::IntMatrix Sz;
};

/// Signs acquired by (sigma_x, sigma_y, sigma_z) under conjugation by
/// 1, sigma_x, sigma_y, sigma_z (OA symbols 1..4).
constexpr int kSignTable[3][4] = {
    {+1, +1, -1, -1},
    {+1, -1, +1, -1},
    {+1, -1, -1, +1},
};

/// phi on GF(4) in enumeration order 0, 1, omega, omega^2.
constexpr int kPhi[4][4] = {
    {+1, +1, +1, +1},
    {+1, -1, -1, +1},
    {+1, -1, +1, -1},
    {+1, +1, -1, -1},
};

/// Entrywise lookup in kSignTable; requires s = 4.
SignTriple oa_to_signs(const designs::OrthogonalArray& oa);

/// One qubit per line of GF(4)^m, N = 4^m; 1 <= m <= 4.
SignTriple spread_signs(int m);

/// Recovers the conjugating Pauli per entry. Pulse indices refer to the d = 2
/// generalized Pauli basis (0 = 1, 1 = Z, 2 = X, 3 = XZ ~ Y).
scheme::PulseScheme signs_to_pulse_scheme(const SignTriple& st);

struct SignReport {
    bool ok = true;
    bool entries_ok = true;
    bool schur_ok = true;
    bool orthogonal_ok = true;
    bool row_sums_ok = true;
    std::vector<std::string> messages;
};

SignReport verify_signs(const SignTriple& st);

}  // namespace pulseforge::signs
