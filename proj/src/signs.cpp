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

#include "pulseforge/signs.hpp"

#include <stdexcept>

#include "pulseforge/error_basis.hpp"
#include "pulseforge/gf.hpp"

namespace pulseforge::signs {

namespace {

void check_shape(const SignTriple& st) {
    auto bad = [&](const designs::IntMatrix& M) {
        if (static_cast<int>(M.size()) != st.n) {
            return true;
        }
        for (const auto& row : M) {
            if (static_cast<int>(row.size()) != st.N) {
                return true;
            }
        }
        return false;
    };
    if (st.n < 1 || st.N < 1 || bad(st.Sx) || bad(st.Sy) || bad(st.Sz)) {
        throw std::invalid_argument("SignTriple: matrices must all be n x N with n, N >= 1");
    }
}

std::string where(const char* name, int k) { return std::string(name) + "[" + std::to_string(k) + "]"; }

}  // namespace

SignTriple oa_to_signs(const designs::OrthogonalArray& oa) {
    if (oa.s != 4 || oa.mixed()) {
        throw std::invalid_argument("oa_to_signs: need a uniform array over 4 symbols, got s = " +
                                    std::to_string(oa.s));
    }
    SignTriple st;
    st.n = oa.n;
    st.N = oa.N;
    designs::IntMatrix* out[3] = {&st.Sx, &st.Sy, &st.Sz};
    for (int a = 0; a < 3; ++a) {
        out[a]->assign(static_cast<std::size_t>(oa.n), std::vector<int>(static_cast<std::size_t>(oa.N)));
    }
    for (int k = 0; k < oa.n; ++k) {
        for (int j = 0; j < oa.N; ++j) {
            const int e = oa.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            if (e < 1 || e > 4) {
                throw std::invalid_argument("oa_to_signs: symbol out of range");
            }
            for (int a = 0; a < 3; ++a) {
                (*out[a])[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = kSignTable[a][e - 1];
            }
        }
    }
    return st;
}

SignTriple spread_signs(int m) {
    if (m < 1 || m > 4) {
        throw std::invalid_argument("spread_signs: m must be in 1..4");
    }
    const gf::GaloisField f4(2, 2);
    const std::uint32_t omega = 2;
    const std::uint32_t omega2 = f4.mul(omega, omega);
    const int N = 1 << (2 * m);

    // Kronecker product phi(v_0) (x) ... (x) phi(v_{m-1}), v_0 most significant.
    auto kron_phi = [&](const std::vector<std::uint32_t>& v) {
        std::vector<int> row(static_cast<std::size_t>(N));
        for (int col = 0; col < N; ++col) {
            int sign = 1;
            int rest = col;
            for (int t = m - 1; t >= 0; --t) {
                sign *= kPhi[v[static_cast<std::size_t>(t)]][rest % 4];
                rest /= 4;
            }
            row[static_cast<std::size_t>(col)] = sign;
        }
        return row;
    };
    auto scale = [&](std::uint32_t c, std::vector<std::uint32_t> v) {
        for (auto& x : v) {
            x = f4.mul(c, x);
        }
        return v;
    };

    SignTriple st;
    st.N = N;
    for (int idx = 1; idx < N; ++idx) {
        std::vector<std::uint32_t> v(static_cast<std::size_t>(m));
        int rest = idx;
        for (int t = m - 1; t >= 0; --t) {
            v[static_cast<std::size_t>(t)] = static_cast<std::uint32_t>(rest % 4);
            rest /= 4;
        }
        std::uint32_t lead = 0;
        for (auto x : v) {
            if (x != 0) {
                lead = x;
                break;
            }
        }
        if (lead != 1) {
            continue;
        }
        st.Sx.push_back(kron_phi(scale(omega, v)));
        st.Sy.push_back(kron_phi(scale(omega2, v)));
        st.Sz.push_back(kron_phi(v));
    }
    st.n = static_cast<int>(st.Sz.size());
    return st;
}

scheme::PulseScheme signs_to_pulse_scheme(const SignTriple& st) {
    check_shape(st);
    scheme::PulseScheme sch;
    sch.n = st.n;
    sch.N = st.N;
    sch.times.assign(static_cast<std::size_t>(st.N), 1.0 / st.N);
    sch.pulses.assign(static_cast<std::size_t>(st.n), std::vector<int>(static_cast<std::size_t>(st.N)));
    sch.bases.assign(static_cast<std::size_t>(st.n), error_basis::generalized_pauli_basis(2));
    // Generalized Pauli index for the conjugating Pauli 1, X, Y, Z.
    constexpr int kPauliIndex[4] = {0, 2, 3, 1};
    for (int k = 0; k < st.n; ++k) {
        for (int j = 0; j < st.N; ++j) {
            const auto kk = static_cast<std::size_t>(k);
            const auto jj = static_cast<std::size_t>(j);
            const int pattern[3] = {st.Sx[kk][jj], st.Sy[kk][jj], st.Sz[kk][jj]};
            int found = -1;
            for (int col = 0; col < 4 && found < 0; ++col) {
                if (pattern[0] == kSignTable[0][col] && pattern[1] == kSignTable[1][col] &&
                    pattern[2] == kSignTable[2][col]) {
                    found = col;
                }
            }
            if (found < 0) {
                throw std::invalid_argument("signs_to_pulse_scheme: entry (" + std::to_string(k) + ", " +
                                            std::to_string(j) + ") is not a valid sign pattern");
            }
            sch.pulses[kk][jj] = kPauliIndex[found];
        }
    }
    return sch;
}

SignReport verify_signs(const SignTriple& st) {
    check_shape(st);
    SignReport rep;
    const designs::IntMatrix* mats[3] = {&st.Sx, &st.Sy, &st.Sz};
    const char* names[3] = {"Sx", "Sy", "Sz"};
    for (int a = 0; a < 3; ++a) {
        for (int k = 0; k < st.n; ++k) {
            for (int v : (*mats[a])[static_cast<std::size_t>(k)]) {
                if (v != 1 && v != -1) {
                    rep.entries_ok = false;
                    rep.messages.push_back(where(names[a], k) + " has an entry other than +1/-1");
                    break;
                }
            }
        }
    }
    for (int k = 0; k < st.n; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        for (int j = 0; j < st.N; ++j) {
            const auto jj = static_cast<std::size_t>(j);
            if (st.Sx[kk][jj] * st.Sy[kk][jj] != st.Sz[kk][jj]) {
                rep.schur_ok = false;
                rep.messages.push_back("Schur condition fails at qubit " + std::to_string(k) + ", interval " +
                                       std::to_string(j));
            }
        }
    }
    std::vector<const std::vector<int>*> rows;
    std::vector<std::string> labels;
    for (int a = 0; a < 3; ++a) {
        for (int k = 0; k < st.n; ++k) {
            rows.push_back(&(*mats[a])[static_cast<std::size_t>(k)]);
            labels.push_back(where(names[a], k));
        }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        long long sum = 0;
        for (int v : *rows[r]) {
            sum += v;
        }
        if (sum != 0) {
            rep.row_sums_ok = false;
            rep.messages.push_back(labels[r] + " sums to " + std::to_string(sum));
        }
        for (std::size_t q = r + 1; q < rows.size(); ++q) {
            long long dot = 0;
            for (int j = 0; j < st.N; ++j) {
                dot += static_cast<long long>((*rows[r])[static_cast<std::size_t>(j)]) *
                       (*rows[q])[static_cast<std::size_t>(j)];
            }
            if (dot != 0) {
                rep.orthogonal_ok = false;
                rep.messages.push_back(labels[r] + " . " + labels[q] + " = " + std::to_string(dot));
            }
        }
    }
    rep.ok = rep.entries_ok && rep.schur_ok && rep.orthogonal_ok && rep.row_sums_ok;
    return rep;
}

}  // namespace pulseforge::signs
