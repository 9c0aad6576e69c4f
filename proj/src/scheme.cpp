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

#include "pulseforge/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>

#include "pulseforge/tensor.hpp"

namespace pulseforge::scheme {

namespace {

// E|c> = value[c] |image[c]> for a monomial matrix E.
struct Monomial {
    std::vector<int> image;
    std::vector<Complex> value;
};

std::optional<Monomial> as_monomial(const CMatrix& E) {
    Monomial out;
    const auto d = static_cast<int>(E.rows());
    out.image.resize(static_cast<std::size_t>(d));
    out.value.resize(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) {
        int hit = -1;
        for (int r = 0; r < d; ++r) {
            if (std::abs(E(r, c)) > 1e-14) {
                if (hit >= 0) {
                    return std::nullopt;
                }
                hit = r;
            }
        }
        if (hit < 0) {
            return std::nullopt;
        }
        out.image[static_cast<std::size_t>(c)] = hit;
        out.value[static_cast<std::size_t>(c)] = E(hit, c);
    }
    return out;
}

std::vector<double> uniform_times(int N) { return std::vector<double>(static_cast<std::size_t>(N), 1.0 / N); }

std::vector<error_basis::UnitaryErrorBasis> pauli_bases(int n, int d) {
    return std::vector<error_basis::UnitaryErrorBasis>(static_cast<std::size_t>(n),
                                                       error_basis::generalized_pauli_basis(d));
}

// OA with at least `rows` rows (>= 2 internally), truncated to `rows`.
designs::OrthogonalArray oa_with_rows(int rows, int s) {
    auto oa = designs::smallest_oa_for(std::max(rows, 2), s);
    if (rows < oa.n) {
        std::vector<int> keep(static_cast<std::size_t>(rows));
        for (int r = 0; r < rows; ++r) {
            keep[static_cast<std::size_t>(r)] = r;
        }
        oa = designs::select_rows(oa, keep);
    }
    return oa;
}

}  // namespace

std::vector<int> PulseScheme::dims() const {
    std::vector<int> out;
    out.reserve(bases.size());
    for (const auto& b : bases) {
        out.push_back(b.d);
    }
    return out;
}

void validate(const PulseScheme& sch) {
    if (sch.n < 1 || sch.N < 1) {
        throw std::invalid_argument("PulseScheme: need n >= 1 and N >= 1");
    }
    if (static_cast<int>(sch.times.size()) != sch.N) {
        throw std::invalid_argument("PulseScheme: times must have N entries");
    }
    double total = 0.0;
    for (double t : sch.times) {
        if (!(t > 0.0)) {
            throw std::invalid_argument("PulseScheme: times must be positive");
        }
        total += t;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("PulseScheme: times must sum to 1");
    }
    if (static_cast<int>(sch.pulses.size()) != sch.n || static_cast<int>(sch.bases.size()) != sch.n) {
        throw std::invalid_argument("PulseScheme: need one pulse row and one basis per node");
    }
    for (int k = 0; k < sch.n; ++k) {
        const auto& row = sch.pulses[static_cast<std::size_t>(k)];
        if (static_cast<int>(row.size()) != sch.N) {
            throw std::invalid_argument("PulseScheme: pulse row " + std::to_string(k) + " has wrong length");
        }
        const int count = sch.bases[static_cast<std::size_t>(k)].size();
        for (int p : row) {
            if (p < 0 || p >= count) {
                throw std::invalid_argument("PulseScheme: pulse index out of range on node " + std::to_string(k));
            }
        }
    }
    if (!(sch.target_overhead > 0.0)) {
        throw std::invalid_argument("PulseScheme: target overhead must be positive");
    }
}

PulseScheme from_oa(const designs::OrthogonalArray& oa, const std::vector<error_basis::UnitaryErrorBasis>& bases) {
    if (static_cast<int>(bases.size()) != oa.n) {
        throw std::invalid_argument("from_oa: need one basis per row");
    }
    PulseScheme sch;
    sch.n = oa.n;
    sch.N = oa.N;
    sch.times = uniform_times(oa.N);
    sch.bases = bases;
    sch.pulses = oa.entries;
    for (int k = 0; k < oa.n; ++k) {
        if (oa.levels(k) != bases[static_cast<std::size_t>(k)].size()) {
            throw std::invalid_argument("from_oa: alphabet size differs from basis size on row " + std::to_string(k));
        }
        for (int& e : sch.pulses[static_cast<std::size_t>(k)]) {
            e -= 1;
        }
    }
    validate(sch);
    return sch;
}

PulseScheme identity_scheme(int n, int d) {
    PulseScheme sch;
    sch.n = n;
    sch.N = 1;
    sch.times = {1.0};
    sch.pulses.assign(static_cast<std::size_t>(n), std::vector<int>{0});
    sch.bases = pauli_bases(n, d);
    return sch;
}

CMatrix average_hamiltonian(const CMatrix& H, const PulseScheme& sch) {
    validate(sch);
    const auto dims = sch.dims();
    long long dim = 1;
    for (int d : dims) {
        dim *= d;
    }
    if (H.rows() != dim || H.cols() != dim) {
        throw std::invalid_argument("average_hamiltonian: Hamiltonian dimension " + std::to_string(H.rows()) +
                                    " does not match scheme dimension " + std::to_string(dim));
    }

    std::vector<std::vector<Monomial>> monomials(static_cast<std::size_t>(sch.n));
    bool monomial = true;
    for (int k = 0; k < sch.n && monomial; ++k) {
        for (const auto& E : sch.bases[static_cast<std::size_t>(k)].elements) {
            auto m = as_monomial(E);
            if (!m) {
                monomial = false;
                break;
            }
            monomials[static_cast<std::size_t>(k)].push_back(std::move(*m));
        }
    }

    CMatrix avg = CMatrix::Zero(dim, dim);
    if (monomial) {
        std::vector<long long> stride(dims.size(), 1);
        for (int k = sch.n - 2; k >= 0; --k) {
            stride[static_cast<std::size_t>(k)] = stride[static_cast<std::size_t>(k) + 1] * dims[static_cast<std::size_t>(k) + 1];
        }
        std::vector<long long> image(static_cast<std::size_t>(dim));
        std::vector<Complex> phase(static_cast<std::size_t>(dim));
        for (int j = 0; j < sch.N; ++j) {
            for (long long x = 0; x < dim; ++x) {
                long long y = 0;
                Complex ph(1.0, 0.0);
                for (int k = 0; k < sch.n; ++k) {
                    const auto ks = static_cast<std::size_t>(k);
                    const int digit = static_cast<int>((x / stride[ks]) % dims[ks]);
                    const auto& mono = monomials[ks][static_cast<std::size_t>(sch.pulses[ks][static_cast<std::size_t>(j)])];
                    y += mono.image[static_cast<std::size_t>(digit)] * stride[ks];
                    ph *= mono.value[static_cast<std::size_t>(digit)];
                }
                image[static_cast<std::size_t>(x)] = y;
                phase[static_cast<std::size_t>(x)] = ph;
            }
            // (U^dag H U)_{ab} = conj(phase_a) H(image_a, image_b) phase_b.
            const double tau = sch.times[static_cast<std::size_t>(j)];
            for (long long b = 0; b < dim; ++b) {
                const Complex right = tau * phase[static_cast<std::size_t>(b)];
                const long long ib = image[static_cast<std::size_t>(b)];
                for (long long a = 0; a < dim; ++a) {
                    avg(a, b) += std::conj(phase[static_cast<std::size_t>(a)]) * H(image[static_cast<std::size_t>(a)], ib) * right;
                }
            }
        }
        return avg;
    }

    for (int j = 0; j < sch.N; ++j) {
        CMatrix M = H;
        for (int k = 0; k < sch.n; ++k) {
            const auto ks = static_cast<std::size_t>(k);
            const auto& E = sch.bases[ks].elements[static_cast<std::size_t>(sch.pulses[ks][static_cast<std::size_t>(j)])];
            M = tensor::conjugate_slot(M, E, k, dims);
        }
        avg += sch.times[static_cast<std::size_t>(j)] * M;
    }
    return avg;
}

CMatrix average_hamiltonian(const netham::PairHamiltonian& model, const PulseScheme& sch) {
    if (model.n != sch.n) {
        throw std::invalid_argument("average_hamiltonian: model and scheme node counts differ");
    }
    for (const auto& b : sch.bases) {
        if (b.d != model.d) {
            throw std::invalid_argument("average_hamiltonian: node dimension mismatch");
        }
    }
    return average_hamiltonian(netham::assemble(model), sch);
}

PulseScheme decoupling_scheme(int n, int d) {
    if (n < 1) {
        throw std::invalid_argument("decoupling_scheme: need at least one node");
    }
    const auto bases = pauli_bases(n, d);
    return from_oa(oa_with_rows(n, d * d), bases);
}

PulseScheme mixed_decoupling_scheme(const std::vector<int>& dims) {
    std::vector<int> levels;
    std::vector<error_basis::UnitaryErrorBasis> bases;
    for (int d : dims) {
        levels.push_back(d * d);
        bases.push_back(error_basis::generalized_pauli_basis(d));
    }
    return from_oa(designs::mixed_product_oa(levels), bases);
}

PulseScheme selective_scheme(int n, int d, const std::vector<int>& keep) {
    const std::set<int> kept(keep.begin(), keep.end());
    if (kept.size() != keep.size() || keep.empty() || keep.size() > 2) {
        throw std::invalid_argument("selective_scheme: keep must list one or two distinct nodes");
    }
    for (int k : keep) {
        if (k < 0 || k >= n) {
            throw std::invalid_argument("selective_scheme: kept node out of range");
        }
    }
    const int others = n - static_cast<int>(keep.size());
    if (others == 0) {
        return identity_scheme(n, d);
    }
    const auto oa = oa_with_rows(others, d * d);
    PulseScheme sch;
    sch.n = n;
    sch.N = oa.N;
    sch.times = uniform_times(oa.N);
    sch.bases = pauli_bases(n, d);
    int next = 0;
    for (int k = 0; k < n; ++k) {
        if (kept.count(k)) {
            sch.pulses.emplace_back(static_cast<std::size_t>(oa.N), 0);
        } else {
            auto row = oa.entries[static_cast<std::size_t>(next++)];
            for (int& e : row) {
                e -= 1;
            }
            sch.pulses.push_back(std::move(row));
        }
    }
    validate(sch);
    return sch;
}

PulseScheme inversion_scheme(int n, int d) {
    if (n < 1) {
        throw std::invalid_argument("inversion_scheme: need at least one node");
    }
    const auto bases = pauli_bases(n, d);
    const auto oa = designs::normalize_oa(oa_with_rows(n, d * d), bases.front().group);
    PulseScheme sch;
    sch.n = n;
    sch.N = oa.N - 1;
    sch.times = uniform_times(sch.N);
    sch.bases = bases;
    sch.target_overhead = sch.N;
    for (const auto& row : oa.entries) {
        std::vector<int> pulses;
        pulses.reserve(row.size() - 1);
        for (std::size_t c = 1; c < row.size(); ++c) {
            pulses.push_back(row[c] - 1);
        }
        sch.pulses.push_back(std::move(pulses));
    }
    validate(sch);
    return sch;
}

SchemeReport verify_scheme(const CMatrix& H, const PulseScheme& sch, const CMatrix& target, double overhead) {
    const CMatrix avg = average_hamiltonian(H, sch);
    if (target.rows() != avg.rows() || target.cols() != avg.cols()) {
        throw std::invalid_argument("verify_scheme: target dimension mismatch");
    }
    SchemeReport report;
    report.residual = (overhead * avg - target).norm() / std::max(1.0, target.norm());
    report.ok = report.residual <= kSchemeTolerance;
    return report;
}

SchemeReport verify_scheme(const netham::PairHamiltonian& model, const PulseScheme& sch, const CMatrix& target,
                           double overhead) {
    if (model.n != sch.n) {
        throw std::invalid_argument("verify_scheme: model and scheme node counts differ");
    }
    return verify_scheme(netham::assemble(model), sch, target, overhead);
}

}  // namespace pulseforge::scheme
