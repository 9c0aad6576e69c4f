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

#include "pulseforge/harmonic.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "pulseforge/gf.hpp"
#include "pulseforge/tensor.hpp"

namespace pulseforge::harmonic {

namespace {

Complex root_of_unity(long long numerator, long long denominator) {
    const long long r = ((numerator % denominator) + denominator) % denominator;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(denominator));
}

std::vector<double> uniform_times(int N) { return std::vector<double>(static_cast<std::size_t>(N), 1.0 / N); }

int smallest_prime_at_least(int v) {
    int p = std::max(v, 2);
    while (!gf::is_prime(static_cast<std::uint64_t>(p))) {
        ++p;
    }
    return p;
}

}  // namespace

void validate(const OscillatorNetwork& net, double tol) {
    if (net.n < 1 || net.d < 2) {
        throw std::invalid_argument("OscillatorNetwork: need n >= 1 and d >= 2");
    }
    if (net.C.rows() != net.n || net.C.cols() != net.n) {
        throw std::invalid_argument("OscillatorNetwork: C must be n x n");
    }
    if ((net.C - net.C.transpose()).cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument("OscillatorNetwork: C must be symmetric");
    }
    if (net.C.diagonal().cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument("OscillatorNetwork: C must have zero diagonal");
    }
}

OscillatorNetwork random_network(int n, int d, std::uint64_t seed) {
    OscillatorNetwork net{n, d, RMatrix::Zero(n, n)};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            net.C(k, l) = net.C(l, k) = coef(rng);
        }
    }
    return net;
}

void validate(const PhaseScheme& ps, double tol) {
    if (ps.n < 1 || ps.N < 1) {
        throw std::invalid_argument("PhaseScheme: need n >= 1 and N >= 1");
    }
    if (ps.phases.rows() != ps.n || ps.phases.cols() != ps.N) {
        throw std::invalid_argument("PhaseScheme: phases must be n x N");
    }
    if ((ps.phases.cwiseAbs().array() - 1.0).abs().maxCoeff() > tol) {
        throw std::invalid_argument("PhaseScheme: entries must have modulus one");
    }
    if (static_cast<int>(ps.times.size()) != ps.N) {
        throw std::invalid_argument("PhaseScheme: times must have N entries");
    }
    double total = 0.0;
    for (double t : ps.times) {
        if (!(t > 0.0)) {
            throw std::invalid_argument("PhaseScheme: times must be positive");
        }
        total += t;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("PhaseScheme: times must sum to 1");
    }
}

PhaseScheme phase_scheme_from_ds(const designs::DifferenceScheme& ds) {
    PhaseScheme ps;
    ps.n = ds.n;
    ps.N = ds.N;
    ps.phases.resize(ds.n, ds.N);
    for (int k = 0; k < ds.n; ++k) {
        for (int j = 0; j < ds.N; ++j) {
            ps.phases(k, j) = root_of_unity(ds.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)], ds.u);
        }
    }
    ps.times = uniform_times(ds.N);
    return ps;
}

CMatrix annihilation(int d) {
    CMatrix a = CMatrix::Zero(d, d);
    for (int E = 1; E < d; ++E) {
        a(E - 1, E) = std::sqrt(static_cast<double>(E));
    }
    return a;
}

CMatrix build_bilinear(int n, int d, const CMatrix& K) {
    if (K.rows() != n || K.cols() != n) {
        throw std::invalid_argument("build_bilinear: coefficient matrix must be n x n");
    }
    const auto dim = netham::hilbert_dimension(n, d);
    const std::vector<int> dims(static_cast<std::size_t>(n), d);
    const CMatrix a = annihilation(d);
    const CMatrix term = tensor::kron(a, a.adjoint());
    CMatrix H = CMatrix::Zero(dim, dim);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            if (k != l && K(k, l) != Complex(0.0, 0.0)) {
                tensor::add_embedded(H, K(k, l) * term, {k, l}, dims);
            }
        }
    }
    return H;
}

CMatrix build_hc(const OscillatorNetwork& net) {
    validate(net);
    return build_bilinear(net.n, net.d, net.C.cast<Complex>());
}

CMatrix weighted_gram(const PhaseScheme& ps) {
    validate(ps);
    CMatrix G = CMatrix::Zero(ps.n, ps.n);
    for (int j = 0; j < ps.N; ++j) {
        const CVector col = ps.phases.col(j);
        G += ps.times[static_cast<std::size_t>(j)] * (col.conjugate() * col.transpose());
    }
    return G;
}

CMatrix gram_matrix(const PhaseScheme& ps) {
    validate(ps);
    return ps.phases.conjugate() * ps.phases.transpose();
}

PhaseAverage phase_average(const OscillatorNetwork& net, const PhaseScheme& ps) {
    validate(net);
    validate(ps);
    if (ps.n != net.n) {
        throw std::invalid_argument("phase_average: scheme rows do not match oscillator count");
    }
    const CMatrix H = build_hc(net);
    PhaseAverage out;
    out.effective_coupling = net.C.cast<Complex>().cwiseProduct(weighted_gram(ps));
    const CMatrix algebraic = build_bilinear(net.n, net.d, out.effective_coupling);

    // exp(i h t) is diagonal with entries m^E, so conjugation rescales H(x, y)
    // by u_x conj(u_y) with u_x = prod_k m_k^{x_k}.
    const auto dim = H.rows();
    out.hamiltonian = CMatrix::Zero(dim, dim);
    CVector u(dim);
    for (int j = 0; j < ps.N; ++j) {
        for (Eigen::Index x = 0; x < dim; ++x) {
            Complex ux(1.0, 0.0);
            Eigen::Index rest = x;
            for (int k = net.n - 1; k >= 0; --k) {
                const auto level = static_cast<int>(rest % net.d);
                rest /= net.d;
                ux *= std::pow(ps.phases(k, j), level);
            }
            u(x) = ux;
        }
        out.hamiltonian += ps.times[static_cast<std::size_t>(j)] *
                           (u.asDiagonal() * H * u.conjugate().asDiagonal()).eval();
    }
    out.path_mismatch = (out.hamiltonian - algebraic).norm();
    if (out.path_mismatch > kPathTolerance * std::max(1.0, H.norm())) {
        throw std::logic_error("phase_average: algebraic and explicit averages disagree by " +
                               std::to_string(out.path_mismatch));
    }
    return out;
}

PhaseScheme ds_decoupling(const OscillatorNetwork& net, const designs::DifferenceScheme& ds) {
    validate(net);
    if (ds.n < net.n) {
        throw std::invalid_argument("ds_decoupling: difference scheme has " + std::to_string(ds.n) +
                                    " rows, need " + std::to_string(net.n));
    }
    auto trimmed = ds;
    trimmed.entries.resize(static_cast<std::size_t>(net.n));
    trimmed.n = net.n;
    return phase_scheme_from_ds(trimmed);
}

FourierDecoupling fourier_decoupling(int n) {
    if (n < 1) {
        throw std::invalid_argument("fourier_decoupling: need at least one oscillator");
    }
    FourierDecoupling out;
    out.scheme.n = n;
    out.scheme.N = n;
    out.scheme.phases.resize(n, n);
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            out.scheme.phases(k, j) = root_of_unity(static_cast<long long>(j) * k, n);
        }
    }
    out.scheme.times = uniform_times(n);
    out.min_rotation_angle = 2.0 * std::numbers::pi / n;
    return out;
}

PhaseScheme clique_recoupling(const OscillatorNetwork& net, const std::vector<std::vector<int>>& partition,
                              const designs::DifferenceScheme& ds, const std::vector<int>& node_signs) {
    validate(net);
    std::vector<int> clique_of(static_cast<std::size_t>(net.n), -1);
    for (std::size_t c = 0; c < partition.size(); ++c) {
        if (partition[c].empty()) {
            throw std::invalid_argument("clique_recoupling: empty clique");
        }
        for (int v : partition[c]) {
            if (v < 0 || v >= net.n) {
                throw std::invalid_argument("clique_recoupling: node index out of range");
            }
            if (clique_of[static_cast<std::size_t>(v)] >= 0) {
                throw std::invalid_argument("clique_recoupling: node " + std::to_string(v) + " in two cliques");
            }
            clique_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
        }
    }
    for (int v = 0; v < net.n; ++v) {
        if (clique_of[static_cast<std::size_t>(v)] < 0) {
            throw std::invalid_argument("clique_recoupling: node " + std::to_string(v) + " not covered");
        }
    }
    if (ds.n < static_cast<int>(partition.size())) {
        throw std::invalid_argument("clique_recoupling: difference scheme has too few rows");
    }
    if (!node_signs.empty() && static_cast<int>(node_signs.size()) != net.n) {
        throw std::invalid_argument("clique_recoupling: need one sign per node");
    }
    const PhaseScheme rows = phase_scheme_from_ds(ds);
    PhaseScheme out;
    out.n = net.n;
    out.N = ds.N;
    out.times = rows.times;
    out.phases.resize(net.n, ds.N);
    for (int v = 0; v < net.n; ++v) {
        double sign = 1.0;
        if (!node_signs.empty()) {
            const int s = node_signs[static_cast<std::size_t>(v)];
            if (s != 1 && s != -1) {
                throw std::invalid_argument("clique_recoupling: signs must be +1 or -1");
            }
            sign = s;
        }
        out.phases.row(v) = sign * rows.phases.row(clique_of[static_cast<std::size_t>(v)]);
    }
    return out;
}

PhaseScheme fourier_inversion(int n) {
    if (n < 2) {
        throw std::invalid_argument("fourier_inversion: need at least two oscillators");
    }
    PhaseScheme ps;
    ps.n = n;
    ps.N = n - 1;
    ps.phases.resize(n, n - 1);
    for (int k = 1; k <= n; ++k) {
        for (int j = 1; j < n; ++j) {
            ps.phases(k - 1, j - 1) = root_of_unity(static_cast<long long>(j) * k, n);
        }
    }
    ps.times = uniform_times(n - 1);
    return ps;
}

netham::SuBasis ladder_basis(int d) {
    const auto gm = netham::gell_mann_basis(d);
    netham::SuBasis out;
    out.d = d;
    const Complex i(0.0, 1.0);
    std::vector<CMatrix> ys;
    for (int r = 1; r < d; ++r) {
        CMatrix X = CMatrix::Zero(d, d);
        X(r, r - 1) = 1.0;
        X(r - 1, r) = 1.0;
        CMatrix Y = CMatrix::Zero(d, d);
        Y(r, r - 1) = i;
        Y(r - 1, r) = -i;
        out.sigma.push_back(std::move(X));
        ys.push_back(std::move(Y));
    }
    out.sigma.insert(out.sigma.end(), ys.begin(), ys.end());
    const auto ladder_count = out.sigma.size();
    for (const auto& s : gm.sigma) {
        bool duplicate = false;
        for (std::size_t t = 0; t < ladder_count; ++t) {
            if ((s - out.sigma[t]).norm() < 1e-12) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            out.sigma.push_back(s);
        }
    }
    netham::check_su_basis(out);
    return out;
}

RMatrix harmonic_j_matrix(int n, int d) {
    if (n < 2 || d < 2) {
        throw std::invalid_argument("harmonic_j_matrix: need n >= 2 and d >= 2");
    }
    const int m = d * d - 1;
    RMatrix A = RMatrix::Zero(m, m);
    for (int r = 1; r < d; ++r) {
        for (int s = 1; s < d; ++s) {
            const double w = std::sqrt(static_cast<double>(r) * s);
            A(r - 1, s - 1) = w;                  // |phi><phi| on X_r
            A(d - 1 + r - 1, d - 1 + s - 1) = w;  // |psi><psi| on Y_r
        }
    }
    RMatrix M = RMatrix::Ones(n, n) - RMatrix::Identity(n, n);
    RMatrix J(n * m, n * m);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            J.block(k * m, l * m, m, m) = M(k, l) * A;
        }
    }
    return J;
}

netham::PairHamiltonian harmonic_pair_model(int n, int d) {
    netham::PairHamiltonian model;
    model.n = n;
    model.d = d;
    model.J = 0.25 * harmonic_j_matrix(n, d);
    model.r = RVector::Zero(n * model.m());
    return model;
}

GramSynthesisReport gram_synthesis_report(const RMatrix& T) {
    if (T.rows() != T.cols() || T.rows() < 1) {
        throw std::invalid_argument("gram_synthesis_report: T must be square and non-empty");
    }
    if ((T - T.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("gram_synthesis_report: T must be symmetric");
    }
    const int n = static_cast<int>(T.rows());
    RMatrix off = T;
    off.diagonal().setZero();
    if (off.cwiseAbs().maxCoeff() > 1.0 + 1e-12) {
        throw std::invalid_argument("gram_synthesis_report: entries must lie in [-1, 1]");
    }
    GramSynthesisReport report;
    const RVector spec = netham::eigvals_sym(off);
    report.lower = std::max(0.0, -spec(spec.size() - 1));

    bool signed_pattern = true;
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            const double v = off(k, l);
            signed_pattern = signed_pattern && (v == 0.0 || v == 1.0 || v == -1.0);
        }
    }
    if (!signed_pattern) {
        report.note = "no constructive schedule for targets outside {0, +1, -1}; only the eigenvalue bound applies";
        return report;
    }
    const auto index = graphcolor::weighted_chromatic_index(off);
    report.has_upper = true;
    report.upper = index.value;
    report.upper_exact = index.exact;

    const auto support = graphcolor::threshold_graph(off, 0.5);
    const auto coloring = graphcolor::edge_coloring(support);
    OscillatorNetwork shape{n, 2, RMatrix::Zero(n, n)};
    auto make_step = [&](int color, const std::vector<std::pair<int, int>>& pairs) {
        SynthesisStep step;
        step.color = color;
        step.node_signs.assign(static_cast<std::size_t>(n), 1);
        std::vector<bool> covered(static_cast<std::size_t>(n), false);
        for (const auto& [k, l] : pairs) {
            step.partition.push_back({k, l});
            covered[static_cast<std::size_t>(k)] = covered[static_cast<std::size_t>(l)] = true;
            if (off(k, l) < 0.0) {
                step.node_signs[static_cast<std::size_t>(l)] = -1;
            }
        }
        for (int v = 0; v < n; ++v) {
            if (!covered[static_cast<std::size_t>(v)]) {
                step.partition.push_back({v});
            }
        }
        const int cliques = static_cast<int>(step.partition.size());
        const auto ds = designs::cyclic_difference_scheme(smallest_prime_at_least(cliques), cliques);
        step.scheme = clique_recoupling(shape, step.partition, ds, step.node_signs);
        return step;
    };
    if (support.edges.empty()) {
        report.schedule.push_back(make_step(0, {}));
        report.note = "no couplings to keep; the single step decouples everything";
        return report;
    }
    for (int c = 0; c < coloring.count; ++c) {
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t e = 0; e < support.edges.size(); ++e) {
            if (coloring.colors[e] == c) {
                pairs.push_back(support.edges[e]);
            }
        }
        report.schedule.push_back(make_step(c, pairs));
    }
    report.note = "each step keeps one color class of couplings and lasts one unit of time";
    return report;
}

CMatrix schedule_coupling(const OscillatorNetwork& net, const std::vector<SynthesisStep>& schedule) {
    CMatrix total = CMatrix::Zero(net.n, net.n);
    for (const auto& step : schedule) {
        total += phase_average(net, step.scheme).effective_coupling;
    }
    return total;
}

}  // namespace pulseforge::harmonic
