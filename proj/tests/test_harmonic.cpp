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

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "pulseforge/bounds.hpp"
#include "pulseforge/designs.hpp"
#include "pulseforge/harmonic.hpp"
#include "pulseforge/netham.hpp"

namespace hm = pulseforge::harmonic;
namespace ds = pulseforge::designs;
namespace nh = pulseforge::netham;
using pulseforge::CMatrix;
using pulseforge::Complex;
using pulseforge::RMatrix;

namespace {

// Ladder operator written out entry by entry.
CMatrix lower_op(int d) {
    CMatrix a = CMatrix::Zero(d, d);
    for (int e = 1; e < d; ++e) {
        a(e - 1, e) = std::sqrt(static_cast<double>(e));
    }
    return a;
}

CMatrix oracle_hc(const RMatrix& C, int d) {
    const int n = static_cast<int>(C.rows());
    std::vector<int> dims(static_cast<std::size_t>(n), d);
    const CMatrix a = lower_op(d);
    const CMatrix ad = a.adjoint();
    long long dim = 1;
    for (int k = 0; k < n; ++k) dim *= d;
    CMatrix H = CMatrix::Zero(dim, dim);
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            if (k == l || C(k, l) == 0.0) continue;
            H += C(k, l) * (oracle::embed(a, k, dims) * oracle::embed(ad, l, dims));
        }
    }
    return H;
}

// sum_j t_j U_j H U_j^dag with U_j = (x)_k diag(m_k[j]^E), built by Kronecker products.
CMatrix oracle_phase_average(const CMatrix& H, const hm::PhaseScheme& ps, int d) {
    CMatrix out = CMatrix::Zero(H.rows(), H.cols());
    for (int j = 0; j < ps.N; ++j) {
        std::vector<CMatrix> locals;
        for (int k = 0; k < ps.n; ++k) {
            CMatrix u = CMatrix::Zero(d, d);
            for (int e = 0; e < d; ++e) {
                u(e, e) = std::pow(ps.phases(k, j), e);
            }
            locals.push_back(u);
        }
        const CMatrix U = oracle::product(locals);
        out += ps.times[static_cast<std::size_t>(j)] * (U * H * U.adjoint());
    }
    return out;
}

double rel(const CMatrix& a, const CMatrix& b) {
    return (a - b).norm() / std::max(1.0, b.norm());
}

hm::OscillatorNetwork ones_network(int n, int d) {
    hm::OscillatorNetwork net{n, d, RMatrix::Ones(n, n)};
    net.C.diagonal().setZero();
    return net;
}

}  // namespace

TEST_CASE("build_hc two qubits is the swap of |01> and |10>") {
    hm::OscillatorNetwork net{2, 2, RMatrix::Zero(2, 2)};
    net.C(0, 1) = net.C(1, 0) = 1.0;
    const CMatrix H = hm::build_hc(net);
    CMatrix expect = CMatrix::Zero(4, 4);
    expect(1, 2) = expect(2, 1) = 1.0;
    CHECK((H - expect).norm() < 1e-14);
}

TEST_CASE("build_hc matches the explicit ladder sum") {
    for (int n = 2; n <= 4; ++n) {
        for (int d = 2; d <= 4; ++d) {
            if (n == 4 && d == 4) continue;
            const auto net = hm::random_network(n, d, 100 + 7 * n + d);
            const CMatrix H = hm::build_hc(net);
            CHECK(rel(H, oracle_hc(net.C, d)) < 1e-13);
            CHECK((H - H.adjoint()).norm() < 1e-13);
        }
    }
    hm::OscillatorNetwork zero{3, 3, RMatrix::Zero(3, 3)};
    CHECK(hm::build_hc(zero).norm() == 0.0);
}

TEST_CASE("annihilation lowers Fock states") {
    const CMatrix a = hm::annihilation(4);
    CHECK((a - lower_op(4)).norm() < 1e-15);
    // [a, a^dag] = 1 away from the truncation edge
    const CMatrix comm = a * a.adjoint() - a.adjoint() * a;
    for (int e = 0; e < 3; ++e) {
        CHECK(std::abs(comm(e, e) - 1.0) < 1e-12);
    }
}

TEST_CASE("network and scheme validation") {
    hm::OscillatorNetwork bad{2, 2, RMatrix::Zero(2, 2)};
    bad.C(0, 1) = 1.0;
    CHECK_THROWS_AS(hm::validate(bad), std::invalid_argument);
    bad.C(1, 0) = 1.0;
    bad.C(0, 0) = 0.5;
    CHECK_THROWS_AS(hm::validate(bad), std::invalid_argument);

    auto ps = hm::fourier_decoupling(3).scheme;
    CHECK_NOTHROW(hm::validate(ps));
    auto scaled = ps;
    scaled.phases(0, 1) *= 1.1;
    CHECK_THROWS_AS(hm::validate(scaled), std::invalid_argument);
    auto badt = ps;
    badt.times[0] += 0.1;
    CHECK_THROWS_AS(hm::validate(badt), std::invalid_argument);
}

TEST_CASE("phase average agrees with explicit conjugation") {
    for (int n = 2; n <= 4; ++n) {
        for (int d = 2; d <= 4; ++d) {
            if (n == 4 && d == 4) continue;
            const auto net = hm::random_network(n, d, 7 * n + d);
            const auto ps = hm::phase_scheme_from_ds(ds::cyclic_difference_scheme(5, n));
            const auto avg = hm::phase_average(net, ps);
            CHECK(avg.path_mismatch < hm::kPathTolerance);
            const CMatrix ref = oracle_phase_average(hm::build_hc(net), ps, d);
            CHECK(rel(avg.hamiltonian, ref) < 1e-12);
            // Random phases, not from a design.
            hm::PhaseScheme rnd{n, 3, CMatrix(n, 3), {0.2, 0.5, 0.3}};
            for (int k = 0; k < n; ++k) {
                for (int j = 0; j < 3; ++j) {
                    rnd.phases(k, j) = std::polar(1.0, 0.37 * (k + 1) * (j + 2) + 0.11 * d);
                }
            }
            const auto avg2 = hm::phase_average(net, rnd);
            CHECK(rel(avg2.hamiltonian, oracle_phase_average(hm::build_hc(net), rnd, d)) < 1e-12);
        }
    }
}

TEST_CASE("Gram matrices are Hermitian positive semidefinite") {
    const auto ps = hm::phase_scheme_from_ds(ds::cyclic_difference_scheme(7, 5));
    for (const CMatrix& G : {hm::gram_matrix(ps), hm::weighted_gram(ps)}) {
        CHECK((G - G.adjoint()).norm() < 1e-12);
        CHECK(nh::eigvals_sym(G).minCoeff() > -1e-12);
    }
    // Orthogonal rows of a difference scheme: weighted Gram is the identity.
    CHECK((hm::weighted_gram(ps) - CMatrix::Identity(5, 5)).norm() < 1e-12);
}

TEST_CASE("identical rows leave H unchanged, orthogonal rows remove it") {
    const auto net = hm::random_network(3, 3, 5);
    hm::PhaseScheme same{3, 4, CMatrix(3, 4), {0.25, 0.25, 0.25, 0.25}};
    for (int j = 0; j < 4; ++j) {
        const Complex z = std::polar(1.0, 0.9 * j);
        for (int k = 0; k < 3; ++k) same.phases(k, j) = z;
    }
    CHECK(rel(hm::phase_average(net, same).hamiltonian, hm::build_hc(net)) < 1e-12);

    const auto dec = hm::ds_decoupling(net, ds::cyclic_difference_scheme(3, 3));
    CHECK(hm::phase_average(net, dec).hamiltonian.norm() < 1e-10);

    auto two = hm::random_network(2, 4, 9);
    CHECK(hm::phase_average(two, hm::fourier_decoupling(2).scheme).hamiltonian.norm() < 1e-10);
}

TEST_CASE("ds_decoupling examples") {
    const auto net2 = hm::random_network(2, 2, 1);
    const auto ps = hm::ds_decoupling(net2, ds::cyclic_difference_scheme(2, 2));
    REQUIRE(ps.N == 2);
    CHECK(std::abs(ps.phases(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(ps.phases(0, 1) - 1.0) < 1e-15);
    CHECK(std::abs(ps.phases(1, 0) - 1.0) < 1e-15);
    CHECK(std::abs(ps.phases(1, 1) + 1.0) < 1e-15);

    const auto net5 = hm::random_network(5, 3, 2);
    const auto ps5 = hm::ds_decoupling(net5, ds::cyclic_difference_scheme(5, 5));
    CHECK(ps5.N == 5);
    CHECK(hm::phase_average(net5, ps5).hamiltonian.norm() < 1e-10);

    // more scheme rows than oscillators are trimmed
    const auto net3 = hm::random_network(3, 2, 3);
    CHECK(hm::ds_decoupling(net3, ds::cyclic_difference_scheme(5, 5)).n == 3);
}

TEST_CASE("fourier decoupling") {
    for (int n = 2; n <= 6; ++n) {
        const auto fd = hm::fourier_decoupling(n);
        CHECK(fd.scheme.N == n);
        CHECK(fd.min_rotation_angle == doctest::Approx(2.0 * std::numbers::pi / n));
        const CMatrix& M = fd.scheme.phases;
        CHECK((M * M.adjoint() - n * CMatrix::Identity(n, n)).norm() < 1e-12);
    }
    const auto net = hm::random_network(3, 3, 4);
    CHECK(hm::phase_average(net, hm::fourier_decoupling(3).scheme).hamiltonian.norm() < 1e-10);
}

TEST_CASE("clique recoupling") {
    const auto net = hm::random_network(4, 2, 11);
    const auto d22 = ds::cyclic_difference_scheme(2, 2);

    const auto one = hm::clique_recoupling(net, {{0, 1, 2, 3}}, ds::cyclic_difference_scheme(2, 1));
    CHECK(rel(hm::phase_average(net, one).hamiltonian, hm::build_hc(net)) < 1e-12);

    const auto two = hm::clique_recoupling(net, {{0, 1}, {2, 3}}, d22);
    const auto avg = hm::phase_average(net, two);
    for (int k = 0; k < 4; ++k) {
        for (int l = 0; l < 4; ++l) {
            if (k == l) continue;
            const bool same = (k < 2) == (l < 2);
            if (same) {
                CHECK(std::abs(avg.effective_coupling(k, l) - net.C(k, l)) < 1e-12);
            } else {
                CHECK(std::abs(avg.effective_coupling(k, l)) < 1e-10);
            }
        }
    }
    RMatrix kept = RMatrix::Zero(4, 4);
    kept(0, 1) = kept(1, 0) = net.C(0, 1);
    kept(2, 3) = kept(3, 2) = net.C(2, 3);
    CHECK(rel(avg.hamiltonian, oracle_hc(kept, 2)) < 1e-10);

    const auto single = hm::clique_recoupling(net, {{0}, {1}, {2}, {3}}, ds::cyclic_difference_scheme(5, 4));
    CHECK(hm::phase_average(net, single).hamiltonian.norm() < 1e-10);

    const auto signed_ps = hm::clique_recoupling(net, {{0, 1, 2, 3}}, ds::cyclic_difference_scheme(2, 1), {1, -1, 1, 1});
    const auto savg = hm::phase_average(net, signed_ps);
    for (int l = 2; l < 4; ++l) {
        CHECK(std::abs(savg.effective_coupling(1, l) + net.C(1, l)) < 1e-12);
    }
    CHECK(std::abs(savg.effective_coupling(2, 3) - net.C(2, 3)) < 1e-12);

    CHECK_THROWS_AS(hm::clique_recoupling(net, {{0, 1}, {1, 2, 3}}, d22), std::invalid_argument);
    CHECK_THROWS_AS(hm::clique_recoupling(net, {{0, 1}, {2}}, d22), std::invalid_argument);
    CHECK_THROWS_AS(hm::clique_recoupling(net, {{0, 1}, {2, 7}}, d22), std::invalid_argument);
    CHECK_THROWS_AS(hm::clique_recoupling(net, {{0}, {1}, {2}, {3}}, d22), std::invalid_argument);
    CHECK_THROWS_AS(hm::clique_recoupling(net, {{0, 1, 2, 3}}, d22, {1, 2, 1, 1}), std::invalid_argument);
}

TEST_CASE("fourier inversion") {
    const auto p2 = hm::fourier_inversion(2);
    REQUIRE(p2.N == 1);
    CHECK(std::abs(p2.phases(0, 0) + 1.0) < 1e-14);
    CHECK(std::abs(p2.phases(1, 0) - 1.0) < 1e-14);

    const auto p5 = hm::fourier_inversion(5);
    const CMatrix G = hm::gram_matrix(p5);
    for (int k = 0; k < 5; ++k) {
        for (int l = 0; l < 5; ++l) {
            CHECK(std::abs(G(k, l) - (k == l ? 4.0 : -1.0)) < 1e-12);
        }
    }

    for (int n = 2; n <= 5; ++n) {
        for (int d = 3; d <= 4; ++d) {
            if (n == 5 && d == 4) continue;
            const auto net = hm::random_network(n, d, 31 * n + d);
            const auto avg = hm::phase_average(net, hm::fourier_inversion(n));
            CHECK(rel((n - 1) * avg.hamiltonian, -hm::build_hc(net)) < 1e-10);
        }
    }
}

TEST_CASE("ladder basis is a valid su(d) basis") {
    for (int d = 2; d <= 4; ++d) {
        const auto b = hm::ladder_basis(d);
        CHECK(b.size() == d * d - 1);
        CHECK_NOTHROW(nh::check_su_basis(b));
    }
}

TEST_CASE("harmonic J matrix and inversion bound") {
    for (int n = 2; n <= 5; ++n) {
        for (int d = 2; d <= 4; ++d) {
            const RMatrix J = hm::harmonic_j_matrix(n, d);
            const int m = d * d - 1;
            CHECK(J.rows() == n * m);
            CHECK_NOTHROW(nh::validate_j_matrix(J, m));
            const auto t = pulseforge::bounds::tau_min(-J, J, m);
            REQUIRE(t.tau.has_value());
            CHECK(*t.tau == doctest::Approx(n - 1).epsilon(1e-9));
            // A' has eigenvalue a = d(d-1)/2 twice, so J has 2(n-1) copies of -a
            const double a = d * (d - 1) / 2.0;
            const auto ev = nh::eigvals_sym(J);
            int hits = 0;
            for (Eigen::Index i = 0; i < ev.size(); ++i) {
                if (std::abs(ev(i) + a) < 1e-9) ++hits;
            }
            CHECK(hits == 2 * (n - 1));
        }
    }
}

TEST_CASE("harmonic pair model reproduces H_C") {
    for (int n = 2; n <= 3; ++n) {
        for (int d = 2; d <= 4; ++d) {
            const auto model = hm::harmonic_pair_model(n, d);
            CHECK_NOTHROW(nh::validate(model));
            const CMatrix H = oracle::assemble_h(model, hm::ladder_basis(d));
            CHECK(rel(H, oracle_hc(ones_network(n, d).C, d)) < 1e-12);
        }
    }
}

TEST_CASE("gram synthesis report") {
    SUBCASE("all -1 needs n - 1") {
        for (int n = 2; n <= 5; ++n) {
            RMatrix T = -RMatrix::Ones(n, n);
            T.diagonal().setZero();
            const auto rep = hm::gram_synthesis_report(T);
            CHECK(rep.lower == doctest::Approx(n - 1));
            REQUIRE(rep.has_upper);
            CHECK(rep.upper >= rep.lower - 1e-9);
        }
    }
    SUBCASE("zero target decouples in one step") {
        const auto rep = hm::gram_synthesis_report(RMatrix::Zero(4, 4));
        CHECK(rep.lower == doctest::Approx(0.0));
        REQUIRE(rep.schedule.size() == 1);
        const auto net = hm::random_network(4, 2, 3);
        CHECK(hm::schedule_coupling(net, rep.schedule).norm() < 1e-10);
    }
    SUBCASE("signed K4 pattern") {
        RMatrix T(4, 4);
        T << 0, 1, -1, 1,
             1, 0, 1, -1,
             -1, 1, 0, 1,
             1, -1, 1, 0;
        const auto rep = hm::gram_synthesis_report(T);
        REQUIRE(rep.has_upper);
        CHECK(rep.upper == doctest::Approx(3.0));
        CHECK(rep.schedule.size() == 3);
        CHECK(rep.lower <= rep.upper + 1e-9);
        const auto net = hm::random_network(4, 2, 21);
        const CMatrix eff = hm::schedule_coupling(net, rep.schedule);
        CHECK((eff - net.C.cwiseProduct(T).cast<Complex>()).norm() < 1e-10);
        // and on the level of Hamiltonians
        CMatrix sum = CMatrix::Zero(16, 16);
        for (const auto& step : rep.schedule) sum += hm::phase_average(net, step.scheme).hamiltonian;
        CHECK(rel(sum, oracle_hc(net.C.cwiseProduct(T), 2)) < 1e-10);
    }
    SUBCASE("random sign patterns") {
        for (int seed = 0; seed < 10; ++seed) {
            const auto net = hm::random_network(5, 2, 500 + seed);
            RMatrix T = RMatrix::Zero(5, 5);
            for (int k = 0; k < 5; ++k) {
                for (int l = k + 1; l < 5; ++l) {
                    T(k, l) = T(l, k) = static_cast<double>((k * 3 + l * 5 + seed) % 3 - 1);
                }
            }
            const auto rep = hm::gram_synthesis_report(T);
            REQUIRE(rep.has_upper);
            CHECK(rep.lower <= rep.upper + 1e-9);
            const CMatrix eff = hm::schedule_coupling(net, rep.schedule);
            CHECK((eff - net.C.cwiseProduct(T).cast<Complex>()).norm() < 1e-10);
        }
    }
    SUBCASE("fractional entries give no upper bound") {
        RMatrix T = RMatrix::Zero(3, 3);
        T(0, 1) = T(1, 0) = 0.5;
        const auto rep = hm::gram_synthesis_report(T);
        CHECK_FALSE(rep.has_upper);
        CHECK_FALSE(rep.note.empty());
    }
    SUBCASE("invalid targets") {
        RMatrix T = RMatrix::Zero(3, 3);
        T(0, 1) = T(1, 0) = 1.5;
        CHECK_THROWS_AS(hm::gram_synthesis_report(T), std::invalid_argument);
        RMatrix A = RMatrix::Zero(3, 3);
        A(0, 1) = 1.0;
        CHECK_THROWS_AS(hm::gram_synthesis_report(A), std::invalid_argument);
    }
}
