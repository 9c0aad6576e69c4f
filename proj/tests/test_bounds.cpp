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

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "pulseforge/bounds.hpp"
#include "pulseforge/netham.hpp"

namespace bd = pulseforge::bounds;
namespace nh = pulseforge::netham;
using pulseforge::RMatrix;
using pulseforge::RVector;

namespace {

RVector vec(std::initializer_list<double> v) {
    RVector out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) {
        out(i++) = x;
    }
    return out;
}

RMatrix random_orthogonal(int m, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    RMatrix A(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            A(i, j) = g(rng);
        }
    }
    Eigen::HouseholderQR<RMatrix> qr(A);
    return qr.householderQ();
}

// Ratio of descending partial sums computed from scratch with std::sort.
double reference_tau(RVector x, RVector y) {
    std::sort(x.data(), x.data() + x.size(), std::greater<>());
    std::sort(y.data(), y.data() + y.size(), std::greater<>());
    double best = 0.0;
    double sx = 0.0;
    double sy = 0.0;
    for (Eigen::Index k = 0; k + 1 < x.size(); ++k) {
        sx += x(k);
        sy += y(k);
        if (sy > 1e-12) {
            best = std::max(best, sx / sy);
        }
    }
    return best;
}

}  // namespace

TEST_CASE("majorization examples") {
    CHECK(bd::majorizes(vec({1, 0, -1}), vec({2, 0, -2})));
    CHECK(bd::majorizes(vec({2, 0, -2}), vec({2, 0, -2})));
    CHECK_FALSE(bd::majorizes(vec({2, 0, -2}), vec({1, 0, -1})));
    CHECK_FALSE(bd::majorizes(vec({1, 0, -1}), vec({1, 0, 0})));
    CHECK(bd::majorizes(vec({-1, 1, 0}), vec({0, -2, 2})));
    CHECK_THROWS_AS(bd::majorizes(vec({1, -1}), vec({1, 0, -1})), std::invalid_argument);
}

TEST_CASE("tau_min examples") {
    const auto J = nh::random_model(3, 2, 1).J;
    CHECK(*bd::tau_min(J, J, 3).tau == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(*bd::tau_min(2.0 * J, J, 3).tau == doctest::Approx(2.0).epsilon(1e-12));

    const auto zz = nh::complete_network(4, 2, 2).J;
    // Spectrum {3, 0 x 8, -1 x 3}: partial sums of -J over J peak at k = 11.
    RVector spec = RVector::Zero(12);
    spec(0) = 3;
    spec(9) = spec(10) = spec(11) = -1;
    CHECK(reference_tau(-spec, spec) == doctest::Approx(3.0));
    const auto b = bd::tau_min(-zz, zz, 3);
    REQUIRE(b.tau.has_value());
    CHECK(*b.tau == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(b.lower_bound);
}

TEST_CASE("tau_min reports infeasibility and rejects malformed input") {
    // y has a zero leading partial sum while x does not.
    const auto b = bd::tau_min_spectra(vec({1, 0, -1}), vec({0, 0, 0}));
    CHECK_FALSE(b.tau.has_value());
    CHECK_THROWS_AS(bd::tau_min_spectra(vec({1, 0, 0}), vec({1, 0, -1})), std::invalid_argument);
    auto J = nh::random_model(2, 2, 3).J;
    auto bad = J;
    bad(0, 0) = 1.0;
    CHECK_THROWS_AS(bd::tau_min(bad, J, 3), std::invalid_argument);
}

TEST_CASE("tau_min matches the sorted partial-sum oracle") {
    for (int seed = 0; seed < 20; ++seed) {
        const auto Jt = nh::random_model(3, 2, 100 + seed).J;
        const auto J = nh::random_model(3, 2, 200 + seed).J;
        const auto b = bd::tau_min(Jt, J, 3);
        REQUIRE(b.tau.has_value());
        CHECK(*b.tau == doctest::Approx(reference_tau(nh::eigvals_sym(Jt), nh::eigvals_sym(J))).epsilon(1e-10));
    }
}

TEST_CASE("tau_min is the majorization threshold") {
    for (int seed = 0; seed < 20; ++seed) {
        const RVector x = nh::eigvals_sym(nh::random_model(3, 2, 300 + seed).J);
        const RVector y = nh::eigvals_sym(nh::random_model(3, 2, 400 + seed).J);
        const double tau = *bd::tau_min_spectra(x, y).tau;
        CHECK(bd::majorizes(x, tau * (1 + 1e-6) * y));
        CHECK_FALSE(bd::majorizes(x, tau * (1 - 1e-6) * y, 0.0));
    }
}

TEST_CASE("sum rule: Spec(A+B) is majorized by Spec(A)+Spec(B)") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 30; ++trial) {
        RMatrix A(6, 6);
        RMatrix B(6, 6);
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) {
                A(i, j) = g(rng);
                B(i, j) = g(rng);
            }
        }
        A = (A + A.transpose()).eval();
        B = (B + B.transpose()).eval();
        const RVector lhs = nh::eigvals_sym(RMatrix(A + B));
        const RVector rhs = nh::eigvals_sym(A) + nh::eigvals_sym(B);
        CHECK(bd::majorizes(lhs, rhs));
    }
}

TEST_CASE("mixing by local rotations stays within the scaled bound") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3;
        const int m = 3;
        const auto J = nh::random_model(n, 2, 500 + trial).J;
        const double tau = 0.5 + 2.0 * unit(rng);
        RMatrix Jt = RMatrix::Zero(J.rows(), J.cols());
        std::vector<double> w(4);
        double total = 0.0;
        for (double& x : w) {
            x = unit(rng) + 0.01;
            total += x;
        }
        for (double x : w) {
            RMatrix U = RMatrix::Zero(n * m, n * m);
            for (int k = 0; k < n; ++k) {
                U.block(k * m, k * m, m, m) = random_orthogonal(m, rng);
            }
            Jt += tau * (x / total) * U * J * U.transpose();
        }
        const auto b = bd::tau_min(Jt, J, m);
        REQUIRE(b.tau.has_value());
        CHECK(*b.tau <= tau * (1 + 1e-6));
    }
}

TEST_CASE("rescaled bounds") {
    const auto Jt = nh::random_model(3, 2, 5).J;
    const auto J = nh::random_model(3, 2, 6).J;
    const RMatrix ones = RMatrix::Ones(3, 3);
    CHECK(*bd::tau_min_rescaled(Jt, J, ones, 3).tau == doctest::Approx(*bd::tau_min(Jt, J, 3).tau));
    CHECK(*bd::tau_min_rescaled(Jt, J, RMatrix::Zero(3, 3), 3).tau == 0.0);
    CHECK_THROWS_AS(bd::tau_min_rescaled(Jt, J, RMatrix::Ones(2, 2), 3), std::invalid_argument);

    for (int n = 3; n <= 6; ++n) {
        const auto zz = nh::complete_network(n, 2, 2).J;
        const auto search = bd::rescaled_search(-zz, zz, 3, 100);
        CHECK(search.candidates == 101);
        CHECK(search.rescaled_max >= n - 1 - 1e-9);
        CHECK(search.rescaled_max >= *bd::tau_min(-zz, zz, 3).tau - 1e-12);
        CHECK(*bd::tau_min_rescaled(-zz, zz, search.S_argmax, 3).tau == doctest::Approx(search.rescaled_max));
    }
}

TEST_CASE("inversion lower bound") {
    for (int n = 2; n <= 6; ++n) {
        for (int alpha = 0; alpha < 3; ++alpha) {
            CHECK(bd::inversion_lower_bound(nh::complete_network(n, 2, alpha).J) ==
                  doctest::Approx(n - 1).epsilon(1e-12));
        }
    }
    CHECK(bd::inversion_lower_bound(nh::complete_network(2, 2, 0, 0.37).J) == doctest::Approx(1.0));
    CHECK_THROWS_AS(bd::inversion_lower_bound(RMatrix::Zero(6, 6)), std::invalid_argument);

    for (int seed = 0; seed < 50; ++seed) {
        const int n = 2 + seed % 4;
        const int d = 2 + seed % 2;
        const auto J = nh::random_model(n, d, 600 + seed).J;
        const double lb = bd::inversion_lower_bound(J);
        const RVector s = nh::eigvals_sym(J);
        CHECK((lb >= 1.0) == (s(0) >= -s(s.size() - 1)));
        CHECK(lb <= *bd::tau_min(-J, J, d * d - 1).tau + 1e-9);
    }
}

TEST_CASE("Hamiltonian spectrum bound") {
    const auto m = nh::random_model(3, 2, 2);
    CHECK(*bd::hamiltonian_spectrum_bound(m, m).tau == doctest::Approx(1.0));
    auto neg = m;
    neg.J = -m.J;
    neg.r = -m.r;
    const auto b = bd::hamiltonian_spectrum_bound(neg, m);
    REQUIRE(b.tau.has_value());
    CHECK(*b.tau >= 1.0 - 1e-12);
}
