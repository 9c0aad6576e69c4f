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

#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pulseforge/gf.hpp"

using pulseforge::gf::FieldElement;
using pulseforge::gf::GaloisField;

namespace {

using Poly = std::vector<unsigned>;

// Reference arithmetic on coefficient vectors: schoolbook product followed
// by long division by the modulus.
Poly ref_mul(const Poly& a, const Poly& b, const Poly& modulus, unsigned p) {
    const std::size_t k = modulus.size() - 1;
    std::vector<unsigned> prod(2 * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
    }
    for (std::size_t deg = prod.size() - 1; deg >= k; --deg) {
        const unsigned c = prod[deg];
        if (c != 0) {
            for (std::size_t t = 0; t <= k; ++t) {
                prod[deg - k + t] = (prod[deg - k + t] + p * p - c * modulus[t] % p) % p;
            }
        }
        if (deg == k) {
            break;
        }
    }
    return Poly(prod.begin(), prod.begin() + static_cast<long>(k));
}

Poly to_poly(const GaloisField& f, std::uint32_t a) {
    const auto c = f.coefficients(a);
    return Poly(c.begin(), c.end());
}

// Evaluates a polynomial at every x in GF(p) and reports whether it has a root.
bool has_root(const Poly& poly, unsigned p) {
    for (unsigned x = 0; x < p; ++x) {
        unsigned acc = 0;
        for (std::size_t i = poly.size(); i-- > 0;) {
            acc = (acc * x + poly[i]) % p;
        }
        if (acc == 0) {
            return true;
        }
    }
    return false;
}

const std::vector<std::pair<unsigned, unsigned>> kSmallFields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3},
                                                                 {3, 2}, {2, 4}, {5, 2}, {3, 3}, {7, 2}, {3, 4}};

}  // namespace

TEST_CASE("prime fields") {
    GaloisField f2(2, 1);
    CHECK(f2.order() == 2);
    CHECK(f2.modulus().size() == 2);
    CHECK(f2.modulus().back() == 1);
    CHECK(f2.add(1, 1) == 0);
    CHECK(f2.mul(1, 1) == 1);
}

TEST_CASE("GF(4) modulus and omega") {
    GaloisField f4(2, 2);
    CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
    // x^2 + x + 1 is the only quadratic over GF(2) without a root.
    int rootless = 0;
    for (unsigned c0 = 0; c0 < 2; ++c0) {
        for (unsigned c1 = 0; c1 < 2; ++c1) {
            rootless += has_root({c0, c1, 1}, 2) ? 0 : 1;
        }
    }
    CHECK(rootless == 1);

    const FieldElement omega(f4, 2);
    const FieldElement one(f4, 1);
    CHECK(omega * omega == one + omega);
    CHECK(omega.pow(3) == one);
    CHECK((omega * omega).value() == 3);
}

TEST_CASE("GF(9) modulus is irreducible and smallest") {
    GaloisField f9(3, 2);
    const Poly mod(f9.modulus().begin(), f9.modulus().end());
    CHECK(mod.size() == 3);
    CHECK(mod[2] == 1);
    CHECK_FALSE(has_root(mod, 3));
    // Every monic quadratic with a smaller coefficient index has a root.
    const unsigned idx = mod[0] + 3 * mod[1];
    for (unsigned i = 0; i < idx; ++i) {
        CHECK(has_root({i % 3, i / 3, 1}, 3));
    }
}

TEST_CASE("irreducibility test agrees with root search in degree 2 and 3") {
    for (unsigned p : {2u, 3u, 5u}) {
        for (unsigned deg : {2u, 3u}) {
            unsigned total = 1;
            for (unsigned t = 0; t < deg; ++t) {
                total *= p;
            }
            for (unsigned i = 0; i < total; ++i) {
                std::vector<std::uint32_t> poly;
                unsigned rest = i;
                for (unsigned t = 0; t < deg; ++t) {
                    poly.push_back(rest % p);
                    rest /= p;
                }
                poly.push_back(1);
                CHECK(pulseforge::gf::is_irreducible(poly, p) == !has_root(Poly(poly.begin(), poly.end()), p));
            }
        }
    }
}

TEST_CASE("enumeration order") {
    GaloisField f2(2, 1);
    auto e2 = pulseforge::gf::enumerate(f2);
    REQUIRE(e2.size() == 2);
    CHECK(e2[0].is_zero());
    CHECK(e2[1].value() == 1);

    GaloisField f4(2, 2);
    auto e4 = pulseforge::gf::enumerate(f4);
    REQUIRE(e4.size() == 4);
    const FieldElement omega(f4, 2);
    CHECK(e4[0].is_zero());
    CHECK(e4[1] == FieldElement(f4, 1));
    CHECK(e4[2] == omega);
    CHECK(e4[3] == omega * omega);

    GaloisField f9(3, 2);
    auto e9 = pulseforge::gf::enumerate(f9);
    std::set<std::vector<std::uint32_t>> distinct;
    for (const auto& e : e9) {
        distinct.insert(e.coeffs());
    }
    CHECK(distinct.size() == 9);
}

TEST_CASE("multiplication matches reference polynomial arithmetic") {
    for (auto [p, k] : kSmallFields) {
        GaloisField f(p, k);
        const Poly mod(f.modulus().begin(), f.modulus().end());
        for (std::uint32_t a = 0; a < f.order(); ++a) {
            for (std::uint32_t b = 0; b < f.order(); ++b) {
                REQUIRE(to_poly(f, f.mul(a, b)) == ref_mul(to_poly(f, a), to_poly(f, b), mod, p));
                Poly sum(k);
                for (unsigned t = 0; t < k; ++t) {
                    sum[t] = (to_poly(f, a)[t] + to_poly(f, b)[t]) % p;
                }
                REQUIRE(to_poly(f, f.add(a, b)) == sum);
            }
        }
    }
}

TEST_CASE("field axioms hold exhaustively") {
    for (auto [p, k] : kSmallFields) {
        GaloisField f(p, k);
        const auto q = f.order();
        CAPTURE(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            REQUIRE(f.add(a, f.neg(a)) == 0);
            REQUIRE(f.sub(a, a) == 0);
            if (a != 0) {
                REQUIRE(f.mul(a, f.inv(a)) == 1);
            }
            for (std::uint32_t b = 0; b < q; ++b) {
                REQUIRE(f.add(a, b) == f.add(b, a));
                REQUIRE(f.mul(a, b) == f.mul(b, a));
                for (std::uint32_t c = 0; c < q; ++c) {
                    REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("multiplicative group is cyclic") {
    for (auto [p, k] : kSmallFields) {
        GaloisField f(p, k);
        const auto g = f.primitive_element();
        std::set<std::uint32_t> powers;
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i + 1 < f.order(); ++i) {
            powers.insert(x);
            x = f.mul(x, g);
        }
        CHECK(powers.size() == f.order() - 1);
        CHECK(f.multiplicative_order(g) == f.order() - 1);
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(GaloisField(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(2, 17), std::invalid_argument);
    CHECK_THROWS_AS(GaloisField(2, std::vector<std::uint32_t>{1, 0, 1}), std::invalid_argument);
    GaloisField f4(2, 2);
    CHECK_THROWS_AS(f4.inv(0), std::domain_error);
    CHECK_THROWS_AS(FieldElement(f4, 0).inverse(), std::domain_error);
    GaloisField f9(3, 2);
    CHECK_THROWS_AS(FieldElement(f4, 1) + FieldElement(f9, 1), std::invalid_argument);
}

TEST_CASE("prime power detection") {
    CHECK(pulseforge::gf::prime_power(81) == std::make_pair(3u, 4u));
    CHECK(pulseforge::gf::prime_power(4) == std::make_pair(2u, 2u));
    CHECK_FALSE(pulseforge::gf::prime_power(6).has_value());
    CHECK_FALSE(pulseforge::gf::prime_power(1).has_value());
}
