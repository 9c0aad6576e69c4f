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
#include <string>
#include <utility>
#include <vector>

namespace pulseforge::gf {

bool is_prime(std::uint64_t v);

/// Returns (p, k) with s = p^k, or nullopt when s is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t s);

/// GF(p^k) realized as GF(p)[x] / (modulus).
///
/// Elements are encoded as integers in [0, q): the coefficient vector
/// (c_0, ..., c_{k-1}) of c_0 + c_1 x + ... maps to sum c_i p^i. This is also
/// the enumeration order, so 0 and 1 come first and, for GF(4), index 2 is
/// the class of x (a root of the modulus) and index 3 is 1 + x.
class GaloisField {
public:
    /// Picks the lexicographically smallest monic irreducible modulus of degree
    /// k, comparing the non-leading coefficients as the integer sum c_i p^i.
    GaloisField(std::uint32_t p, std::uint32_t k);

    /// Uses the given modulus (k+1 coefficients, constant term first).
    GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return k_; }
    std::uint32_t order() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    /// Generator of the multiplicative group (smallest index of order q-1).
    std::uint32_t primitive_element() const { return exp_.empty() ? 1 : exp_[1 % exp_.size()]; }
    std::uint32_t multiplicative_order(std::uint32_t a) const;

    std::vector<std::uint32_t> coefficients(std::uint32_t a) const;
    std::uint32_t from_coefficients(const std::vector<std::uint32_t>& coeffs) const;

    std::string to_string(std::uint32_t a) const;

    bool operator==(const GaloisField& other) const {
        return p_ == other.p_ && modulus_ == other.modulus_;
    }

private:
    void check(std::uint32_t a) const;
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;
    void build_tables();

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, i < q-1
    std::vector<std::uint32_t> log_;  // log_[exp_[i]] = i; log_[0] unused
};

/// Monic polynomial irreducibility over GF(p), coefficients constant term first.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Value type tied to a field. The field must outlive the element.
class FieldElement {
public:
    FieldElement(const GaloisField& field, std::uint32_t value);

    const GaloisField& field() const { return *field_; }
    std::uint32_t value() const { return value_; }
    std::vector<std::uint32_t> coeffs() const { return field_->coefficients(value_); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    bool is_zero() const { return value_ == 0; }
    bool operator==(const FieldElement& o) const;

private:
    const GaloisField& same_field(const FieldElement& o) const;

    const GaloisField* field_;
    std::uint32_t value_;
};

/// All q elements in index order (zero first, then one).
std::vector<FieldElement> enumerate(const GaloisField& field);

}  // namespace pulseforge::gf
