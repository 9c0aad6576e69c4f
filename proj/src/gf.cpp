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

#include "pulseforge/gf.hpp"

#include <stdexcept>

namespace pulseforge::gf {

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 16;

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // p is prime, so a^(p-2) is the inverse.
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    std::uint32_t e = p - 2;
    while (e > 0) {
        if (e & 1u) {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo the nonzero polynomial b over GF(p).
Poly poly_mod(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * b[i] % p) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_from_index(std::uint64_t index, std::uint32_t p, std::uint32_t len) {
    Poly out(len, 0);
    for (std::uint32_t i = 0; i < len; ++i) {
        out[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return out;
}

}  // namespace

bool is_prime(std::uint64_t v) {
    if (v < 2) {
        return false;
    }
    for (std::uint64_t f = 2; f * f <= v; ++f) {
        if (v % f == 0) {
            return false;
        }
    }
    return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t s) {
    if (s < 2) {
        return std::nullopt;
    }
    std::uint64_t p = 2;
    while (s % p != 0) {
        ++p;
    }
    std::uint32_t k = 0;
    while (s % p == 0) {
        s /= p;
        ++k;
    }
    if (s != 1) {
        return std::nullopt;
    }
    return std::make_pair(static_cast<std::uint32_t>(p), k);
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) {
        return false;
    }
    const std::size_t deg = f.size() - 1;
    if (deg == 1) {
        return true;
    }
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < dd; ++i) {
            count *= p;
        }
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g = poly_from_index(idx, p, static_cast<std::uint32_t>(dd));
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) {
                return false;
            }
        }
    }
    return true;
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k), q_(1) {
    if (!is_prime(p)) {
        throw std::invalid_argument("GaloisField: characteristic " + std::to_string(p) + " is not prime");
    }
    if (k == 0) {
        throw std::invalid_argument("GaloisField: degree must be positive");
    }
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxOrder) {
            throw std::invalid_argument("GaloisField: field order exceeds 2^16");
        }
    }
    q_ = static_cast<std::uint32_t>(q);
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        Poly candidate = poly_from_index(idx, p, k);
        candidate.push_back(1);
        if (is_irreducible(candidate, p)) {
            modulus_ = std::move(candidate);
            break;
        }
    }
    build_tables();
}

GaloisField::GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(0), q_(1), modulus_(std::move(modulus)) {
    if (!is_prime(p)) {
        throw std::invalid_argument("GaloisField: characteristic " + std::to_string(p) + " is not prime");
    }
    if (modulus_.size() < 2 || modulus_.back() != 1) {
        throw std::invalid_argument("GaloisField: modulus must be monic of degree >= 1");
    }
    for (auto c : modulus_) {
        if (c >= p) {
            throw std::invalid_argument("GaloisField: modulus coefficient out of range");
        }
    }
    if (!is_irreducible(modulus_, p)) {
        throw std::invalid_argument("GaloisField: modulus is reducible");
    }
    k_ = static_cast<std::uint32_t>(modulus_.size() - 1);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        q *= p;
        if (q > kMaxOrder) {
            throw std::invalid_argument("GaloisField: field order exceeds 2^16");
        }
    }
    q_ = static_cast<std::uint32_t>(q);
    build_tables();
}

void GaloisField::build_tables() {
    // Find the smallest element of order q-1 using schoolbook multiplication,
    // then switch to log/antilog lookups.
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t rest = q_ - 1;
    for (std::uint64_t f = 2; f * f <= rest; ++f) {
        if (rest % f == 0) {
            prime_factors.push_back(f);
            while (rest % f == 0) {
                rest /= f;
            }
        }
    }
    if (rest > 1) {
        prime_factors.push_back(rest);
    }
    auto slow_pow = [this](std::uint32_t a, std::uint64_t e) {
        std::uint32_t result = 1;
        std::uint32_t base = a;
        while (e > 0) {
            if (e & 1u) {
                result = slow_mul(result, base);
            }
            base = slow_mul(base, base);
            e >>= 1;
        }
        return result;
    };
    std::uint32_t generator = 1;
    for (std::uint32_t g = 1; g < q_; ++g) {
        bool primitive = true;
        for (auto f : prime_factors) {
            if (slow_pow(g, (q_ - 1) / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator = g;
            break;
        }
    }
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::uint32_t acc = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = acc;
        log_[acc] = i;
        acc = slow_mul(acc, generator);
    }
}

void GaloisField::check(std::uint32_t a) const {
    if (a >= q_) {
        throw std::out_of_range("GaloisField: element index out of range");
    }
}

std::uint32_t GaloisField::slow_mul(std::uint32_t a, std::uint32_t b) const {
    const Poly pa = poly_from_index(a, p_, k_);
    const Poly pb = poly_from_index(b, p_, k_);
    Poly prod(2 * k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        for (std::uint32_t j = 0; j < k_; ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p_);
        }
    }
    Poly r = poly_mod(prod, modulus_, p_);
    r.resize(k_, 0);
    return from_coefficients(r);
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const {
    check(a);
    check(b);
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

std::uint32_t GaloisField::neg(std::uint32_t a) const {
    check(a);
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return out;
}

std::uint32_t GaloisField::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0) {
        return 0;
    }
    return exp_[(std::uint64_t{log_[a]} + log_[b]) % (q_ - 1)];
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
    check(a);
    if (a == 0) {
        throw std::domain_error("GaloisField: inverse of zero");
    }
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::uint64_t e) const {
    check(a);
    if (e == 0) {
        return 1;
    }
    if (a == 0) {
        return 0;
    }
    return exp_[(log_[a] * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t GaloisField::multiplicative_order(std::uint32_t a) const {
    check(a);
    if (a == 0) {
        throw std::domain_error("GaloisField: zero has no multiplicative order");
    }
    std::uint32_t order = 1;
    std::uint32_t acc = a;
    while (acc != 1) {
        acc = mul(acc, a);
        ++order;
    }
    return order;
}

std::vector<std::uint32_t> GaloisField::coefficients(std::uint32_t a) const {
    check(a);
    return poly_from_index(a, p_, k_);
}

std::uint32_t GaloisField::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() != k_) {
        throw std::invalid_argument("GaloisField: expected " + std::to_string(k_) + " coefficients");
    }
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (auto c : coeffs) {
        out += (c % p_) * place;
        place *= p_;
    }
    return out;
}

std::string GaloisField::to_string(std::uint32_t a) const {
    const auto c = coefficients(a);
    std::string out;
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (c[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "+";
        }
        if (i == 0) {
            out += std::to_string(c[i]);
        } else {
            if (c[i] != 1) {
                out += std::to_string(c[i]);
            }
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

FieldElement::FieldElement(const GaloisField& field, std::uint32_t value) : field_(&field), value_(value) {
    if (value >= field.order()) {
        throw std::out_of_range("FieldElement: value out of range");
    }
}

const GaloisField& FieldElement::same_field(const FieldElement& o) const {
    if (field_ != o.field_ && !(*field_ == *o.field_)) {
        throw std::invalid_argument("FieldElement: operands belong to different fields");
    }
    return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    return {same_field(o), field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return {same_field(o), field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator-() const { return {*field_, field_->neg(value_)}; }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    return {same_field(o), field_->mul(value_, o.value_)};
}

FieldElement FieldElement::inverse() const { return {*field_, field_->inv(value_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {*field_, field_->pow(value_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const {
    return value_ == o.value_ && (field_ == o.field_ || *field_ == *o.field_);
}

std::vector<FieldElement> enumerate(const GaloisField& field) {
    std::vector<FieldElement> out;
    out.reserve(field.order());
    for (std::uint32_t v = 0; v < field.order(); ++v) {
        out.emplace_back(field, v);
    }
    return out;
}

}  // namespace pulseforge::gf
