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

#include "pulseforge/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace pulseforge::bounds {

namespace {

RVector descending(const RVector& v) {
    RVector out = v;
    std::sort(out.data(), out.data() + out.size(), std::greater<>());
    return out;
}

}  // namespace

bool majorizes(const RVector& x, const RVector& y, double tol) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("majorizes: length mismatch");
    }
    const RVector xs = descending(x);
    const RVector ys = descending(y);
    double px = 0.0;
    double py = 0.0;
    for (Eigen::Index k = 0; k + 1 < xs.size(); ++k) {
        px += xs(k);
        py += ys(k);
        if (px > py + tol) {
            return false;
        }
    }
    return std::abs(xs.sum() - ys.sum()) <= tol;
}

TauBound tau_min_spectra(const RVector& x, const RVector& y, double tol) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("tau_min: spectra have different lengths");
    }
    const RVector xs = descending(x);
    const RVector ys = descending(y);
    const double scale = std::max({1.0, xs.cwiseAbs().sum(), ys.cwiseAbs().sum()});
    if (std::abs(xs.sum()) > tol * scale || std::abs(ys.sum()) > tol * scale) {
        throw std::invalid_argument("tau_min: spectra must be traceless");
    }
    TauBound out;
    out.tau = 0.0;
    double num = 0.0;
    double den = 0.0;
    for (Eigen::Index k = 0; k + 1 < xs.size(); ++k) {
        num += xs(k);
        den += ys(k);
        // Descending partial sums of a zero-sum vector are nonnegative.
        if (den <= tol * scale) {
            if (num <= tol * scale) {
                continue;
            }
            out.tau.reset();
            out.binding_k = static_cast<int>(k) + 1;
            return out;
        }
        const double ratio = num / den;
        if (ratio > *out.tau) {
            out.tau = ratio;
            out.binding_k = static_cast<int>(k) + 1;
        }
    }
    return out;
}

TauBound tau_min(const RMatrix& Jtilde, const RMatrix& J, int block) {
    netham::validate_j_matrix(Jtilde, block, 1e-9);
    netham::validate_j_matrix(J, block, 1e-9);
    if (Jtilde.rows() != J.rows()) {
        throw std::invalid_argument("tau_min: J-matrices have different sizes");
    }
    return tau_min_spectra(netham::eigvals_sym(Jtilde), netham::eigvals_sym(J));
}

RMatrix rescale(const RMatrix& J, const RMatrix& S, int block) {
    if (block <= 0 || J.rows() % block != 0) {
        throw std::invalid_argument("rescale: J size is not a multiple of the block size");
    }
    const auto n = J.rows() / block;
    if (S.rows() != n || S.cols() != n) {
        throw std::invalid_argument("rescale: S must be n x n");
    }
    if ((S - S.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("rescale: S must be symmetric");
    }
    RMatrix out = J;
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = 0; l < n; ++l) {
            out.block(k * block, l * block, block, block) *= S(k, l);
        }
    }
    return out;
}

TauBound tau_min_rescaled(const RMatrix& Jtilde, const RMatrix& J, const RMatrix& S, int block) {
    return tau_min(rescale(Jtilde, S, block), rescale(J, S, block), block);
}

RescaledSearch rescaled_search(const RMatrix& Jtilde, const RMatrix& J, int block, int trials,
                               const std::vector<RMatrix>& candidates, std::uint64_t seed) {
    if (block <= 0 || J.rows() % block != 0) {
        throw std::invalid_argument("rescaled_search: J size is not a multiple of the block size");
    }
    const auto n = J.rows() / block;
    std::vector<RMatrix> pool;
    pool.push_back(RMatrix::Ones(n, n));
    pool.insert(pool.end(), candidates.begin(), candidates.end());
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    for (int t = 0; t < trials; ++t) {
        RMatrix S(n, n);
        for (Eigen::Index k = 0; k < n; ++k) {
            for (Eigen::Index l = k; l < n; ++l) {
                const double v = coin(rng) ? 1.0 : -1.0;
                S(k, l) = v;
                S(l, k) = v;
            }
        }
        pool.push_back(std::move(S));
    }
    RescaledSearch out;
    out.S_argmax = pool.front();
    bool found = false;
    for (const auto& S : pool) {
        const auto bound = tau_min_rescaled(Jtilde, J, S, block);
        ++out.candidates;
        if (bound.tau && (!found || *bound.tau > out.rescaled_max)) {
            out.rescaled_max = *bound.tau;
            out.S_argmax = S;
            found = true;
        }
    }
    return out;
}

double inversion_lower_bound(const RMatrix& J) {
    if (J.rows() != J.cols() || J.size() == 0) {
        throw std::invalid_argument("inversion_lower_bound: J must be square and non-empty");
    }
    if (J.cwiseAbs().maxCoeff() == 0.0) {
        throw std::invalid_argument("inversion_lower_bound: J is zero");
    }
    const RVector spec = netham::eigvals_sym(J);
    const double r = spec(0);
    const double q = spec(spec.size() - 1);
    if (!(q < 0.0)) {
        throw std::invalid_argument("inversion_lower_bound: J has no negative eigenvalue");
    }
    return r / (-q);
}

TauBound hamiltonian_spectrum_bound(const netham::PairHamiltonian& target, const netham::PairHamiltonian& given) {
    return tau_min_spectra(netham::eigvals_sym(netham::assemble(target)), netham::eigvals_sym(netham::assemble(given)));
}

}  // namespace pulseforge::bounds
