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

#include "pulseforge/tensor.hpp"

#include <stdexcept>

namespace pulseforge::tensor {

namespace {

std::vector<long long> strides(const std::vector<int>& dims) {
    std::vector<long long> out(dims.size(), 1);
    for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k) + 1] * dims[static_cast<std::size_t>(k) + 1];
    }
    return out;
}

}  // namespace

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

void add_embedded(CMatrix& H, const CMatrix& op, const std::vector<int>& slots, const std::vector<int>& dims) {
    const auto stride = strides(dims);
    long long dim = dims.empty() ? 1 : stride.front() * dims.front();
    long long sub = 1;
    for (int s : slots) {
        if (s < 0 || s >= static_cast<int>(dims.size())) {
            throw std::out_of_range("add_embedded: slot out of range");
        }
        sub *= dims[static_cast<std::size_t>(s)];
    }
    if (H.rows() != dim || H.cols() != dim || op.rows() != sub || op.cols() != sub) {
        throw std::invalid_argument("add_embedded: shape mismatch");
    }
    // Sub-index digits: slots[0] is the most significant.
    std::vector<long long> sub_stride(slots.size(), 1);
    for (int t = static_cast<int>(slots.size()) - 2; t >= 0; --t) {
        sub_stride[static_cast<std::size_t>(t)] =
            sub_stride[static_cast<std::size_t>(t) + 1] * dims[static_cast<std::size_t>(slots[static_cast<std::size_t>(t) + 1])];
    }
    for (long long i = 0; i < dim; ++i) {
        long long ri = 0;
        long long base = i;
        for (std::size_t t = 0; t < slots.size(); ++t) {
            const auto s = static_cast<std::size_t>(slots[t]);
            const long long digit = (i / stride[s]) % dims[s];
            ri += digit * sub_stride[t];
            base -= digit * stride[s];
        }
        for (long long cj = 0; cj < sub; ++cj) {
            const Complex v = op(ri, cj);
            if (v == Complex(0.0, 0.0)) {
                continue;
            }
            long long j = base;
            for (std::size_t t = 0; t < slots.size(); ++t) {
                const auto s = static_cast<std::size_t>(slots[t]);
                j += ((cj / sub_stride[t]) % dims[s]) * stride[s];
            }
            H(i, j) += v;
        }
    }
}

CMatrix conjugate_slot(const CMatrix& M, const CMatrix& A, int slot, const std::vector<int>& dims) {
    const auto stride = strides(dims);
    const auto s = static_cast<std::size_t>(slot);
    const int d = dims[s];
    const long long dim = M.rows();
    const long long step = stride[s];
    // Left multiply by (1 x A^dag x 1), then right multiply by (1 x A x 1).
    CMatrix left = CMatrix::Zero(dim, dim);
    const CMatrix Ad = A.adjoint();
    for (long long i = 0; i < dim; ++i) {
        const int di = static_cast<int>((i / step) % d);
        const long long base = i - di * step;
        for (int c = 0; c < d; ++c) {
            const Complex v = Ad(di, c);
            if (v != Complex(0.0, 0.0)) {
                left.row(i) += v * M.row(base + c * step);
            }
        }
    }
    CMatrix out = CMatrix::Zero(dim, dim);
    for (long long j = 0; j < dim; ++j) {
        const int dj = static_cast<int>((j / step) % d);
        const long long base = j - dj * step;
        for (int c = 0; c < d; ++c) {
            const Complex v = A(c, dj);
            if (v != Complex(0.0, 0.0)) {
                out.col(j) += v * left.col(base + c * step);
            }
        }
    }
    return out;
}

}  // namespace pulseforge::tensor
