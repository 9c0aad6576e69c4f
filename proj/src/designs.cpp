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

#include "pulseforge/designs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pulseforge/gf.hpp"

namespace pulseforge::designs {

namespace {

constexpr long long kMaxRaoHammingColumns = 100000;
constexpr long long kMaxProductColumns = 1000000;

long long checked_pow(long long base, int e, long long limit, const char* what) {
    long long out = 1;
    for (int i = 0; i < e; ++i) {
        out *= base;
        if (out > limit) {
            throw std::invalid_argument(std::string(what) + ": size exceeds " + std::to_string(limit));
        }
    }
    return out;
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> table, int identity)
    : order_(order), table_(std::move(table)), identity_(identity) {
    if (order <= 0 || table_.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {
        throw std::invalid_argument("FiniteGroup: table size does not match order");
    }
    if (identity < 0 || identity >= order) {
        throw std::invalid_argument("FiniteGroup: identity label out of range");
    }
    for (int v : table_) {
        if (v < 0 || v >= order) {
            throw std::invalid_argument("FiniteGroup: table entry out of range");
        }
    }
    for (int a = 0; a < order; ++a) {
        if (op(identity, a) != a || op(a, identity) != a) {
            throw std::invalid_argument("FiniteGroup: identity label is not neutral");
        }
    }
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            for (int c = 0; c < order; ++c) {
                if (op(op(a, b), c) != op(a, op(b, c))) {
                    throw std::invalid_argument("FiniteGroup: table is not associative");
                }
            }
        }
    }
    inverse_.assign(static_cast<std::size_t>(order), -1);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            if (op(a, b) == identity && op(b, a) == identity) {
                inverse_[static_cast<std::size_t>(a)] = b;
                break;
            }
        }
        if (inverse_[static_cast<std::size_t>(a)] < 0) {
            throw std::invalid_argument("FiniteGroup: element " + std::to_string(a) + " has no inverse");
        }
    }
}

FiniteGroup FiniteGroup::cyclic(int order) {
    std::vector<int> table(static_cast<std::size_t>(order * order));
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            table[static_cast<std::size_t>(a * order + b)] = (a + b) % order;
        }
    }
    return FiniteGroup(order, std::move(table), 0);
}

FiniteGroup FiniteGroup::zd_squared(int d) {
    const int order = d * d;
    std::vector<int> table(static_cast<std::size_t>(order * order));
    for (int x = 0; x < order; ++x) {
        for (int y = 0; y < order; ++y) {
            const int a = (x / d + y / d) % d;
            const int b = (x % d + y % d) % d;
            table[static_cast<std::size_t>(x * order + y)] = a * d + b;
        }
    }
    return FiniteGroup(order, std::move(table), 0);
}

OrthogonalArray rao_hamming_oa(int s, int i) {
    const auto pk = gf::prime_power(static_cast<std::uint64_t>(s > 0 ? s : 0));
    if (!pk) {
        throw std::invalid_argument("rao_hamming_oa: alphabet size " + std::to_string(s) + " is not a prime power");
    }
    if (i < 2) {
        throw std::invalid_argument("rao_hamming_oa: dimension must be at least 2");
    }
    const long long columns = checked_pow(s, i, kMaxRaoHammingColumns, "rao_hamming_oa");
    const gf::GaloisField field(pk->first, pk->second);

    // Vector with index c has coordinate t equal to digit (i-1-t) of c in base s.
    auto coords = [&](long long c) {
        std::vector<std::uint32_t> x(static_cast<std::size_t>(i));
        for (int t = i - 1; t >= 0; --t) {
            x[static_cast<std::size_t>(t)] = static_cast<std::uint32_t>(c % s);
            c /= s;
        }
        return x;
    };

    std::vector<std::vector<std::uint32_t>> rows;
    for (long long c = 1; c < columns; ++c) {
        auto v = coords(c);
        for (auto coord : v) {
            if (coord != 0) {
                if (coord == 1) {
                    rows.push_back(std::move(v));
                }
                break;
            }
        }
    }

    OrthogonalArray oa;
    oa.n = static_cast<int>(rows.size());
    oa.N = static_cast<int>(columns);
    oa.s = s;
    oa.lambda = static_cast<int>(columns / (static_cast<long long>(s) * s));
    oa.entries.assign(rows.size(), std::vector<int>(static_cast<std::size_t>(columns)));
    for (long long c = 0; c < columns; ++c) {
        const auto x = coords(c);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::uint32_t dot = 0;
            for (int t = 0; t < i; ++t) {
                dot = field.add(dot, field.mul(rows[r][static_cast<std::size_t>(t)], x[static_cast<std::size_t>(t)]));
            }
            oa.entries[r][static_cast<std::size_t>(c)] = static_cast<int>(dot) + 1;
        }
    }
    return oa;
}

OrthogonalArray mixed_product_oa(const std::vector<int>& row_levels) {
    if (row_levels.empty()) {
        throw std::invalid_argument("mixed_product_oa: need at least one row");
    }
    long long columns = 1;
    int smax = 0;
    for (int s : row_levels) {
        if (s < 1) {
            throw std::invalid_argument("mixed_product_oa: alphabet sizes must be positive");
        }
        columns *= s;
        if (columns > kMaxProductColumns) {
            throw std::invalid_argument("product_oa: size exceeds " + std::to_string(kMaxProductColumns));
        }
        smax = std::max(smax, s);
    }
    OrthogonalArray oa;
    oa.n = static_cast<int>(row_levels.size());
    oa.N = static_cast<int>(columns);
    oa.s = smax;
    oa.row_levels = row_levels;
    oa.entries.assign(row_levels.size(), std::vector<int>(static_cast<std::size_t>(columns)));
    for (long long c = 0; c < columns; ++c) {
        long long rest = c;
        for (int r = oa.n - 1; r >= 0; --r) {
            const int s = row_levels[static_cast<std::size_t>(r)];
            oa.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<int>(rest % s) + 1;
            rest /= s;
        }
    }
    // Index is only meaningful for uniform alphabets.
    bool uniform = true;
    for (int s : row_levels) {
        uniform = uniform && s == smax;
    }
    if (uniform) {
        oa.row_levels.clear();
        const long long pair_cells = static_cast<long long>(smax) * smax;
        oa.lambda = oa.n >= 2 ? static_cast<int>(columns / pair_cells) : 0;
    }
    return oa;
}

OrthogonalArray product_oa(int n, int s) {
    if (n < 1 || s < 1) {
        throw std::invalid_argument("product_oa: n and s must be positive");
    }
    return mixed_product_oa(std::vector<int>(static_cast<std::size_t>(n), s));
}

OrthogonalArray smallest_oa_for(int n, int s) {
    if (n < 2) {
        throw std::invalid_argument("smallest_oa_for: need at least two rows");
    }
    if (s < 2) {
        throw std::invalid_argument("smallest_oa_for: alphabet size must be at least 2");
    }
    if (!gf::prime_power(static_cast<std::uint64_t>(s))) {
        return product_oa(n, s);
    }
    long long rows = s + 1;  // i = 2
    int i = 2;
    long long power = static_cast<long long>(s) * s;
    while (rows < n) {
        power *= s;
        rows = (power - 1) / (s - 1);
        ++i;
        if (power > kMaxRaoHammingColumns) {
            throw std::invalid_argument("smallest_oa_for: required array exceeds size limit");
        }
    }
    OrthogonalArray full = rao_hamming_oa(s, i);
    std::vector<int> keep(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        keep[static_cast<std::size_t>(r)] = r;
    }
    return select_rows(full, keep);
}

OrthogonalArray select_rows(const OrthogonalArray& oa, const std::vector<int>& rows) {
    OrthogonalArray out;
    out.n = static_cast<int>(rows.size());
    out.N = oa.N;
    out.s = oa.s;
    out.lambda = oa.lambda;
    for (int r : rows) {
        if (r < 0 || r >= oa.n) {
            throw std::out_of_range("select_rows: row index out of range");
        }
        out.entries.push_back(oa.entries[static_cast<std::size_t>(r)]);
        if (oa.mixed()) {
            out.row_levels.push_back(oa.levels(r));
        }
    }
    return out;
}

OrthogonalArray normalize_oa(const OrthogonalArray& oa, const FiniteGroup& group) {
    if (oa.mixed()) {
        throw std::invalid_argument("normalize_oa: mixed arrays have no common group");
    }
    if (group.order() != oa.s) {
        throw std::invalid_argument("normalize_oa: group order " + std::to_string(group.order()) +
                                    " does not match alphabet size " + std::to_string(oa.s));
    }
    OrthogonalArray out = oa;
    if (oa.N == 0) {
        return out;
    }
    for (auto& row : out.entries) {
        const int shift = group.inverse(row.front() - 1);
        for (int& e : row) {
            e = group.op(shift, e - 1) + 1;
        }
    }
    return out;
}

OaReport verify_oa(const OrthogonalArray& oa) {
    OaReport report;
    if (static_cast<int>(oa.entries.size()) != oa.n) {
        report.shape_errors.push_back("row count does not match n");
    }
    if (oa.mixed() && static_cast<int>(oa.row_levels.size()) != oa.n) {
        report.shape_errors.push_back("row_levels length does not match n");
    }
    if (!oa.mixed() && oa.n >= 2 && oa.N != oa.lambda * oa.s * oa.s) {
        report.shape_errors.push_back("N differs from lambda * s^2");
    }
    for (std::size_t r = 0; r < oa.entries.size() && report.shape_errors.empty(); ++r) {
        if (static_cast<int>(oa.entries[r].size()) != oa.N) {
            report.shape_errors.push_back("row " + std::to_string(r) + " has wrong length");
            continue;
        }
        for (int e : oa.entries[r]) {
            if (e < 1 || e > oa.levels(static_cast<int>(r))) {
                report.shape_errors.push_back("row " + std::to_string(r) + " has symbol out of range");
                break;
            }
        }
    }
    if (!report.shape_errors.empty()) {
        report.ok = false;
        return report;
    }
    for (int k = 0; k < oa.n; ++k) {
        for (int l = k + 1; l < oa.n; ++l) {
            const int sk = oa.levels(k);
            const int sl = oa.levels(l);
            const int cells = sk * sl;
            const int expected = oa.N / cells;
            std::vector<int> counts(static_cast<std::size_t>(cells), 0);
            const auto& rk = oa.entries[static_cast<std::size_t>(k)];
            const auto& rl = oa.entries[static_cast<std::size_t>(l)];
            for (int c = 0; c < oa.N; ++c) {
                ++counts[static_cast<std::size_t>((rk[static_cast<std::size_t>(c)] - 1) * sl +
                                                  rl[static_cast<std::size_t>(c)] - 1)];
            }
            for (int cell = 0; cell < cells; ++cell) {
                const int count = counts[static_cast<std::size_t>(cell)];
                if (count * cells != oa.N) {
                    report.violations.push_back({k, l, cell / sl + 1, cell % sl + 1, count, expected});
                }
            }
        }
    }
    report.ok = report.violations.empty();
    return report;
}

int max_cyclic_rows(int u) {
    if (u < 2) {
        return 0;
    }
    for (int f = 2; f * f <= u; ++f) {
        if (u % f == 0) {
            return f;
        }
    }
    return u;
}

DifferenceScheme cyclic_difference_scheme(int u, int n) {
    if (u < 2) {
        throw std::invalid_argument("cyclic_difference_scheme: group order must be at least 2");
    }
    if (n < 1) {
        throw std::invalid_argument("cyclic_difference_scheme: need at least one row");
    }
    if (n > max_cyclic_rows(u)) {
        throw std::invalid_argument("cyclic_difference_scheme: " + std::to_string(n) + " rows unsupported over Z_" +
                                    std::to_string(u) + " (at most " + std::to_string(max_cyclic_rows(u)) + ")");
    }
    DifferenceScheme ds;
    ds.n = n;
    ds.N = u;
    ds.u = u;
    ds.entries.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(u)));
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < u; ++j) {
            ds.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = (k * j) % u;
        }
    }
    return ds;
}

DsReport verify_difference_scheme(const DifferenceScheme& ds) {
    DsReport report;
    if (ds.u < 2) {
        report.shape_errors.push_back("group order must be at least 2");
    } else if (ds.N % ds.u != 0) {
        report.shape_errors.push_back("u does not divide N");
    }
    if (static_cast<int>(ds.entries.size()) != ds.n) {
        report.shape_errors.push_back("row count does not match n");
    }
    for (std::size_t r = 0; r < ds.entries.size() && report.shape_errors.empty(); ++r) {
        if (static_cast<int>(ds.entries[r].size()) != ds.N) {
            report.shape_errors.push_back("row " + std::to_string(r) + " has wrong length");
            continue;
        }
        for (int e : ds.entries[r]) {
            if (e < 0 || e >= ds.u) {
                report.shape_errors.push_back("row " + std::to_string(r) + " has entry outside Z_u");
                break;
            }
        }
    }
    if (!report.shape_errors.empty()) {
        report.ok = false;
        return report;
    }
    const int expected = ds.N / ds.u;
    for (int k = 0; k < ds.n; ++k) {
        for (int l = k + 1; l < ds.n; ++l) {
            std::vector<int> counts(static_cast<std::size_t>(ds.u), 0);
            for (int c = 0; c < ds.N; ++c) {
                const int diff = ds.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] -
                                 ds.entries[static_cast<std::size_t>(l)][static_cast<std::size_t>(c)];
                ++counts[static_cast<std::size_t>(((diff % ds.u) + ds.u) % ds.u)];
            }
            for (int g = 0; g < ds.u; ++g) {
                if (counts[static_cast<std::size_t>(g)] != expected) {
                    report.violations.push_back({k, l, g, counts[static_cast<std::size_t>(g)], expected});
                }
            }
        }
    }
    report.ok = report.violations.empty();
    return report;
}

std::string to_csv(const IntMatrix& entries) {
    std::ostringstream out;
    for (const auto& row : entries) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) {
                out << ',';
            }
            out << row[c];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace pulseforge::designs
