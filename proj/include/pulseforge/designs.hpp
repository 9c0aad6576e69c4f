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

#include <string>
#include <vector>

namespace pulseforge::designs {

using IntMatrix = std::vector<std::vector<int>>;

/// Strength-2 orthogonal array: n rows (nodes) by N columns (time slots).
///
/// Symbols are 1-based, entries[r][c] in [1, levels(r)]. Uniform arrays leave
/// row_levels empty; mixed arrays carry one alphabet size per row, in which
/// case s is the largest of them.
struct OrthogonalArray {
    int n = 0;
    int N = 0;
    int s = 0;
    int lambda = 0;
    IntMatrix entries;
    std::vector<int> row_levels;

    int levels(int row) const { return row_levels.empty() ? s : row_levels[static_cast<std::size_t>(row)]; }
    bool mixed() const { return !row_levels.empty(); }
};

/// Difference scheme over Z_u, entries in [0, u).
struct DifferenceScheme {
    int n = 0;
    int N = 0;
    int u = 0;
    IntMatrix entries;
};

struct OaViolation {
    int row_k;
    int row_l;
    int symbol_a;
    int symbol_b;
    int count;
    int expected;
};

struct OaReport {
    bool ok = true;
    std::vector<OaViolation> violations;
    std::vector<std::string> shape_errors;
};

struct DsViolation {
    int row_k;
    int row_l;
    int difference;
    int count;
    int expected;
};

struct DsReport {
    bool ok = true;
    std::vector<DsViolation> violations;
    std::vector<std::string> shape_errors;
};

/// Finite group on labels 0..order-1 given by its Cayley table.
class FiniteGroup {
public:
    FiniteGroup(int order, std::vector<int> table, int identity);

    static FiniteGroup cyclic(int order);
    /// Z_d x Z_d with label a*d + b for the pair (a, b); label 0 is (0, 0).
    static FiniteGroup zd_squared(int d);

    int order() const { return order_; }
    int identity() const { return identity_; }
    int op(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
    int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }

private:
    int order_;
    std::vector<int> table_;
    int identity_;
    std::vector<int> inverse_;
};

/// Linear inner-product array over GF(s): rows are the projectively
/// normalized nonzero vectors of GF(s)^i, columns all vectors of GF(s)^i.
OrthogonalArray rao_hamming_oa(int s, int i);

/// Full Cartesian product A^n; row 0 is the most significant digit.
OrthogonalArray product_oa(int n, int s);

/// Mixed-alphabet Cartesian product, one alphabet size per row.
OrthogonalArray mixed_product_oa(const std::vector<int>& row_levels);

/// Smallest Rao-Hamming array with at least n rows (truncated to n), or the
/// product array when s is not a prime power.
OrthogonalArray smallest_oa_for(int n, int s);

/// Keeps the listed rows in the given order.
OrthogonalArray select_rows(const OrthogonalArray& oa, const std::vector<int>& rows);

/// Maps each row by left multiplication with the inverse of its first entry,
/// so the first column becomes the group identity.
OrthogonalArray normalize_oa(const OrthogonalArray& oa, const FiniteGroup& group);

OaReport verify_oa(const OrthogonalArray& oa);

/// Rows k = 0..n-1 of the multiplication table k*j mod u. Valid when every
/// difference of row labels is a unit mod u, i.e. n <= smallest prime factor.
DifferenceScheme cyclic_difference_scheme(int u, int n);

/// Largest row count cyclic_difference_scheme supports for u.
int max_cyclic_rows(int u);

DsReport verify_difference_scheme(const DifferenceScheme& ds);

std::string to_csv(const IntMatrix& entries);

}  // namespace pulseforge::designs
