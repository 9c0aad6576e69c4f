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

#include "pulseforge/graphcolor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pulseforge::graphcolor {

InteractionGraph::InteractionGraph(int n_, std::vector<std::pair<int, int>> edges_, std::vector<double> weights_)
    : n(n_) {
    if (n < 0) {
        throw std::invalid_argument("InteractionGraph: negative vertex count");
    }
    if (!weights_.empty() && weights_.size() != edges_.size()) {
        throw std::invalid_argument("InteractionGraph: need one weight per edge");
    }
    std::vector<std::pair<std::pair<int, int>, double>> tagged;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [a, b] = edges_[i];
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw std::invalid_argument("InteractionGraph: edge endpoint out of range");
        }
        if (a == b) {
            throw std::invalid_argument("InteractionGraph: self-loops are not allowed");
        }
        const double w = weights_.empty() ? 1.0 : weights_[i];
        if (!weights_.empty() && !(w > 0.0)) {
            throw std::invalid_argument("InteractionGraph: weights must be positive");
        }
        tagged.push_back({{std::min(a, b), std::max(a, b)}, w});
    }
    std::sort(tagged.begin(), tagged.end());
    for (std::size_t i = 0; i < tagged.size(); ++i) {
        if (i > 0 && tagged[i].first == tagged[i - 1].first) {
            continue;
        }
        edges.push_back(tagged[i].first);
        if (!weights_.empty()) {
            weights.push_back(tagged[i].second);
        }
    }
}

int InteractionGraph::degree(int v) const {
    int deg = 0;
    for (const auto& [a, b] : edges) {
        deg += (a == v || b == v) ? 1 : 0;
    }
    return deg;
}

int InteractionGraph::max_degree() const {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : edges) {
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool InteractionGraph::adjacent(int u, int v) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(std::min(u, v), std::max(u, v)));
}

InteractionGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            edges.emplace_back(k, l);
        }
    }
    return InteractionGraph(n, std::move(edges));
}

InteractionGraph threshold_graph(const RMatrix& T, double threshold) {
    if (T.rows() != T.cols()) {
        throw std::invalid_argument("threshold_graph: T must be square");
    }
    std::vector<std::pair<int, int>> edges;
    const int n = static_cast<int>(T.rows());
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            if (std::abs(T(k, l)) > threshold) {
                edges.emplace_back(k, l);
            }
        }
    }
    return InteractionGraph(n, std::move(edges));
}

namespace {

std::vector<std::vector<int>> adjacency(const InteractionGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (const auto& [a, b] : g.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    return adj;
}

bool color_vertices(const std::vector<std::vector<int>>& adj, const std::vector<int>& order, std::size_t pos,
                    int k, int used, std::vector<int>& colors) {
    if (pos == order.size()) {
        return true;
    }
    const int v = order[pos];
    // New colors are introduced in order, which removes permuted duplicates.
    for (int c = 0; c < std::min(k, used + 1); ++c) {
        bool ok = true;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (colors[static_cast<std::size_t>(w)] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        colors[static_cast<std::size_t>(v)] = c;
        if (color_vertices(adj, order, pos + 1, k, std::max(used, c + 1), colors)) {
            return true;
        }
        colors[static_cast<std::size_t>(v)] = -1;
    }
    return false;
}

std::vector<int> by_degree(const std::vector<std::vector<int>>& adj) {
    std::vector<int> order(adj.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return adj[static_cast<std::size_t>(a)].size() > adj[static_cast<std::size_t>(b)].size();
    });
    return order;
}

int distinct(const std::vector<int>& colors) {
    return static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
}

bool color_edges(const InteractionGraph& g, std::size_t pos, int k, int used, std::vector<int>& colors) {
    if (pos == g.edges.size()) {
        return true;
    }
    const auto [a, b] = g.edges[pos];
    for (int c = 0; c < std::min(k, used + 1); ++c) {
        bool ok = true;
        for (std::size_t e = 0; e < pos; ++e) {
            const auto [x, y] = g.edges[e];
            if (colors[e] == c && (x == a || x == b || y == a || y == b)) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        colors[pos] = c;
        if (color_edges(g, pos + 1, k, std::max(used, c + 1), colors)) {
            return true;
        }
        colors[pos] = -1;
    }
    return false;
}

// Misra-Gries edge coloring with colors 0..max_degree.
std::vector<int> misra_gries(const InteractionGraph& g) {
    const auto n = static_cast<std::size_t>(g.n);
    const int palette = g.max_degree() + 1;
    std::vector<std::vector<int>> col(n, std::vector<int>(n, -1));
    const auto adj = adjacency(g);

    auto is_free = [&](int x, int c) {
        for (int y : adj[static_cast<std::size_t>(x)]) {
            if (col[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == c) {
                return false;
            }
        }
        return true;
    };
    auto free_color = [&](int x) {
        for (int c = 0; c < palette; ++c) {
            if (is_free(x, c)) {
                return c;
            }
        }
        throw std::logic_error("misra_gries: no free color");
    };
    auto set_color = [&](int x, int y, int c) {
        col[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = c;
        col[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = c;
    };
    auto color_of = [&](int x, int y) { return col[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; };

    for (const auto& [u, v] : g.edges) {
        std::vector<int> fan{v};
        std::vector<bool> in_fan(n, false);
        in_fan[static_cast<std::size_t>(v)] = true;
        for (bool grown = true; grown;) {
            grown = false;
            for (int w : adj[static_cast<std::size_t>(u)]) {
                const int cw = color_of(u, w);
                if (!in_fan[static_cast<std::size_t>(w)] && cw >= 0 && is_free(fan.back(), cw)) {
                    fan.push_back(w);
                    in_fan[static_cast<std::size_t>(w)] = true;
                    grown = true;
                    break;
                }
            }
        }
        const int c = free_color(u);
        const int d = free_color(fan.back());

        // Swap c and d along the maximal path from u that starts with a d edge.
        std::vector<std::pair<int, int>> path;
        int x = u;
        int prev = -1;
        int want = d;
        for (bool extended = true; extended;) {
            extended = false;
            for (int y : adj[static_cast<std::size_t>(x)]) {
                if (y != prev && color_of(x, y) == want) {
                    path.emplace_back(x, y);
                    prev = x;
                    x = y;
                    want = want == d ? c : d;
                    extended = true;
                    break;
                }
            }
        }
        for (const auto& [p, q] : path) {
            set_color(p, q, color_of(p, q) == d ? c : d);
        }

        std::size_t stop = fan.size() - 1;
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i > 0 && !is_free(fan[i - 1], color_of(u, fan[i]))) {
                break;
            }
            if (is_free(fan[i], d)) {
                stop = i;
                break;
            }
        }
        for (std::size_t i = 0; i < stop; ++i) {
            set_color(u, fan[i], color_of(u, fan[i + 1]));
        }
        set_color(u, fan[stop], d);
    }
    std::vector<int> colors;
    colors.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges) {
        colors.push_back(color_of(a, b));
    }
    return colors;
}

}  // namespace

VertexColoring vertex_coloring(const InteractionGraph& g) {
    VertexColoring out;
    out.colors.assign(static_cast<std::size_t>(g.n), -1);
    if (g.n == 0) {
        out.exact = true;
        return out;
    }
    const auto adj = adjacency(g);
    const auto order = by_degree(adj);
    if (g.n <= kExactVertexLimit) {
        for (int k = 1; k <= g.n; ++k) {
            std::fill(out.colors.begin(), out.colors.end(), -1);
            if (color_vertices(adj, order, 0, k, 0, out.colors)) {
                out.count = distinct(out.colors);
                out.exact = true;
                return out;
            }
        }
        throw std::logic_error("vertex_coloring: search failed");
    }
    for (int v : order) {
        std::set<int> taken;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            taken.insert(out.colors[static_cast<std::size_t>(w)]);
        }
        int c = 0;
        while (taken.count(c)) {
            ++c;
        }
        out.colors[static_cast<std::size_t>(v)] = c;
    }
    out.count = distinct(out.colors);
    return out;
}

EdgeColoring edge_coloring(const InteractionGraph& g) {
    EdgeColoring out;
    out.colors.assign(g.edges.size(), -1);
    if (g.edges.empty()) {
        out.exact = true;
        return out;
    }
    const int delta = g.max_degree();
    if (g.edges.size() <= static_cast<std::size_t>(kExactEdgeLimit)) {
        for (int k = delta; k <= delta + 1; ++k) {
            std::fill(out.colors.begin(), out.colors.end(), -1);
            if (color_edges(g, 0, k, 0, out.colors)) {
                out.count = distinct(out.colors);
                out.exact = true;
                return out;
            }
        }
        throw std::logic_error("edge_coloring: search failed");
    }
    out.colors = misra_gries(g);
    out.count = distinct(out.colors);
    out.exact = out.count == delta;  // max degree is a lower bound
    return out;
}

bool is_proper(const InteractionGraph& g, const VertexColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.n) {
        return false;
    }
    for (int col : c.colors) {
        if (col < 0) {
            return false;
        }
    }
    for (const auto& [a, b] : g.edges) {
        if (c.colors[static_cast<std::size_t>(a)] == c.colors[static_cast<std::size_t>(b)]) {
            return false;
        }
    }
    return true;
}

bool is_proper(const InteractionGraph& g, const EdgeColoring& c) {
    if (c.colors.size() != g.edges.size()) {
        return false;
    }
    std::set<std::pair<int, int>> seen;  // (vertex, color)
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const int col = c.colors[e];
        if (col < 0) {
            return false;
        }
        if (!seen.insert({g.edges[e].first, col}).second || !seen.insert({g.edges[e].second, col}).second) {
            return false;
        }
    }
    return true;
}

WeightedIndex weighted_chromatic_index(const RMatrix& T) {
    if (T.rows() != T.cols()) {
        throw std::invalid_argument("weighted_chromatic_index: T must be square");
    }
    if ((T - T.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("weighted_chromatic_index: T must be symmetric");
    }
    std::vector<double> levels;
    for (Eigen::Index k = 0; k < T.rows(); ++k) {
        for (Eigen::Index l = k + 1; l < T.cols(); ++l) {
            if (T(k, l) != 0.0) {
                levels.push_back(std::abs(T(k, l)));
            }
        }
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    WeightedIndex out;
    double previous = 0.0;
    for (double level : levels) {
        // On [previous, level) the graph holds every edge with |T| >= level.
        const auto coloring = edge_coloring(threshold_graph(T, previous));
        out.value += (level - previous) * coloring.count;
        out.exact = out.exact && coloring.exact;
        previous = level;
    }
    return out;
}

scheme::PulseScheme colored_decoupling_scheme(const InteractionGraph& g, int d) {
    if (g.n < 1) {
        throw std::invalid_argument("colored_decoupling_scheme: empty graph");
    }
    const auto coloring = vertex_coloring(g);
    const auto base = scheme::decoupling_scheme(coloring.count, d);
    scheme::PulseScheme out;
    out.n = g.n;
    out.N = base.N;
    out.times = base.times;
    out.target_overhead = base.target_overhead;
    for (int v = 0; v < g.n; ++v) {
        const auto c = static_cast<std::size_t>(coloring.colors[static_cast<std::size_t>(v)]);
        out.pulses.push_back(base.pulses[c]);
        out.bases.push_back(base.bases[c]);
    }
    scheme::validate(out);
    return out;
}

}  // namespace pulseforge::graphcolor
