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

#include <optional>
#include <utility>
#include <vector>

#include "pulseforge/linalg.hpp"
#include "pulseforge/scheme.hpp"

namespace pulseforge::graphcolor {

/// Simple undirected graph on vertices 0..n-1. Edges are stored with the
/// smaller endpoint first, sorted and unique.
struct InteractionGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<double> weights;  // empty, or one positive weight per edge

    InteractionGraph() = default;
    InteractionGraph(int n, std::vector<std::pair<int, int>> edges, std::vector<double> weights = {});

    int degree(int v) const;
    int max_degree() const;
    bool adjacent(int u, int v) const;
};

InteractionGraph complete_graph(int n);

/// Edges (k, l) with |T_kl| > threshold, k < l.
InteractionGraph threshold_graph(const RMatrix& T, double threshold);

struct VertexColoring {
    std::vector<int> colors;
    int count = 0;
    bool exact = false;
};

struct EdgeColoring {
    std::vector<int> colors;  // parallel to graph.edges
    int count = 0;
    bool exact = false;
};

constexpr int kExactVertexLimit = 12;
constexpr int kExactEdgeLimit = 10;

/// Exact for n <= 12 (backtracking), largest-degree-first greedy beyond.
VertexColoring vertex_coloring(const InteractionGraph& g);

/// Exact for <= 10 edges, Misra-Gries (at most max degree + 1 colors) beyond.
EdgeColoring edge_coloring(const InteractionGraph& g);

bool is_proper(const InteractionGraph& g, const VertexColoring& c);
bool is_proper(const InteractionGraph& g, const EdgeColoring& c);

struct WeightedIndex {
    double value = 0.0;
    bool exact = true;  // false if any level used the heuristic edge coloring
};

/// Integral over s >= 0 of the chromatic index of the graph {|T_kl| > s}.
WeightedIndex weighted_chromatic_index(const RMatrix& T);

/// Decoupling scheme for a chi-node complete network, broadcast to all
/// vertices of the same color. Decouples every model supported on g's edges.
scheme::PulseScheme colored_decoupling_scheme(const InteractionGraph& g, int d);

}  // namespace pulseforge::graphcolor
