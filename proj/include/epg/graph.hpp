#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "epg/errors.hpp"

namespace epg {

using VertexId = int;

// Unordered vertex pair, stored normalized (u < v).
struct Edge {
    VertexId u;
    VertexId v;

    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}
    auto operator<=>(const Edge&) const = default;
};

// Plain undirected graph: 0-based vertex indices, no loops, no multi-edges.
// Immutable after construction.
class StaticGraph {
public:
    StaticGraph() : n_(0) {}
    StaticGraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(VertexId a, VertexId b) const;
    std::optional<std::size_t> edge_index(VertexId a, VertexId b) const;

    // Subgraph induced on the given vertices; subset[i] becomes vertex i.
    StaticGraph induced(const std::vector<VertexId>& subset) const;

    std::vector<int> component_ids() const;
    bool has_cycle() const;
    bool is_forest() const { return !has_cycle(); }

    bool operator==(const StaticGraph&) const = default;

private:
    int n_;
    std::vector<Edge> edges_; // sorted, unique
    std::vector<std::vector<VertexId>> adj_;
};

StaticGraph make_path(int edge_count);
StaticGraph make_cycle(int length);
StaticGraph make_clique(int n);
StaticGraph make_star(int leaves);
StaticGraph make_edgeless(int n);

// A shortest cycle (chordless by minimality) as a vertex sequence, or nullopt
// for forests. Deterministic: smallest length, then smallest edge completing it.
std::optional<std::vector<VertexId>> shortest_cycle(const StaticGraph& g);

// Unique path between two vertices of a forest (inclusive), nullopt if disconnected.
std::optional<std::vector<VertexId>> forest_path(const StaticGraph& g, VertexId from, VertexId to);

} // namespace epg
