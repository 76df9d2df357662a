#include "epg/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace epg {

StaticGraph::StaticGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)), adj_(static_cast<std::size_t>(vertex_count)) {
    if (n_ < 0)
        throw InvalidInput{"negative vertex count"};
    std::sort(edges_.begin(), edges_.end());
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v >= n_)
            throw InvalidInput{"edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                               "} out of range for " + std::to_string(n_) + " vertices"};
        if (e.u == e.v)
            throw InvalidInput{"loop at vertex " + std::to_string(e.u)};
    }
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InvalidInput{"duplicate edge"};
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adj_)
        std::sort(nb.begin(), nb.end());
}

bool StaticGraph::has_edge(VertexId a, VertexId b) const { return edge_index(a, b).has_value(); }

std::optional<std::size_t> StaticGraph::edge_index(VertexId a, VertexId b) const {
    if (a == b)
        return std::nullopt;
    const Edge e{a, b};
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e)
        return static_cast<std::size_t>(it - edges_.begin());
    return std::nullopt;
}

StaticGraph StaticGraph::induced(const std::vector<VertexId>& subset) const {
    std::vector<int> index(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < subset.size(); ++i)
        index[static_cast<std::size_t>(subset[i])] = static_cast<int>(i);
    std::vector<Edge> sub;
    for (const Edge& e : edges_) {
        const int iu = index[static_cast<std::size_t>(e.u)];
        const int iv = index[static_cast<std::size_t>(e.v)];
        if (iu >= 0 && iv >= 0)
            sub.emplace_back(iu, iv);
    }
    return StaticGraph{static_cast<int>(subset.size()), std::move(sub)};
}

std::vector<int> StaticGraph::component_ids() const {
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    int next = 0;
    for (VertexId s = 0; s < n_; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1)
            continue;
        comp[static_cast<std::size_t>(s)] = next;
        std::deque<VertexId> queue{s};
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (VertexId w : neighbors(v))
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = next;
                    queue.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

bool StaticGraph::has_cycle() const {
    const auto comp = component_ids();
    const int components = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    return edge_count() > static_cast<std::size_t>(n_ - components);
}

StaticGraph make_path(int edge_count) {
    std::vector<Edge> edges;
    for (int i = 0; i < edge_count; ++i)
        edges.emplace_back(i, i + 1);
    return StaticGraph{edge_count + 1, std::move(edges)};
}

StaticGraph make_cycle(int length) {
    std::vector<Edge> edges;
    for (int i = 0; i < length; ++i)
        edges.emplace_back(i, (i + 1) % length);
    return StaticGraph{length, std::move(edges)};
}

StaticGraph make_clique(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return StaticGraph{n, std::move(edges)};
}

StaticGraph make_star(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.emplace_back(0, i);
    return StaticGraph{leaves + 1, std::move(edges)};
}

StaticGraph make_edgeless(int n) { return StaticGraph{n, {}}; }

std::optional<std::vector<VertexId>> shortest_cycle(const StaticGraph& g) {
    // For each edge in order, shortest path between its endpoints avoiding the
    // edge itself; the best (length, edge) pair closes a chordless cycle.
    std::optional<std::vector<VertexId>> best;
    for (const Edge& e : g.edges()) {
        std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
        std::vector<VertexId> parent(static_cast<std::size_t>(g.vertex_count()), -1);
        dist[static_cast<std::size_t>(e.u)] = 0;
        std::deque<VertexId> queue{e.u};
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (VertexId w : g.neighbors(v)) {
                if ((v == e.u && w == e.v) || (v == e.v && w == e.u))
                    continue;
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    queue.push_back(w);
                }
            }
        }
        if (dist[static_cast<std::size_t>(e.v)] == -1)
            continue;
        std::vector<VertexId> cycle;
        for (VertexId v = e.v; v != -1; v = parent[static_cast<std::size_t>(v)])
            cycle.push_back(v);
        std::reverse(cycle.begin(), cycle.end()); // e.u ... e.v; edge e closes it
        if (!best || cycle.size() < best->size())
            best = cycle;
    }
    return best;
}

std::optional<std::vector<VertexId>> forest_path(const StaticGraph& g, VertexId from, VertexId to) {
    std::vector<VertexId> parent(static_cast<std::size_t>(g.vertex_count()), -2);
    parent[static_cast<std::size_t>(from)] = -1;
    std::deque<VertexId> queue{from};
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        if (v == to)
            break;
        for (VertexId w : g.neighbors(v))
            if (parent[static_cast<std::size_t>(w)] == -2) {
                parent[static_cast<std::size_t>(w)] = v;
                queue.push_back(w);
            }
    }
    if (parent[static_cast<std::size_t>(to)] == -2)
        return std::nullopt;
    std::vector<VertexId> path;
    for (VertexId v = to; v != -1; v = parent[static_cast<std::size_t>(v)])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace epg
