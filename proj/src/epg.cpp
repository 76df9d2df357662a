#include "epg/epg.hpp"

#include <algorithm>
#include <string>

namespace epg {

EdgePeriodicGraph::EdgePeriodicGraph(StaticGraph graph, std::vector<BinaryLabel> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
    if (labels_.size() != graph_.edge_count())
        throw InvalidInput{"expected one label per edge: " + std::to_string(graph_.edge_count()) +
                           " edges, " + std::to_string(labels_.size()) + " labels"};
}

const BinaryLabel& EdgePeriodicGraph::label(const Edge& e) const {
    const auto idx = graph_.edge_index(e.u, e.v);
    if (!idx)
        throw InvalidInput{"no such edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"};
    return labels_[*idx];
}

StaticGraph snapshot(const EdgePeriodicGraph& g, std::uint64_t t) {
    std::vector<Edge> present;
    const auto& edges = g.graph().edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (g.edge_present(i, t))
            present.push_back(edges[i]);
    return StaticGraph{g.graph().vertex_count(), std::move(present)};
}

std::uint64_t global_period(const EdgePeriodicGraph& g, std::uint64_t cap) {
    std::uint64_t period = 1;
    for (const auto& label : g.labels())
        period = checked_lcm(period, label.length(), cap);
    return period;
}

std::uint64_t max_label_length(const EdgePeriodicGraph& g) {
    std::uint64_t longest = 0;
    for (const auto& label : g.labels())
        longest = std::max<std::uint64_t>(longest, label.length());
    return longest;
}

EpgStats compute_stats(const EdgePeriodicGraph& g, std::uint64_t period_cap) {
    EpgStats s;
    s.period = global_period(g, period_cap);
    for (const auto& label : g.labels()) {
        s.ones_max = std::max(s.ones_max, label.ones_count());
        s.zeros_max = std::max(s.zeros_max, label.zeros_count());
        s.runs_total += label.one_runs();
        s.label_lengths.push_back(label.length());
    }
    std::sort(s.label_lengths.begin(), s.label_lengths.end());
    s.label_lengths.erase(std::unique(s.label_lengths.begin(), s.label_lengths.end()),
                          s.label_lengths.end());
    return s;
}

LayeredGraph::LayeredGraph(const EdgePeriodicGraph& base, std::uint64_t horizon, bool wrap)
    : base_(&base), horizon_(horizon), wrap_(wrap) {}

bool LayeredGraph::has_arc(const LayeredVertex& from, const LayeredVertex& to) const {
    if (from.layer >= horizon_ || to.layer >= horizon_)
        return false;
    const std::uint64_t next = from.layer + 1;
    if (wrap_ ? to.layer != next % horizon_ : to.layer != next)
        return false;
    if (from.vertex == to.vertex)
        return true;
    const auto idx = base_->graph().edge_index(from.vertex, to.vertex);
    return idx && base_->edge_present(*idx, from.layer);
}

std::vector<LayeredVertex> LayeredGraph::arcs_from(const LayeredVertex& from) const {
    std::vector<LayeredVertex> out;
    if (from.layer >= horizon_)
        return out;
    std::uint64_t next = from.layer + 1;
    if (next == horizon_) {
        if (!wrap_)
            return out;
        next = 0;
    }
    out.push_back({from.vertex, next});
    for (VertexId w : base_->graph().neighbors(from.vertex)) {
        const auto idx = base_->graph().edge_index(from.vertex, w);
        if (base_->edge_present(*idx, from.layer))
            out.push_back({w, next});
    }
    return out;
}

LayeredGraph build_layered(const EdgePeriodicGraph& g, std::uint64_t horizon, std::uint64_t node_cap) {
    if (horizon == 0)
        throw InvalidInput{"layered horizon must be positive"};
    const auto nodes = static_cast<unsigned __int128>(g.graph().vertex_count()) * horizon;
    if (nodes > node_cap)
        throw MemoryBudgetExceeded{"layered graph of " + std::to_string(g.graph().vertex_count()) + " x " +
                                   std::to_string(horizon) + " nodes exceeds the cap"};
    const bool wrap = horizon == global_period(g);
    return LayeredGraph{g, horizon, wrap};
}

} // namespace epg
