#pragma once

#include <cstdint>
#include <vector>

#include "epg/graph.hpp"
#include "epg/label.hpp"

namespace epg {

// An edge periodic temporal graph: an underlying static graph plus one
// periodic presence label per edge (aligned with StaticGraph::edges()).
class EdgePeriodicGraph {
public:
    EdgePeriodicGraph() = default; // empty graph
    EdgePeriodicGraph(StaticGraph graph, std::vector<BinaryLabel> labels);

    const StaticGraph& graph() const { return graph_; }
    const std::vector<BinaryLabel>& labels() const { return labels_; }
    const BinaryLabel& label(std::size_t edge_index) const { return labels_[edge_index]; }
    const BinaryLabel& label(const Edge& e) const;

    bool edge_present(std::size_t edge_index, std::uint64_t t) const {
        return labels_[edge_index].at_time(t);
    }

    bool operator==(const EdgePeriodicGraph&) const = default;

private:
    StaticGraph graph_;
    std::vector<BinaryLabel> labels_; // labels_[i] belongs to graph_.edges()[i]
};

// Subgraph of the underlying graph present in time step t.
StaticGraph snapshot(const EdgePeriodicGraph& g, std::uint64_t t);

// LCM of all edge label lengths; 1 for an edgeless graph.
// Snapshots repeat with this period. Throws PeriodOverflow beyond the cap.
std::uint64_t global_period(const EdgePeriodicGraph& g, std::uint64_t cap = kPeriodCap);

// Longest label length; 0 for an edgeless graph.
std::uint64_t max_label_length(const EdgePeriodicGraph& g);

struct EpgStats {
    std::size_t ones_max = 0;
    std::size_t zeros_max = 0;
    std::size_t runs_total = 0;
    std::uint64_t period = 1;
    std::vector<std::uint64_t> label_lengths; // the set L_G, sorted
};

EpgStats compute_stats(const EdgePeriodicGraph& g, std::uint64_t period_cap = kPeriodCap);

struct LayeredVertex {
    VertexId vertex;
    std::uint64_t layer;
    auto operator<=>(const LayeredVertex&) const = default;
};

// Time-expanded view of an EPG over `horizon` layers. Waiting arcs connect
// (v,i) to (v,i+1); crossing arcs follow edge presence in step i. Layer
// indices wrap around only when the horizon equals the full global period.
// Arcs are computed on demand; node_count() bounds the BFS working set.
class LayeredGraph {
public:
    LayeredGraph(const EdgePeriodicGraph& base, std::uint64_t horizon, bool wrap);

    const EdgePeriodicGraph& base() const { return *base_; }
    std::uint64_t horizon() const { return horizon_; }
    bool wraps() const { return wrap_; }
    std::uint64_t node_count() const { return static_cast<std::uint64_t>(base_->graph().vertex_count()) * horizon_; }

    bool has_arc(const LayeredVertex& from, const LayeredVertex& to) const;
    std::vector<LayeredVertex> arcs_from(const LayeredVertex& from) const;

private:
    const EdgePeriodicGraph* base_;
    std::uint64_t horizon_;
    bool wrap_;
};

// Horizon layers starting at time 0; wraparound iff horizon == global period.
// Throws MemoryBudgetExceeded when |V| * horizon exceeds node_cap.
LayeredGraph build_layered(const EdgePeriodicGraph& g, std::uint64_t horizon,
                           std::uint64_t node_cap = std::uint64_t{1} << 26);

} // namespace epg
