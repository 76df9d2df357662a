#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "epg/epg.hpp"

namespace epg {

inline constexpr std::size_t kDefaultPathBudget = 100'000;
inline constexpr std::uint64_t kDefaultLayeredNodeCap = std::uint64_t{1} << 26;

// Can vertex `to` be reached from vertex `from`, starting at some time step t,
// within at most `budget` steps (one move - edge or wait - per step)?
struct TraversalQuery {
    EdgePeriodicGraph epg;
    VertexId from = 0;
    VertexId to = 0;
    std::uint64_t budget = 0;
};

struct Move {
    std::uint64_t time;
    VertexId from;
    VertexId to; // == from for a wait

    bool is_wait() const { return from == to; }
    bool operator==(const Move&) const = default;
};

// Certificate for a traversal query. When the target is reachable at all, the
// walk realizes the minimum traversal time (arrival_t - start_t) over all
// start steps; `feasible` additionally says that minimum fits the budget.
struct TraversalResult {
    bool reachable = false;
    bool feasible = false;
    std::uint64_t start_t = 0;
    std::uint64_t arrival_t = 0;
    std::vector<Move> walk;

    std::uint64_t traversal_time() const { return arrival_t - start_t; }
};

// Every shortest temporal walk needs at most max(L) * (n-1) steps.
std::uint64_t traversal_horizon(const EdgePeriodicGraph& g);

// Reference oracle: for every start t in [0, global period), BFS over the
// time-expanded graph up to the horizon. Returns the lexicographically least
// (traversal time, start) pair. Throws CapExceeded when the period exceeds cap.
TraversalResult solve_st_oracle(const TraversalQuery& q, std::uint64_t cap = 1'000'000);

// All start steps achieving the minimum traversal time, for property tests.
struct StartProfile {
    std::optional<std::uint64_t> min_traversal_time;
    std::vector<std::uint64_t> optimal_starts; // within [0, global period)
};
StartProfile optimal_starts(const EdgePeriodicGraph& g, VertexId from, VertexId to,
                            std::uint64_t cap = 1'000'000);

// Minimum-span schedule for traversing a fixed simple path edge by edge:
// edge i is crossed at time t_i, t_i strictly increasing, label 1 at each t_i.
// Span(= traversal time) is t_r - t_1 + 1; start is t_1.
struct PathSchedule {
    std::uint64_t span = 0;
    std::uint64_t start = 0;
    std::vector<std::uint64_t> edge_times;
};

// Exact search over per-edge 1-position choices with residue-class (CRT)
// propagation; minimizes (span, start, edge-time vector) lexicographically.
// The path must be simple and consist of underlying edges.
PathSchedule solve_st_path_schedule(const EdgePeriodicGraph& g, const std::vector<VertexId>& path);

// Budgeted wrapper: the schedule only if its span fits within k steps.
std::optional<PathSchedule> solve_st_path(const EdgePeriodicGraph& g,
                                          const std::vector<VertexId>& path, std::uint64_t k);

// Enumerates simple from-to paths (DFS, sorted adjacency); throws
// PathBudgetExceeded past the budget.
std::vector<std::vector<VertexId>> enumerate_simple_paths(const StaticGraph& g, VertexId from,
                                                          VertexId to,
                                                          std::size_t budget = kDefaultPathBudget);

// Full solver: best schedule over all simple paths, same tie-breaking as the
// oracle. Agrees with solve_st_oracle wherever the oracle is feasible.
TraversalResult solve_st(const TraversalQuery& q, std::size_t path_budget = kDefaultPathBudget);

// Fixed start: earliest arrival time at `to` when starting at `from` in step
// start_t; polynomial (forward BFS over at most horizon layers).
std::optional<std::uint64_t> earliest_arrival(const EdgePeriodicGraph& g, VertexId from, VertexId to,
                                              std::uint64_t start_t,
                                              std::uint64_t node_cap = kDefaultLayeredNodeCap);

// Fixed end: latest start step from which `to` is reachable by deadline_t
// (backward BFS).
std::optional<std::uint64_t> latest_departure(const EdgePeriodicGraph& g, VertexId from, VertexId to,
                                              std::uint64_t deadline_t,
                                              std::uint64_t node_cap = kDefaultLayeredNodeCap);

// Move-by-move check of a walk against the labels; used to self-verify results.
bool walk_valid(const EdgePeriodicGraph& g, const TraversalResult& r, VertexId from, VertexId to);

} // namespace epg
