#include "epg/traversal.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace epg {

namespace {

// Walk with waits from a concrete path schedule.
TraversalResult result_from_schedule(const std::vector<VertexId>& path, const PathSchedule& s,
                                     std::uint64_t budget) {
    TraversalResult r;
    r.reachable = true;
    r.start_t = s.start;
    r.arrival_t = s.edge_times.empty() ? s.start : s.edge_times.back() + 1;
    r.feasible = r.traversal_time() <= budget;
    std::uint64_t now = s.start;
    for (std::size_t i = 0; i < s.edge_times.size(); ++i) {
        for (; now < s.edge_times[i]; ++now)
            r.walk.push_back({now, path[i], path[i]});
        r.walk.push_back({now, path[i], path[i + 1]});
        ++now;
    }
    return r;
}

// Earliest time >= from with a 1 in the label.
std::uint64_t next_one(const BinaryLabel& label, std::uint64_t from) {
    for (std::uint64_t t = from;; ++t)
        if (label.at_time(t))
            return t;
}

} // namespace

std::uint64_t traversal_horizon(const EdgePeriodicGraph& g) {
    const int n = g.graph().vertex_count();
    if (n <= 1)
        return 0;
    return max_label_length(g) * static_cast<std::uint64_t>(n - 1);
}

namespace {

// Steps needed to reach `to` from (from, start); nullopt if not within max_steps.
std::optional<std::uint64_t> bfs_steps(const EdgePeriodicGraph& g, VertexId from, VertexId to,
                                       std::uint64_t start, std::uint64_t max_steps) {
    if (from == to)
        return 0;
    const int n = g.graph().vertex_count();
    std::vector<char> frontier(static_cast<std::size_t>(n), 0);
    std::vector<char> next(static_cast<std::size_t>(n), 0);
    frontier[static_cast<std::size_t>(from)] = 1;
    for (std::uint64_t s = 0; s < max_steps; ++s) {
        std::fill(next.begin(), next.end(), 0);
        bool any = false;
        for (int v = 0; v < n; ++v) {
            if (!frontier[static_cast<std::size_t>(v)])
                continue;
            next[static_cast<std::size_t>(v)] = 1; // wait
            any = true;
            for (VertexId w : g.graph().neighbors(v)) {
                const auto idx = g.graph().edge_index(v, w);
                if (g.edge_present(*idx, start + s))
                    next[static_cast<std::size_t>(w)] = 1;
            }
        }
        if (!any)
            return std::nullopt;
        if (next[static_cast<std::size_t>(to)])
            return s + 1;
        std::swap(frontier, next);
    }
    return std::nullopt;
}

// Lexicographically smallest shortest walk from (from, start) arriving in
// exactly `steps` steps: prefer crossing an edge over waiting, then the
// smallest next vertex, provided the rest still completes on time.
std::vector<Move> reconstruct_walk(const EdgePeriodicGraph& g, VertexId from, VertexId to,
                                   std::uint64_t start, std::uint64_t steps) {
    const int n = g.graph().vertex_count();
    // good[s][v]: `to` reachable from (v, start+s) within steps-s moves.
    std::vector<std::vector<char>> good(static_cast<std::size_t>(steps) + 1,
                                        std::vector<char>(static_cast<std::size_t>(n), 0));
    good[static_cast<std::size_t>(steps)][static_cast<std::size_t>(to)] = 1;
    for (std::uint64_t s = steps; s-- > 0;) {
        for (int v = 0; v < n; ++v) {
            if (good[static_cast<std::size_t>(s) + 1][static_cast<std::size_t>(v)]) {
                good[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] = 1;
                continue;
            }
            for (VertexId w : g.graph().neighbors(v)) {
                const auto idx = g.graph().edge_index(v, w);
                if (g.edge_present(*idx, start + s) &&
                    good[static_cast<std::size_t>(s) + 1][static_cast<std::size_t>(w)]) {
                    good[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] = 1;
                    break;
                }
            }
        }
    }
    std::vector<Move> walk;
    VertexId at = from;
    for (std::uint64_t s = 0; s < steps; ++s) {
        VertexId chosen = at; // wait by default
        for (VertexId w : g.graph().neighbors(at)) {
            const auto idx = g.graph().edge_index(at, w);
            if (g.edge_present(*idx, start + s) &&
                good[static_cast<std::size_t>(s) + 1][static_cast<std::size_t>(w)]) {
                chosen = w;
                break;
            }
        }
        if (chosen == at && !good[static_cast<std::size_t>(s) + 1][static_cast<std::size_t>(at)])
            throw Error{"walk reconstruction lost the target"}; // unreachable by construction
        walk.push_back({start + s, at, chosen});
        at = chosen;
    }
    return walk;
}

} // namespace

TraversalResult solve_st_oracle(const TraversalQuery& q, std::uint64_t cap) {
    const std::uint64_t period = global_period(q.epg);
    if (period > cap)
        throw CapExceeded{"global period " + std::to_string(period) + " exceeds oracle cap " +
                          std::to_string(cap)};
    TraversalResult r;
    if (q.from == q.to) {
        r.reachable = true;
        r.feasible = true;
        return r;
    }
    const std::uint64_t horizon = traversal_horizon(q.epg);
    std::optional<std::uint64_t> best_k;
    std::uint64_t best_t = 0;
    for (std::uint64_t t = 0; t < period; ++t) {
        const std::uint64_t limit = best_k ? *best_k - 1 : horizon;
        if (limit == 0)
            break;
        if (auto k = bfs_steps(q.epg, q.from, q.to, t, limit)) {
            best_k = *k;
            best_t = t;
        }
    }
    if (!best_k)
        return r;
    r.reachable = true;
    r.start_t = best_t;
    r.arrival_t = best_t + *best_k;
    r.feasible = *best_k <= q.budget;
    r.walk = reconstruct_walk(q.epg, q.from, q.to, best_t, *best_k);
    return r;
}

StartProfile optimal_starts(const EdgePeriodicGraph& g, VertexId from, VertexId to, std::uint64_t cap) {
    const std::uint64_t period = global_period(g);
    if (period > cap)
        throw CapExceeded{"global period exceeds cap"};
    StartProfile profile;
    if (from == to) {
        profile.min_traversal_time = 0;
        for (std::uint64_t t = 0; t < period; ++t)
            profile.optimal_starts.push_back(t);
        return profile;
    }
    const std::uint64_t horizon = traversal_horizon(g);
    std::vector<std::optional<std::uint64_t>> k_for(static_cast<std::size_t>(period));
    for (std::uint64_t t = 0; t < period; ++t) {
        k_for[static_cast<std::size_t>(t)] = bfs_steps(g, from, to, t, horizon);
        if (k_for[static_cast<std::size_t>(t)] &&
            (!profile.min_traversal_time || *k_for[static_cast<std::size_t>(t)] < *profile.min_traversal_time))
            profile.min_traversal_time = k_for[static_cast<std::size_t>(t)];
    }
    if (profile.min_traversal_time)
        for (std::uint64_t t = 0; t < period; ++t)
            if (k_for[static_cast<std::size_t>(t)] == profile.min_traversal_time)
                profile.optimal_starts.push_back(t);
    return profile;
}

PathSchedule solve_st_path_schedule(const EdgePeriodicGraph& g, const std::vector<VertexId>& path) {
    if (path.empty())
        throw InvalidInput{"path must contain at least one vertex"};
    {
        std::vector<VertexId> sorted{path};
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidInput{"path must be vertex simple"};
    }
    const std::size_t r = path.size() - 1;
    if (r == 0)
        return PathSchedule{};

    std::vector<const BinaryLabel*> labels;
    for (std::size_t i = 0; i < r; ++i) {
        const auto idx = g.graph().edge_index(path[i], path[i + 1]);
        if (!idx)
            throw InvalidInput{"path uses a non-edge {" + std::to_string(path[i]) + "," +
                               std::to_string(path[i + 1]) + "}"};
        labels.push_back(&g.label(*idx));
    }

    // Level i holds, per residue class of t_1, the smallest offset d = t_i - t_1
    // that some choice of 1-positions for edges 1..i achieves. A class with a
    // larger offset is dominated: the same refinements cost strictly more span.
    using Level = std::map<ResidueClassSet::Class, std::uint64_t>;
    Level level;
    for (std::size_t j : labels[0]->one_positions())
        level.emplace(ResidueClassSet::Class{j, labels[0]->length()}, 0);

    for (std::size_t i = 1; i < r; ++i) {
        const std::uint64_t m = labels[i]->length();
        const auto ones = labels[i]->one_positions();
        Level next;
        for (const auto& [cls, d] : level) {
            for (std::uint64_t delta = 1; delta <= m; ++delta) {
                const std::uint64_t dd = d + delta;
                for (std::size_t j : ones) {
                    // t_i+1 = t_1 + dd must hit 1-position j: t_1 == j - dd (mod m)
                    const std::uint64_t res = (j + m - dd % m) % m;
                    if (auto merged = crt_combine(cls.residue, cls.modulus, res, m)) {
                        auto [it, inserted] = next.emplace(*merged, dd);
                        if (!inserted && dd < it->second)
                            it->second = dd;
                    }
                }
            }
        }
        level = std::move(next);
    }

    // Minimal span, then minimal start t_1.
    std::uint64_t best_d = 0, best_t1 = 0;
    bool found = false;
    for (const auto& [cls, d] : level) {
        if (!found || d < best_d || (d == best_d && cls.residue < best_t1)) {
            best_d = d;
            best_t1 = cls.residue;
            found = true;
        }
    }
    if (!found)
        throw Error{"path schedule search found no assignment"}; // cannot happen: labels have 1s

    // Concrete times: greedy earliest choices from t_1 give the lexicographically
    // smallest edge-time vector and cannot exceed the DP-proven span.
    PathSchedule s;
    s.start = best_t1;
    s.edge_times.push_back(next_one(*labels[0], best_t1));
    for (std::size_t i = 1; i < r; ++i)
        s.edge_times.push_back(next_one(*labels[i], s.edge_times.back() + 1));
    s.span = s.edge_times.back() - s.edge_times.front() + 1;
    if (s.edge_times.front() != best_t1 || s.span != best_d + 1)
        throw Error{"path schedule reconstruction disagrees with the search"};
    return s;
}

std::optional<PathSchedule> solve_st_path(const EdgePeriodicGraph& g, const std::vector<VertexId>& path,
                                          std::uint64_t k) {
    PathSchedule s = solve_st_path_schedule(g, path);
    if (s.span > k)
        return std::nullopt;
    return s;
}

namespace {

void dfs_paths(const StaticGraph& g, VertexId at, VertexId to, std::vector<VertexId>& current,
               std::vector<char>& visited, std::vector<std::vector<VertexId>>& out, std::size_t budget) {
    if (at == to) {
        if (out.size() >= budget)
            throw PathBudgetExceeded{"more than " + std::to_string(budget) + " simple paths"};
        out.push_back(current);
        return;
    }
    for (VertexId w : g.neighbors(at)) {
        if (visited[static_cast<std::size_t>(w)])
            continue;
        visited[static_cast<std::size_t>(w)] = 1;
        current.push_back(w);
        dfs_paths(g, w, to, current, visited, out, budget);
        current.pop_back();
        visited[static_cast<std::size_t>(w)] = 0;
    }
}

} // namespace

std::vector<std::vector<VertexId>> enumerate_simple_paths(const StaticGraph& g, VertexId from, VertexId to,
                                                          std::size_t budget) {
    std::vector<std::vector<VertexId>> out;
    std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<VertexId> current{from};
    visited[static_cast<std::size_t>(from)] = 1;
    dfs_paths(g, from, to, current, visited, out, budget);
    return out;
}

TraversalResult solve_st(const TraversalQuery& q, std::size_t path_budget) {
    const auto paths = enumerate_simple_paths(q.epg.graph(), q.from, q.to, path_budget);
    std::optional<PathSchedule> best;
    const std::vector<VertexId>* best_path = nullptr;
    for (const auto& path : paths) {
        PathSchedule s = solve_st_path_schedule(q.epg, path);
        const bool better =
            !best || s.span < best->span ||
            (s.span == best->span &&
             (s.start < best->start || (s.start == best->start && s.edge_times < best->edge_times)));
        if (better) {
            best = std::move(s);
            best_path = &path;
        }
    }
    if (!best)
        return TraversalResult{};
    return result_from_schedule(*best_path, *best, q.budget);
}

std::optional<std::uint64_t> earliest_arrival(const EdgePeriodicGraph& g, VertexId from, VertexId to,
                                              std::uint64_t start_t, std::uint64_t node_cap) {
    if (from == to)
        return start_t;
    const std::uint64_t horizon = traversal_horizon(g);
    const auto nodes = static_cast<unsigned __int128>(g.graph().vertex_count()) * (horizon + 1);
    if (nodes > node_cap)
        throw MemoryBudgetExceeded{"time-expanded search exceeds the node cap"};
    if (auto steps = bfs_steps(g, from, to, start_t, horizon))
        return start_t + *steps;
    return std::nullopt;
}

std::optional<std::uint64_t> latest_departure(const EdgePeriodicGraph& g, VertexId from, VertexId to,
                                              std::uint64_t deadline_t, std::uint64_t node_cap) {
    const std::uint64_t horizon = traversal_horizon(g);
    const std::uint64_t window = std::min(deadline_t, horizon);
    const std::uint64_t lowest = deadline_t - window;
    const int n = g.graph().vertex_count();
    const auto nodes = static_cast<unsigned __int128>(n) * (window + 1);
    if (nodes > node_cap)
        throw MemoryBudgetExceeded{"time-expanded search exceeds the node cap"};

    // good[s - lowest][v]: `to` reachable from (v, s) no later than deadline_t.
    std::vector<std::vector<char>> good(static_cast<std::size_t>(window) + 1,
                                        std::vector<char>(static_cast<std::size_t>(n), 0));
    good[static_cast<std::size_t>(window)][static_cast<std::size_t>(to)] = 1;
    for (std::uint64_t s = window; s-- > 0;) {
        for (int v = 0; v < n; ++v) {
            if (v == to || good[static_cast<std::size_t>(s) + 1][static_cast<std::size_t>(v)]) {
                good[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] = 1;
                continue;
            }
            for (VertexId w : g.graph().neighbors(v)) {
                const auto idx = g.graph().edge_index(v, w);
                if (g.edge_present(*idx, lowest + s) &&
                    good[static_cast<std::size_t>(s) + 1][static_cast<std::size_t>(w)]) {
                    good[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] = 1;
                    break;
                }
            }
        }
    }
    for (std::uint64_t s = window + 1; s-- > 0;)
        if (good[static_cast<std::size_t>(s)][static_cast<std::size_t>(from)])
            return lowest + s;
    return std::nullopt;
}

bool walk_valid(const EdgePeriodicGraph& g, const TraversalResult& r, VertexId from, VertexId to) {
    if (!r.reachable)
        return r.walk.empty();
    if (r.arrival_t < r.start_t || r.walk.size() != r.arrival_t - r.start_t)
        return false;
    VertexId at = from;
    std::uint64_t now = r.start_t;
    for (const Move& m : r.walk) {
        if (m.time != now || m.from != at)
            return false;
        if (!m.is_wait()) {
            const auto idx = g.graph().edge_index(m.from, m.to);
            if (!idx || !g.edge_present(*idx, m.time))
                return false;
        }
        at = m.to;
        ++now;
    }
    return at == to && now == r.arrival_t;
}

} // namespace epg
