#include "epg/substructures.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace epg {

namespace {

// Backtracking injection of the pattern into the host. `induced` demands
// host-edge iff pattern-edge between mapped vertices; otherwise only
// pattern-edge implies host-edge.
class IsoSearch {
public:
    IsoSearch(const StaticGraph& host, const StaticGraph& pattern, bool induced)
        : host_(host), pattern_(pattern), induced_(induced),
          map_(static_cast<std::size_t>(pattern.vertex_count()), -1),
          used_(static_cast<std::size_t>(host.vertex_count()), 0) {
        // High-degree pattern vertices first; stable, so deterministic.
        order_.resize(static_cast<std::size_t>(pattern.vertex_count()));
        for (std::size_t i = 0; i < order_.size(); ++i)
            order_[i] = static_cast<VertexId>(i);
        std::stable_sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) {
            return pattern.degree(a) > pattern.degree(b);
        });
    }

    std::optional<std::vector<VertexId>> run() {
        if (pattern_.vertex_count() > host_.vertex_count())
            return std::nullopt;
        if (place(0))
            return map_;
        return std::nullopt;
    }

private:
    bool place(std::size_t depth) {
        if (depth == order_.size())
            return true;
        const VertexId pv = order_[depth];
        for (VertexId hv = 0; hv < host_.vertex_count(); ++hv) {
            if (used_[static_cast<std::size_t>(hv)])
                continue;
            if (host_.degree(hv) < pattern_.degree(pv))
                continue;
            if (!consistent(pv, hv))
                continue;
            map_[static_cast<std::size_t>(pv)] = hv;
            used_[static_cast<std::size_t>(hv)] = 1;
            if (place(depth + 1))
                return true;
            map_[static_cast<std::size_t>(pv)] = -1;
            used_[static_cast<std::size_t>(hv)] = 0;
        }
        return false;
    }

    bool consistent(VertexId pv, VertexId hv) const {
        for (VertexId pu = 0; pu < pattern_.vertex_count(); ++pu) {
            const VertexId hu = map_[static_cast<std::size_t>(pu)];
            if (hu < 0)
                continue;
            const bool pe = pattern_.has_edge(pu, pv);
            const bool he = host_.has_edge(hu, hv);
            if (pe && !he)
                return false;
            if (induced_ && !pe && he)
                return false;
        }
        return true;
    }

    const StaticGraph& host_;
    const StaticGraph& pattern_;
    bool induced_;
    std::vector<VertexId> order_;
    std::vector<VertexId> map_;
    std::vector<char> used_;
};

} // namespace

std::optional<std::vector<VertexId>> induced_iso(const StaticGraph& host, const StaticGraph& pattern) {
    return IsoSearch{host, pattern, true}.run();
}

std::optional<std::vector<VertexId>> subgraph_monomorphism(const StaticGraph& host,
                                                           const StaticGraph& pattern) {
    return IsoSearch{host, pattern, false}.run();
}

namespace {

using Mask = std::uint32_t;

bool mask_connected(const std::vector<Mask>& neighbor_masks, Mask subset) {
    if (subset == 0)
        return false;
    const Mask seed = subset & (~subset + 1); // lowest bit
    Mask reached = seed;
    for (;;) {
        Mask frontier = 0;
        Mask scan = reached;
        while (scan) {
            const int v = std::countr_zero(scan);
            scan &= scan - 1;
            frontier |= neighbor_masks[static_cast<std::size_t>(v)];
        }
        const Mask grown = (reached | frontier) & subset;
        if (grown == reached)
            break;
        reached = grown;
    }
    return reached == subset;
}

struct MinorSearch {
    const StaticGraph& pattern;
    const std::vector<Mask>& neighbor_masks;
    const std::vector<Mask>& connected_subsets;
    std::vector<Mask> branch; // branch[i]: host vertices of pattern vertex i

    bool assign(int i, Mask used, int host_n) {
        if (i == pattern.vertex_count())
            return true;
        const int remaining_needed = pattern.vertex_count() - i;
        for (Mask s : connected_subsets) {
            if (s & used)
                continue;
            if (host_n - std::popcount(used | s) < remaining_needed - 1)
                continue;
            bool ok = true;
            for (VertexId j = 0; ok && j < i; ++j)
                if (pattern.has_edge(j, i)) {
                    // host edge needed between branch sets
                    Mask adj = 0;
                    Mask scan = branch[static_cast<std::size_t>(j)];
                    while (scan) {
                        const int v = std::countr_zero(scan);
                        scan &= scan - 1;
                        adj |= neighbor_masks[static_cast<std::size_t>(v)];
                    }
                    ok = (adj & s) != 0;
                }
            if (!ok)
                continue;
            branch[static_cast<std::size_t>(i)] = s;
            if (assign(i + 1, used | s, host_n))
                return true;
        }
        return false;
    }
};

} // namespace

bool has_minor(const StaticGraph& host, const StaticGraph& pattern, int host_cap) {
    if (host.vertex_count() > host_cap)
        throw SizeBudgetExceeded{"minor search on " + std::to_string(host.vertex_count()) +
                                 " host vertices exceeds the cap of " + std::to_string(host_cap)};
    if (pattern.vertex_count() == 0)
        return true;
    if (pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count())
        return false;

    const int n = host.vertex_count();
    std::vector<Mask> neighbor_masks(static_cast<std::size_t>(n), 0);
    for (const Edge& e : host.edges()) {
        neighbor_masks[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
        neighbor_masks[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
    }
    std::vector<Mask> connected;
    for (Mask s = 1; s < (Mask{1} << n); ++s)
        if (mask_connected(neighbor_masks, s))
            connected.push_back(s);
    // Small branch sets first; minors that exist usually have small models.
    std::stable_sort(connected.begin(), connected.end(),
                     [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });

    MinorSearch search{pattern, neighbor_masks, connected,
                       std::vector<Mask>(static_cast<std::size_t>(pattern.vertex_count()), 0)};
    return search.assign(0, 0, n);
}

namespace {

// Sub-EPG induced on a vertex subset plus the exact lcm of its labels.
struct InducedEpg {
    EdgePeriodicGraph epg;
    std::uint64_t lcm;
};

InducedEpg induce_epg(const EdgePeriodicGraph& g, const std::vector<VertexId>& subset,
                      std::uint64_t lcm_cap) {
    std::vector<int> index(static_cast<std::size_t>(g.graph().vertex_count()), -1);
    for (std::size_t i = 0; i < subset.size(); ++i)
        index[static_cast<std::size_t>(subset[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    std::vector<BinaryLabel> labels;
    std::uint64_t lcm = 1;
    const auto& all = g.graph().edges();
    for (std::size_t i = 0; i < all.size(); ++i) {
        const int iu = index[static_cast<std::size_t>(all[i].u)];
        const int iv = index[static_cast<std::size_t>(all[i].v)];
        if (iu < 0 || iv < 0)
            continue;
        edges.emplace_back(iu, iv);
        labels.push_back(g.label(i));
        lcm = checked_lcm(lcm, g.label(i).length());
        if (lcm > lcm_cap)
            throw CapExceeded{"per-subset label lcm exceeds the cap of " + std::to_string(lcm_cap)};
    }
    // edges come pre-sorted: `all` is sorted and induced indices preserve order
    return InducedEpg{EdgePeriodicGraph{StaticGraph{static_cast<int>(subset.size()), std::move(edges)},
                                        std::move(labels)},
                      lcm};
}

// Lexicographically next size-k combination of {0..n-1}; false when done.
bool next_combination(std::vector<VertexId>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - (k - i)) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

// Scans every size-h vertex subset over its own label lcm and keeps the
// smallest witness time step (the restricted snapshot repeats per subset, so
// the per-subset minimum is already the global minimum for that placement).
template <typename StaticCheck>
std::optional<EmbeddingWitness> subset_time_scan(const EdgePeriodicGraph& g, const StaticGraph& pattern,
                                                 std::uint64_t lcm_cap, StaticCheck check) {
    const int h = pattern.vertex_count();
    const int n = g.graph().vertex_count();
    if (h > n)
        return std::nullopt;
    if (h == 0)
        return EmbeddingWitness{0, {}};
    std::optional<EmbeddingWitness> best;
    std::vector<VertexId> subset(static_cast<std::size_t>(h));
    for (int i = 0; i < h; ++i)
        subset[static_cast<std::size_t>(i)] = i;
    do {
        const InducedEpg sub = induce_epg(g, subset, lcm_cap);
        const std::uint64_t limit = best ? std::min(sub.lcm, best->t) : sub.lcm;
        for (std::uint64_t t = 0; t < limit; ++t) {
            if (auto map = check(snapshot(sub.epg, t), pattern)) {
                EmbeddingWitness w;
                w.t = t;
                for (VertexId hv : *map)
                    w.vertex_map.push_back(subset[static_cast<std::size_t>(hv)]);
                best = std::move(w);
                break;
            }
        }
        if (best && best->t == 0)
            break;
    } while (next_combination(subset, n));
    return best;
}

} // namespace

std::optional<EmbeddingWitness> epg_subgraph(const EdgePeriodicGraph& g, const StaticGraph& pattern,
                                             std::uint64_t lcm_cap) {
    return subset_time_scan(g, pattern, lcm_cap, [](const StaticGraph& snap, const StaticGraph& p) {
        return induced_iso(snap, p);
    });
}

std::optional<std::uint64_t> present_edges(const EdgePeriodicGraph& g, const std::vector<Edge>& subset,
                                           std::size_t class_budget) {
    std::vector<char> keep(g.graph().edge_count(), 0);
    for (const Edge& e : subset) {
        const auto idx = g.graph().edge_index(e.u, e.v);
        if (!idx)
            throw InvalidInput{"present_edges subset contains a non-edge"};
        keep[*idx] = 1;
    }
    PcaInstance x;
    for (std::size_t i = 0; i < g.graph().edge_count(); ++i) {
        if (keep[i]) {
            x.strings.push_back(g.label(i));
        } else {
            if (g.label(i).all_ones())
                return std::nullopt; // the edge can never be absent
            x.strings.push_back(complement(g.label(i)));
        }
    }
    return solve_pca(x, class_budget);
}

MinorDichotomy minor_dichotomy_class(const StaticGraph& pattern) {
    if (pattern.has_cycle())
        return MinorDichotomy::cyclic;
    const auto comp = pattern.component_ids();
    std::vector<int> deg3_in_component(comp.size(), 0);
    for (VertexId v = 0; v < pattern.vertex_count(); ++v) {
        if (pattern.degree(v) >= 4)
            return MinorDichotomy::heavy_forest;
        if (pattern.degree(v) >= 3) {
            const auto c = static_cast<std::size_t>(comp[static_cast<std::size_t>(v)]);
            if (++deg3_in_component[c] >= 2)
                return MinorDichotomy::heavy_forest;
        }
    }
    return MinorDichotomy::light_forest;
}

namespace {

// E' subsets ordered by popcount (ascending or descending), ties by value.
std::vector<std::uint32_t> ordered_subsets(std::size_t m, bool ascending, std::size_t budget) {
    if (m >= 31 || (std::size_t{1} << m) > budget)
        throw SubsetBudgetExceeded{"2^" + std::to_string(m) + " edge subsets exceed the budget"};
    std::vector<std::uint32_t> subsets(std::size_t{1} << m);
    for (std::uint32_t s = 0; s < subsets.size(); ++s)
        subsets[s] = s;
    std::stable_sort(subsets.begin(), subsets.end(), [ascending](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return ascending ? pa < pb : pa > pb;
    });
    return subsets;
}

template <typename Predicate>
std::optional<std::uint64_t> edge_subset_scan(const EdgePeriodicGraph& g, bool ascending,
                                              const SubstructureBudgets& budgets, Predicate pred) {
    const std::size_t m = g.graph().edge_count();
    const auto& edges = g.graph().edges();
    for (std::uint32_t s : ordered_subsets(m, ascending, budgets.subset_budget)) {
        std::vector<Edge> subset;
        for (std::size_t i = 0; i < m; ++i)
            if (s & (std::uint32_t{1} << i))
                subset.push_back(edges[i]);
        const StaticGraph candidate{g.graph().vertex_count(), std::vector<Edge>{subset}};
        if (!pred(candidate))
            continue;
        if (auto t = present_edges(g, subset, budgets.class_budget))
            return t;
    }
    return std::nullopt;
}

} // namespace

std::optional<std::uint64_t> epg_subgraph_free(const EdgePeriodicGraph& g, const StaticGraph& pattern,
                                               const SubstructureBudgets& budgets) {
    return edge_subset_scan(g, false, budgets, [&](const StaticGraph& candidate) {
        return !induced_iso(candidate, pattern).has_value();
    });
}

std::optional<std::uint64_t> epg_minor(const EdgePeriodicGraph& g, const StaticGraph& pattern,
                                       const SubstructureBudgets& budgets) {
    if (pattern.edge_count() == 0)
        return g.graph().vertex_count() >= pattern.vertex_count() ? std::optional<std::uint64_t>{0}
                                                                  : std::nullopt;
    if (minor_dichotomy_class(pattern) == MinorDichotomy::light_forest) {
        // Such a minor is already a plain subgraph; subset/time scan is cheaper
        // than 2^|E| and avoids the minor oracle entirely.
        auto witness = subset_time_scan(g, pattern, budgets.lcm_cap,
                                        [](const StaticGraph& snap, const StaticGraph& p) {
                                            return subgraph_monomorphism(snap, p);
                                        });
        if (!witness)
            return std::nullopt;
        return witness->t;
    }
    return edge_subset_scan(g, true, budgets, [&](const StaticGraph& candidate) {
        return has_minor(candidate, pattern, budgets.minor_host_cap);
    });
}

std::optional<std::uint64_t> epg_minor_free(const EdgePeriodicGraph& g, const StaticGraph& pattern,
                                            const SubstructureBudgets& budgets) {
    if (pattern.edge_count() == 0) {
        // Vertices persist across snapshots, so an edgeless pattern is a minor
        // of every snapshot or of none.
        return g.graph().vertex_count() < pattern.vertex_count() ? std::optional<std::uint64_t>{0}
                                                                 : std::nullopt;
    }
    return edge_subset_scan(g, false, budgets, [&](const StaticGraph& candidate) {
        return !has_minor(candidate, pattern, budgets.minor_host_cap);
    });
}

std::string to_string(SubstructureProblem p) {
    switch (p) {
    case SubstructureProblem::subgraph: return "subgraph";
    case SubstructureProblem::subgraph_free: return "subgraph-free";
    case SubstructureProblem::minor: return "minor";
    default: return "minor-free";
    }
}

std::optional<std::uint64_t> solve_substructure(const EdgePeriodicGraph& g, const StaticGraph& pattern,
                                                SubstructureProblem problem,
                                                const SubstructureBudgets& budgets) {
    switch (problem) {
    case SubstructureProblem::subgraph: {
        auto witness = epg_subgraph(g, pattern, budgets.lcm_cap);
        if (!witness)
            return std::nullopt;
        return witness->t;
    }
    case SubstructureProblem::subgraph_free:
        return epg_subgraph_free(g, pattern, budgets);
    case SubstructureProblem::minor:
        return epg_minor(g, pattern, budgets);
    default:
        return epg_minor_free(g, pattern, budgets);
    }
}

std::optional<std::uint64_t> naive_substructure_scan(const EdgePeriodicGraph& g,
                                                     const StaticGraph& pattern,
                                                     SubstructureProblem problem,
                                                     std::uint64_t period_cap, int minor_host_cap) {
    const std::uint64_t period = global_period(g);
    if (period > period_cap)
        throw CapExceeded{"global period " + std::to_string(period) + " exceeds the naive-scan cap"};
    for (std::uint64_t t = 0; t < period; ++t) {
        const StaticGraph snap = snapshot(g, t);
        bool hit = false;
        switch (problem) {
        case SubstructureProblem::subgraph:
            hit = induced_iso(snap, pattern).has_value();
            break;
        case SubstructureProblem::subgraph_free:
            hit = !induced_iso(snap, pattern).has_value();
            break;
        case SubstructureProblem::minor:
            hit = has_minor(snap, pattern, minor_host_cap);
            break;
        default:
            hit = !has_minor(snap, pattern, minor_host_cap);
            break;
        }
        if (hit)
            return t;
    }
    return std::nullopt;
}

} // namespace epg
