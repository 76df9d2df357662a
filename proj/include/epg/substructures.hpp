#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "epg/epg.hpp"
#include "epg/pca.hpp"

namespace epg {

inline constexpr std::uint64_t kDefaultSnapshotLcmCap = 1'000'000;
inline constexpr std::size_t kDefaultSubsetBudget = std::size_t{1} << 20;
inline constexpr int kDefaultMinorHostCap = 13;

// Injective map pattern-vertex -> host-vertex whose image induces a copy of
// the pattern (induced semantics). Exact backtracking with degree pruning;
// deterministic.
std::optional<std::vector<VertexId>> induced_iso(const StaticGraph& host, const StaticGraph& pattern);

// Injective map where pattern edges map to host edges; host non-edges between
// image vertices are allowed (plain subgraph semantics).
std::optional<std::vector<VertexId>> subgraph_monomorphism(const StaticGraph& host,
                                                           const StaticGraph& pattern);

// Exact minor test: disjoint connected branch sets, one per pattern vertex,
// with a host edge between the sets of every pattern edge. Exponential;
// refuses hosts larger than host_cap vertices (SizeBudgetExceeded).
bool has_minor(const StaticGraph& host, const StaticGraph& pattern, int host_cap = kDefaultMinorHostCap);

struct EmbeddingWitness {
    std::uint64_t t = 0;
    std::vector<VertexId> vertex_map; // pattern vertex -> host vertex
};

// Is the pattern an induced subgraph of some snapshot? Iterates vertex
// subsets W of pattern size; scans t within the exact lcm of the labels
// inside W (snapshots restricted to W repeat with that period). Returns the
// minimum witness time step. Throws CapExceeded when some per-W lcm exceeds
// lcm_cap.
std::optional<EmbeddingWitness> epg_subgraph(const EdgePeriodicGraph& g, const StaticGraph& pattern,
                                             std::uint64_t lcm_cap = kDefaultSnapshotLcmCap);

// Is there a time step whose snapshot has exactly this edge set? Reduced to
// PCA: kept edges contribute their labels, dropped edges their complements.
// An always-present edge outside the set makes the answer immediately None.
std::optional<std::uint64_t> present_edges(const EdgePeriodicGraph& g, const std::vector<Edge>& subset,
                                           std::size_t class_budget = kDefaultClassBudget);

struct SubstructureBudgets {
    std::size_t subset_budget = kDefaultSubsetBudget;
    std::size_t class_budget = kDefaultClassBudget;
    std::uint64_t lcm_cap = kDefaultSnapshotLcmCap;
    int minor_host_cap = kDefaultMinorHostCap;
};

// The four time-step existence problems, solved by enumerating candidate
// snapshot edge sets E' (small edge sets first for the "present" problems,
// large first for the "free" ones) and asking present_edges. Edgeless minor
// patterns reduce to comparing vertex counts.
std::optional<std::uint64_t> epg_subgraph_free(const EdgePeriodicGraph& g, const StaticGraph& pattern,
                                               const SubstructureBudgets& budgets = {});
std::optional<std::uint64_t> epg_minor(const EdgePeriodicGraph& g, const StaticGraph& pattern,
                                       const SubstructureBudgets& budgets = {});
std::optional<std::uint64_t> epg_minor_free(const EdgePeriodicGraph& g, const StaticGraph& pattern,
                                            const SubstructureBudgets& budgets = {});

enum class MinorDichotomy {
    cyclic,       // contains a cycle
    heavy_forest, // a component with two degree->=3 vertices, or any degree->=4 vertex
    light_forest, // per component: no degree->=4 vertex, at most one of degree 3
};

// For light forests a minor is present iff it is present as a plain subgraph,
// so epg_minor answers those by subgraph-style search.
MinorDichotomy minor_dichotomy_class(const StaticGraph& pattern);

enum class SubstructureProblem { subgraph, subgraph_free, minor, minor_free };

std::string to_string(SubstructureProblem p);

// One entry point for all four problems (epg_subgraph's witness reduced to its
// time step).
std::optional<std::uint64_t> solve_substructure(const EdgePeriodicGraph& g, const StaticGraph& pattern,
                                                SubstructureProblem problem,
                                                const SubstructureBudgets& budgets = {});

// Independent reference: scan every t in [0, global period) and apply the
// static predicate to the snapshot. Throws CapExceeded past period_cap.
std::optional<std::uint64_t> naive_substructure_scan(const EdgePeriodicGraph& g,
                                                     const StaticGraph& pattern,
                                                     SubstructureProblem problem,
                                                     std::uint64_t period_cap = 10'000,
                                                     int minor_host_cap = kDefaultMinorHostCap);

} // namespace epg
