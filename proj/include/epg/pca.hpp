#pragma once

#include <cstdint>
#include <optional>

#include "epg/graph.hpp"
#include "epg/pca_types.hpp"

namespace epg {

inline constexpr std::size_t kDefaultClassBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultBruteForceCap = 1'000'000;

// Reference oracle: scans every t in [0, lcm of lengths) and returns the
// smallest witness. Throws CapExceeded when the lcm exceeds the cap.
std::optional<std::uint64_t> solve_pca_bruteforce(const PcaInstance& x,
                                                  std::uint64_t cap = kDefaultBruteForceCap);

std::optional<std::uint64_t> solve_mcpca_bruteforce(const MulticoloredPcaInstance& x,
                                                    std::uint64_t cap = kDefaultBruteForceCap);

// Runs/residue-class solver: each string becomes the residue classes of its
// 1-positions; strings are folded by pairwise CRT intersection. Returns the
// minimum witness. Exponential in the worst case; the working set is bounded
// by class_budget (ClassBudgetExceeded beyond it).
std::optional<std::uint64_t> solve_pca(const PcaInstance& x,
                                       std::size_t class_budget = kDefaultClassBudget);

// Multicolored variant: classes are united within a group, intersected across groups.
std::optional<std::uint64_t> solve_mcpca(const MulticoloredPcaInstance& x,
                                         std::size_t class_budget = kDefaultClassBudget);

// Witness-set-preserving rewrite where every output string contains exactly
// one 0. All-ones inputs contribute nothing (the empty instance is YES at 0).
PcaInstance normalize_single_zero(const PcaInstance& x);

// Answer-equivalent multicolored instance: group i holds, per 1-position j of
// string i, the string with a single 1 at j.
MulticoloredPcaInstance split_strings(const PcaInstance& x);

// Multicolored-clique encoding: one string per part pair (i < j) of length
// p_i * p_j, reading 1 exactly when the pairs index an edge between the parts.
// Primes are the smallest distinct primes >= |V_i|, assigned in input order.
// Throws InvalidPartition for a bad partition, UnsatisfiableByConstruction
// when some pair has no edges at all (the source has no multicolored clique).
PcaInstance mcc_to_pca(const StaticGraph& g, const std::vector<std::vector<VertexId>>& partition);

// Primes chosen by mcc_to_pca, exposed for structural checks.
std::vector<std::uint64_t> mcc_primes(const std::vector<std::vector<VertexId>>& partition);

// True iff every string of the instance reads 1 at t.
bool pca_witness_valid(const PcaInstance& x, std::uint64_t t);
bool mcpca_witness_valid(const MulticoloredPcaInstance& x, std::uint64_t t);

} // namespace epg
