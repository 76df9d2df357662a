#pragma once

#include <cstdint>
#include <random>

#include "epg/reductions.hpp"

namespace epg {

// Deterministic instance samplers used for corpus generation and the
// randomized test suites. All draws go through the supplied engine, so a
// fixed seed reproduces the same instances everywhere.
using Rng = std::mt19937_64;

BinaryLabel random_label(Rng& rng, std::size_t max_length, double one_probability = 0.5);
PcaInstance random_pca(Rng& rng, std::size_t max_strings, std::size_t max_length);

// Every string has both a 1 and a 0 (lengths >= 2); complement stays valid.
PcaInstance random_pca_with_zeros(Rng& rng, std::size_t max_strings, std::size_t max_length);

// Sources for the vertex-cover traversal gadget: every string has exactly one 1.
MulticoloredPcaInstance random_single_one_mcpca(Rng& rng, std::size_t max_groups,
                                                std::size_t max_per_group, std::size_t max_length);
MulticoloredPcaInstance random_mcpca(Rng& rng, std::size_t max_groups, std::size_t max_per_group,
                                     std::size_t max_length);

StaticGraph random_graph(Rng& rng, int max_vertices, double edge_probability);
EdgePeriodicGraph random_epg(Rng& rng, int max_vertices, double edge_probability,
                             std::size_t max_label_length);

QbfFormula random_qbf(Rng& rng, int clause_count, int existential_count, int universal_count);

MccInstance random_mcc(Rng& rng, std::size_t parts, std::size_t max_part_size, double edge_probability);

} // namespace epg
