#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "epg/substructures.hpp"
#include "epg/traversal.hpp"

namespace epg {

enum class ExpectedAnswer { yes, no, unknown };

std::string to_string(ExpectedAnswer e);

struct SubstructureInstance {
    EdgePeriodicGraph epg;
    StaticGraph pattern;
    SubstructureProblem problem;
};

// Output of a reduction: the target instance plus the answer it must have,
// derived by solving the source with an oracle during generation.
struct GeneratedInstance {
    std::variant<TraversalQuery, SubstructureInstance, PcaInstance> payload;
    ExpectedAnswer expected = ExpectedAnswer::unknown;
    std::string reduction;
    std::string source_digest;
};

// ---- PCA-sourced gadgets ----------------------------------------------------
//
// Each generator realizes one hardness construction: the image is a
// yes-instance of its target problem iff the source is (except the edgeless
// subgraph-free gadget, where yes/no flips). Arbitrary choices the
// constructions leave open (cycle edge, neighbor subsets, matchings) are made
// lexicographically smallest by vertex index.

// Path with |X| edges; edge i carries x_i shifted right by i-1; budget |X|.
GeneratedInstance pca_to_st(const PcaInstance& x);

// Layered vertex-cover gadget: spine v_0..v_k, one middle vertex per group
// string, labels shifted by 2(i-1) and 2(i-1)+1; budget 2k.
GeneratedInstance mcpca_to_st(const MulticoloredPcaInstance& x);

// Identity embedding: EPG path labeled by X, pattern the same path.
GeneratedInstance pca_to_subgraph(const PcaInstance& x);

// Clique on 2k vertices whose matching carries X, everything else "1", plus
// c-2 isolated vertices; pattern edgeless on c >= 2 vertices. A complete
// clique leaves no independent set of size c, so the image is a yes-instance
// of Subgraph-Free iff X is a yes-instance.
GeneratedInstance pca_to_subgraph_free_edgeless(const PcaInstance& x, int c);

// k disjoint copies of the pattern, copy i labeled with the complement of
// x_i. Every x_i must contain a 0 (AllOnesLabel otherwise); pattern needs an edge.
GeneratedInstance pca_to_subgraph_free(const PcaInstance& x, const StaticGraph& pattern);
GeneratedInstance pca_to_minor_free(const PcaInstance& x, const StaticGraph& pattern);

// Copy of the pattern with one induced-cycle edge subdivided k-1 times; the
// subdivision path carries x_1..x_k, everything else "1".
GeneratedInstance pca_to_minor_cycle(const PcaInstance& x, const StaticGraph& pattern);

enum class TreeGadgetVariant {
    two_deg3, // a component has two vertices of degree >= 3; subdivide on the path between them
    one_deg4, // a vertex of degree >= 4 is split into two adjacent vertices, then subdivided
};

GeneratedInstance pca_to_minor_tree(const PcaInstance& x, const StaticGraph& pattern,
                                    TreeGadgetVariant variant);

// ---- QSAT-sourced gadgets ---------------------------------------------------

struct QbfLiteral {
    int variable;     // 0-based within its block
    bool negated;
    bool existential; // else universally quantified
};

// exists x-vector forall y-vector: psi, where psi is a 3-CNF over both blocks.
struct QbfFormula {
    int existential_count = 0;
    int universal_count = 0;
    std::vector<std::array<QbfLiteral, 3>> clauses;
};

// Truth of "exists x forall y: NOT psi" by exhaustive assignment.
bool exists_forall_unsat(const QbfFormula& f);

QbfFormula parse_qbf_text(const std::string& text);
std::string print_qbf(const QbfFormula& f);

// Clause-cluster graph with per-literal labels (universal -> "1", existential
// x_i -> 10^{p_i-1} positive / 01^{p_i-1} negated, p_i the i-th prime); edge
// labels are ANDs of endpoint labels; pattern K_k (subgraph-free) or K_k plus
// 2k isolated vertices (minor-free). Requires k >= 2 clauses.
GeneratedInstance qsat_to_subgraph_free(const QbfFormula& f);
GeneratedInstance qsat_to_minor_free(const QbfFormula& f);

// MCC source for the mcc_to_pca generator (pca module does the construction).
struct MccInstance {
    StaticGraph graph;
    std::vector<std::vector<VertexId>> partition;
};

// Exhaustive multicolored-clique check; the generation oracle for MCC sources.
bool has_multicolored_clique(const MccInstance& mcc);

GeneratedInstance mcc_to_pca_instance(const MccInstance& mcc);

MccInstance parse_mcc_text(const std::string& text);
std::string print_mcc(const MccInstance& mcc);

} // namespace epg
