#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epg/reductions.hpp"
#include "helpers.hpp"

using namespace epg;
using epg::test::make_epg;
using epg::test::make_pca;

namespace {

bool induced_map_checks_out(const StaticGraph& host, const StaticGraph& pattern,
                            const std::vector<VertexId>& map) {
    if (map.size() != static_cast<std::size_t>(pattern.vertex_count()))
        return false;
    for (VertexId u = 0; u < pattern.vertex_count(); ++u)
        for (VertexId v = u + 1; v < pattern.vertex_count(); ++v)
            if (pattern.has_edge(u, v) != host.has_edge(map[static_cast<std::size_t>(u)],
                                                        map[static_cast<std::size_t>(v)]))
                return false;
    return true;
}

} // namespace

TEST_CASE("induced isomorphism basics") {
    const StaticGraph k3 = make_clique(3);
    const StaticGraph p3 = make_path(2);
    REQUIRE(induced_iso(k3, k3).has_value());
    CHECK(induced_map_checks_out(k3, k3, *induced_iso(k3, k3)));
    CHECK_FALSE(induced_iso(k3, p3).has_value()); // induced semantics
    REQUIRE(induced_iso(make_path(3), p3).has_value());
    CHECK(induced_iso(make_path(3), StaticGraph{0, {}}).has_value()); // empty pattern
    CHECK(subgraph_monomorphism(k3, p3).has_value()); // plain subgraph semantics differ
}

TEST_CASE("induced isomorphism against exhaustive checks on random pairs") {
    Rng rng{801};
    for (int round = 0; round < 150; ++round) {
        const StaticGraph host = random_graph(rng, 6, 0.5);
        const StaticGraph pattern = random_graph(rng, 4, 0.5);
        const auto found = induced_iso(host, pattern);
        if (found)
            CHECK(induced_map_checks_out(host, pattern, *found));
        // exhaustive reference over all injections
        bool exists = false;
        std::vector<VertexId> perm(static_cast<std::size_t>(host.vertex_count()));
        for (std::size_t i = 0; i < perm.size(); ++i)
            perm[i] = static_cast<VertexId>(i);
        if (pattern.vertex_count() <= host.vertex_count()) {
            std::vector<VertexId> image(static_cast<std::size_t>(pattern.vertex_count()));
            const auto rec = [&](const auto& self, std::size_t depth, std::uint32_t used) -> bool {
                if (depth == image.size())
                    return induced_map_checks_out(host, pattern, image);
                for (VertexId v = 0; v < host.vertex_count(); ++v) {
                    if (used & (std::uint32_t{1} << v))
                        continue;
                    image[depth] = v;
                    if (self(self, depth + 1, used | (std::uint32_t{1} << v)))
                        return true;
                }
                return false;
            };
            exists = rec(rec, 0, 0);
        }
        CHECK(found.has_value() == exists);
    }
}

TEST_CASE("minor oracle basics") {
    CHECK(has_minor(make_path(1), StaticGraph{1, {}}));
    CHECK(has_minor(make_edgeless(1), StaticGraph{1, {}}));
    CHECK(has_minor(make_cycle(4), make_clique(3))); // any cycle contracts to a triangle
    CHECK(has_minor(make_cycle(5), make_clique(3)));
    CHECK(has_minor(make_clique(5), make_clique(4)));
    CHECK_FALSE(has_minor(make_path(4), make_cycle(3)));
    CHECK(has_minor(make_star(4), make_star(3)));
    CHECK_FALSE(has_minor(make_path(4), make_star(3)));
    CHECK(has_minor(StaticGraph{0, {}}, StaticGraph{0, {}}));
    CHECK_THROWS_AS(has_minor(make_clique(14), make_clique(3)), SizeBudgetExceeded);
}

TEST_CASE("minors are closed under the three operations (spot checks)") {
    // subdividing an edge keeps the original as a minor
    const StaticGraph sub{4, {{0, 2}, {2, 1}, {0, 3}, {3, 1}}}; // C_2 doubled via two subdivisions = C_4
    CHECK(has_minor(sub, make_cycle(4)));
    CHECK(has_minor(sub, make_path(3)));
    // K_4 minus an edge contains K_3
    const StaticGraph diamond{4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}};
    CHECK(has_minor(diamond, make_clique(3)));
    CHECK_FALSE(has_minor(diamond, make_clique(4)));
}

TEST_CASE("epg_subgraph on the running example") {
    const EdgePeriodicGraph g = test::fig1();
    SUBCASE("the full underlying graph first appears at t=2") {
        // brute force: all seven labels read 1 at t in {2, 14, 26}; the figure
        // shows the complete snapshot G(26)
        const auto w = epg_subgraph(g, g.graph());
        REQUIRE(w.has_value());
        CHECK(w->t == 2);
        CHECK(snapshot(g, 26).edge_count() == 7);
    }
    SUBCASE("a single edge appears at t=0") {
        const auto w = epg_subgraph(g, make_path(1));
        REQUIRE(w.has_value());
        CHECK(w->t == 0); // minimal witness across placements
        CHECK(snapshot(g, w->t).has_edge(w->vertex_map[0], w->vertex_map[1]));
    }
}

TEST_CASE("epg_subgraph equals the pca answer on identity embeddings") {
    Rng rng{888};
    for (int round = 0; round < 80; ++round) {
        const PcaInstance x = random_pca(rng, 3, 6);
        const GeneratedInstance inst = pca_to_subgraph(x);
        const auto& payload = std::get<SubstructureInstance>(inst.payload);
        const auto witness = epg_subgraph(payload.epg, payload.pattern);
        CHECK(witness.has_value() == solve_pca(x).has_value());
        if (witness)
            CHECK(pca_witness_valid(x, witness->t));
    }
}

TEST_CASE("epg_subgraph agrees with the naive period scan") {
    Rng rng{889};
    for (int round = 0; round < 60; ++round) {
        const EdgePeriodicGraph g = random_epg(rng, 5, 0.5, 4);
        const StaticGraph pattern = random_graph(rng, 3, 0.5);
        const auto fast = epg_subgraph(g, pattern);
        const auto slow = naive_substructure_scan(g, pattern, SubstructureProblem::subgraph);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) {
            const auto snap = snapshot(g, fast->t);
            std::vector<VertexId> image = fast->vertex_map;
            CHECK(induced_map_checks_out(snap, pattern, image));
        }
    }
}

TEST_CASE("present_edges on the running example") {
    const EdgePeriodicGraph g = test::fig1();
    CHECK(present_edges(g, {}) == 33); // first K_2-free step
    std::vector<Edge> all{g.graph().edges()};
    CHECK(present_edges(g, all) == 2); // first complete snapshot
    CHECK(present_edges(g, {Edge{2, 5}, Edge{4, 5}}) == 0);
    CHECK(present_edges(g, {Edge{1, 2}, Edge{2, 3}}) == 1);
}

TEST_CASE("present_edges trivia") {
    const auto ones = make_epg(3, {{{0, 1}, "1"}, {{1, 2}, "1"}});
    std::vector<Edge> all{ones.graph().edges()};
    CHECK(present_edges(ones, all) == 0);
    CHECK_FALSE(present_edges(ones, {Edge{0, 1}}).has_value()); // the other edge never disappears
    CHECK_THROWS_AS(present_edges(ones, {Edge{0, 2}}), InvalidInput);
    CHECK(present_edges(EdgePeriodicGraph{make_edgeless(2), {}}, {}) == 0);
}

TEST_CASE("present_edges against a direct scan") {
    Rng rng{900};
    for (int round = 0; round < 120; ++round) {
        const EdgePeriodicGraph g = random_epg(rng, 5, 0.6, 4);
        std::vector<Edge> subset;
        for (const Edge& e : g.graph().edges())
            if (rng() % 2)
                subset.push_back(e);
        const auto fast = present_edges(g, subset);
        std::optional<std::uint64_t> slow;
        const StaticGraph want{g.graph().vertex_count(), std::vector<Edge>{subset}};
        for (std::uint64_t t = 0; t < global_period(g) && !slow; ++t)
            if (snapshot(g, t) == want)
                slow = t;
        CHECK(fast == slow);
    }
}

TEST_CASE("epg_subgraph_free on the running example finds the edgeless step") {
    const EdgePeriodicGraph g = test::fig1();
    CHECK(epg_subgraph_free(g, make_path(1)) == 33);
}

TEST_CASE("minor dichotomy classification") {
    CHECK(minor_dichotomy_class(make_clique(3)) == MinorDichotomy::cyclic);
    CHECK(minor_dichotomy_class(make_star(4)) == MinorDichotomy::heavy_forest);
    CHECK(minor_dichotomy_class(make_path(4)) == MinorDichotomy::light_forest);
    CHECK(minor_dichotomy_class(make_star(3)) == MinorDichotomy::light_forest);
    CHECK(minor_dichotomy_class(StaticGraph{6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}}) ==
          MinorDichotomy::heavy_forest); // two adjacent degree-3 vertices
    CHECK(minor_dichotomy_class(StaticGraph{8, {{0, 1}, {0, 2}, {0, 3}, {4, 5}, {4, 6}, {4, 7}}}) ==
          MinorDichotomy::light_forest); // one degree-3 vertex per component
    CHECK(minor_dichotomy_class(StaticGraph{0, {}}) == MinorDichotomy::light_forest);
}

TEST_CASE("light-forest minors reduce to plain subgraph containment") {
    Rng rng{911};
    int light_seen = 0;
    for (int round = 0; round < 400; ++round) {
        const StaticGraph host = random_graph(rng, 7, 0.4);
        const StaticGraph pattern = random_graph(rng, 5, 0.3);
        if (minor_dichotomy_class(pattern) != MinorDichotomy::light_forest)
            continue;
        ++light_seen;
        CHECK(has_minor(host, pattern) == subgraph_monomorphism(host, pattern).has_value());
    }
    CHECK(light_seen > 100);
}

TEST_CASE("the four solvers agree with naive scans on random instances") {
    Rng rng{912};
    for (int round = 0; round < 40; ++round) {
        const EdgePeriodicGraph g = random_epg(rng, 5, 0.5, 4);
        if (g.graph().edge_count() > 6)
            continue;
        const StaticGraph pattern = random_graph(rng, 3, 0.5);
        for (const auto problem :
             {SubstructureProblem::subgraph, SubstructureProblem::subgraph_free,
              SubstructureProblem::minor, SubstructureProblem::minor_free}) {
            const auto fast = solve_substructure(g, pattern, problem);
            const auto slow = naive_substructure_scan(g, pattern, problem);
            CHECK(fast.has_value() == slow.has_value());
            if (fast) {
                // the witness self-verifies on its snapshot
                const StaticGraph snap = snapshot(g, *fast);
                switch (problem) {
                case SubstructureProblem::subgraph:
                    CHECK(induced_iso(snap, pattern).has_value());
                    break;
                case SubstructureProblem::subgraph_free:
                    CHECK_FALSE(induced_iso(snap, pattern).has_value());
                    break;
                case SubstructureProblem::minor:
                    CHECK(has_minor(snap, pattern));
                    break;
                default:
                    CHECK_FALSE(has_minor(snap, pattern));
                    break;
                }
            }
        }
    }
}

TEST_CASE("edgeless minor patterns are a vertex-count comparison") {
    const EdgePeriodicGraph g = test::fig1(); // 6 vertices
    CHECK(epg_minor(g, make_edgeless(3)) == 0);
    CHECK(epg_minor(g, make_edgeless(6)) == 0);
    CHECK_FALSE(epg_minor(g, make_edgeless(7)).has_value());
    CHECK(epg_minor_free(g, make_edgeless(7)) == 0);
    CHECK_FALSE(epg_minor_free(g, make_edgeless(6)).has_value());
    CHECK_FALSE(epg_minor_free(g, make_edgeless(1)).has_value());
}

TEST_CASE("subset budget") {
    Rng rng{913};
    std::vector<std::pair<std::pair<int, int>, std::string>> edges;
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v)
            edges.push_back({{u, v}, "10"});
    const EdgePeriodicGraph big = make_epg(7, edges); // 21 edges
    SubstructureBudgets budgets;
    budgets.subset_budget = 1024;
    CHECK_THROWS_AS(epg_subgraph_free(big, make_clique(3), budgets), SubsetBudgetExceeded);
}
