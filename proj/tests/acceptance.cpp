// Acceptance suite: one timed check per criterion, one pass/fail line each.
// Exit code 0 iff every criterion holds within its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "epg/cli.hpp"
#include "helpers.hpp"

using namespace epg;

namespace {

struct Criterion {
    std::string name;
    double limit_seconds;
    std::function<void(std::vector<std::string>&)> run; // appends failure notes
};

int failures = 0;

void run_criterion(const Criterion& c) {
    std::vector<std::string> notes;
    const auto start = std::chrono::steady_clock::now();
    try {
        c.run(notes);
    } catch (const std::exception& e) {
        notes.push_back(std::string{"exception: "} + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds)
        notes.push_back("exceeded time limit of " + std::to_string(c.limit_seconds) + " s");
    const bool ok = notes.empty();
    if (!ok)
        ++failures;
    std::printf("[%s] %s (%.2f s / limit %.0f s)\n", ok ? "PASS" : "FAIL", c.name.c_str(), seconds,
                c.limit_seconds);
    for (const auto& note : notes)
        std::printf("       %s\n", note.c_str());
}

void expect(std::vector<std::string>& notes, bool condition, const std::string& message) {
    if (!condition)
        notes.push_back(message);
}

std::set<std::pair<int, int>> edge_set(const StaticGraph& g) {
    std::set<std::pair<int, int>> out;
    for (const Edge& e : g.edges())
        out.insert({e.u, e.v});
    return out;
}

// --- 1: Fig. 1 reproduction ------------------------------------------------

void criterion_fig1(std::vector<std::string>& notes) {
    const EdgePeriodicGraph g = test::fig1();
    expect(notes, global_period(g) == 60, "global period != 60");

    const std::set<std::pair<int, int>> want0{{2, 5}, {4, 5}};
    const std::set<std::pair<int, int>> want1{{1, 2}, {2, 3}};
    const std::set<std::pair<int, int>> want4{{1, 2}, {2, 3}, {2, 5}, {4, 5}};
    const std::set<std::pair<int, int>> want26{{0, 1}, {0, 5}, {1, 2}, {2, 3}, {2, 5}, {3, 4}, {4, 5}};
    expect(notes, edge_set(snapshot(g, 0)) == want0, "snapshot(0) mismatch");
    expect(notes, edge_set(snapshot(g, 1)) == want1, "snapshot(1) mismatch");
    expect(notes, edge_set(snapshot(g, 4)) == want4, "snapshot(4) mismatch");
    expect(notes, edge_set(snapshot(g, 26)) == want26, "snapshot(26) mismatch");

    const auto witness = epg_subgraph_free(g, make_path(1));
    expect(notes, witness.has_value() && *witness == 33,
           "subgraph-free witness for K_2 is not t=33");
}

// --- 2: PCA oracle equivalence ----------------------------------------------

void criterion_pca_equivalence(std::vector<std::string>& notes) {
    Rng rng{20'001};
    for (int round = 0; round < 1000; ++round) {
        const PcaInstance x = random_pca(rng, 6, 12);
        const auto fast = solve_pca(x);
        const auto slow = solve_pca_bruteforce(x);
        if (fast.has_value() != slow.has_value()) {
            notes.push_back("some/none disagreement at round " + std::to_string(round));
            return;
        }
        if (fast) {
            if (*fast != *slow) {
                notes.push_back("witness mismatch at round " + std::to_string(round));
                return;
            }
            if (!pca_witness_valid(x, *fast)) {
                notes.push_back("invalid witness at round " + std::to_string(round));
                return;
            }
        }
    }
}

// --- 3: X-embedding property ------------------------------------------------

void criterion_embedding(std::vector<std::string>& notes) {
    Rng rng{20'002};
    for (int round = 0; round < 300; ++round) {
        const PcaInstance x = random_pca(rng, 4, 8);
        const GeneratedInstance inst = pca_to_subgraph(x);
        const auto& payload = std::get<SubstructureInstance>(inst.payload);
        const bool subgraph_yes = epg_subgraph(payload.epg, payload.pattern).has_value();
        const bool pca_yes = solve_pca(x).has_value();
        if (subgraph_yes != pca_yes) {
            notes.push_back("embedding equivalence failed at round " + std::to_string(round));
            return;
        }
    }
}

// --- 4: traversal oracle equivalence -----------------------------------------

void criterion_traversal(std::vector<std::string>& notes) {
    Rng rng{20'003};
    for (int round = 0; round < 300; ++round) {
        const EdgePeriodicGraph g = random_epg(rng, 7, 0.45, 5);
        if (global_period(g) > 2520)
            continue;
        const auto from = static_cast<VertexId>(rng() % g.graph().vertex_count());
        const auto to = static_cast<VertexId>(rng() % g.graph().vertex_count());
        const TraversalQuery q{g, from, to, rng() % 10};
        const TraversalResult mine = solve_st(q);
        const TraversalResult ref = solve_st_oracle(q);
        if (mine.reachable != ref.reachable || mine.feasible != ref.feasible) {
            notes.push_back("feasibility mismatch at round " + std::to_string(round));
            return;
        }
        if (mine.reachable && mine.traversal_time() != ref.traversal_time()) {
            notes.push_back("minimal k mismatch at round " + std::to_string(round));
            return;
        }
        if (!walk_valid(g, mine, q.from, q.to) || !walk_valid(g, ref, q.from, q.to)) {
            notes.push_back("walk failed validation at round " + std::to_string(round));
            return;
        }
    }
}

// --- 5: reduction corpus soundness -------------------------------------------

bool solve_generated(const GeneratedInstance& inst) {
    if (const auto* q = std::get_if<TraversalQuery>(&inst.payload))
        return solve_st(*q).feasible;
    if (const auto* s = std::get_if<SubstructureInstance>(&inst.payload))
        return solve_substructure(s->epg, s->pattern, s->problem).has_value();
    return solve_pca(std::get<PcaInstance>(inst.payload)).has_value();
}

void criterion_corpus(std::vector<std::string>& notes) {
    const int per_generator = 100;
    Rng rng{20'005};
    const StaticGraph h_tree{6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}};
    const std::vector<std::pair<std::string, std::function<GeneratedInstance()>>> generators{
        {"pca-to-st", [&] { return pca_to_st(random_pca(rng, 4, 6)); }},
        {"mcpca-to-st", [&] { return mcpca_to_st(random_single_one_mcpca(rng, 3, 2, 4)); }},
        {"pca-to-subgraph", [&] { return pca_to_subgraph(random_pca(rng, 4, 6)); }},
        {"pca-to-subgraph-free-edgeless",
         [&] { return pca_to_subgraph_free_edgeless(random_pca(rng, 2, 5), 2 + static_cast<int>(rng() % 2)); }},
        {"pca-to-subgraph-free",
         [&] { return pca_to_subgraph_free(random_pca_with_zeros(rng, 3, 5), make_path(1)); }},
        {"pca-to-minor-free",
         [&] { return pca_to_minor_free(random_pca_with_zeros(rng, 3, 5), make_clique(3)); }},
        {"pca-to-minor-cycle", [&] { return pca_to_minor_cycle(random_pca(rng, 3, 5), make_clique(3)); }},
        {"pca-to-minor-tree-a",
         [&] { return pca_to_minor_tree(random_pca(rng, 3, 4), h_tree, TreeGadgetVariant::two_deg3); }},
        {"pca-to-minor-tree-b",
         [&] { return pca_to_minor_tree(random_pca(rng, 3, 4), make_star(4), TreeGadgetVariant::one_deg4); }},
        {"qsat-to-subgraph-free", [&] { return qsat_to_subgraph_free(random_qbf(rng, 2, 2, 2)); }},
        {"qsat-to-minor-free", [&] { return qsat_to_minor_free(random_qbf(rng, 2, 2, 2)); }},
    };
    for (const auto& [name, make] : generators) {
        for (int round = 0; round < per_generator; ++round) {
            const GeneratedInstance inst = make();
            if (inst.expected == ExpectedAnswer::unknown) {
                notes.push_back(name + ": unexpected unknown at round " + std::to_string(round));
                return;
            }
            if (solve_generated(inst) != (inst.expected == ExpectedAnswer::yes)) {
                notes.push_back(name + ": image answer differs from expected at round " +
                                std::to_string(round));
                return;
            }
        }
    }
    // mcc-to-pca: the payload may be unrepresentable (all-zero string), which
    // certifies a no-instance
    for (int round = 0; round < per_generator; ++round) {
        const MccInstance mcc = random_mcc(rng, 2 + rng() % 2, 3, 0.5);
        try {
            const GeneratedInstance inst = mcc_to_pca_instance(mcc);
            if (solve_generated(inst) != (inst.expected == ExpectedAnswer::yes)) {
                notes.push_back("mcc-to-pca: image answer differs at round " + std::to_string(round));
                return;
            }
        } catch (const UnsatisfiableByConstruction&) {
            if (has_multicolored_clique(mcc)) {
                notes.push_back("mcc-to-pca: dropped a yes-instance at round " + std::to_string(round));
                return;
            }
        }
    }
}

// --- 6: structural gadget properties -------------------------------------------

void criterion_structural(std::vector<std::string>& notes) {
    Rng rng{20'006};
    for (int round = 0; round < 100; ++round) {
        // vertex cover <= k+1 and single-1 labels on mcpca_to_st images
        const MulticoloredPcaInstance mx = random_single_one_mcpca(rng, 3, 2, 4);
        const GeneratedInstance image = mcpca_to_st(mx);
        const auto& q = std::get<TraversalQuery>(image.payload);
        if (test::vertex_cover_number(q.epg.graph()) > static_cast<int>(mx.groups.size()) + 1) {
            notes.push_back("vertex cover exceeds k+1 at round " + std::to_string(round));
            return;
        }
        for (const auto& label : q.epg.labels())
            if (label.ones_count() != 1) {
                notes.push_back("image label with more than one 1 at round " + std::to_string(round));
                return;
            }

        // exactly one 0 per normalized string
        const PcaInstance x = random_pca(rng, 4, 8);
        for (const auto& s : normalize_single_zero(x).strings)
            if (s.zeros_count() != 1) {
                notes.push_back("normalized string without exactly one 0 at round " +
                                std::to_string(round));
                return;
            }

        // mcc_to_pca lengths are products of two distinct primes
        const MccInstance mcc = random_mcc(rng, 2 + rng() % 2, 3, 0.6);
        const auto primes = mcc_primes(mcc.partition);
        try {
            const PcaInstance image = mcc_to_pca(mcc.graph, mcc.partition);
            std::size_t idx = 0;
            for (std::size_t i = 0; i < primes.size(); ++i)
                for (std::size_t j = i + 1; j < primes.size(); ++j, ++idx)
                    if (image.strings[idx].length() != primes[i] * primes[j] || primes[i] == primes[j] ||
                        !is_prime(primes[i]) || !is_prime(primes[j])) {
                        notes.push_back("bad image length at round " + std::to_string(round));
                        return;
                    }
        } catch (const UnsatisfiableByConstruction&) {
        }
    }
}

// --- 7: minor dichotomy cross-check -------------------------------------------

void criterion_dichotomy(std::vector<std::string>& notes) {
    int pairs = 0;
    const auto check_pair = [&](const StaticGraph& host, const StaticGraph& pattern) -> bool {
        if (minor_dichotomy_class(pattern) != MinorDichotomy::light_forest)
            return true;
        ++pairs;
        return has_minor(host, pattern) == subgraph_monomorphism(host, pattern).has_value();
    };

    // exhaustive over all labeled hosts on <= 4 vertices and light-forest
    // patterns on <= 4 vertices
    std::vector<StaticGraph> small_patterns;
    for (int n = 1; n <= 4; ++n) {
        const int slots = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots); ++mask) {
            std::vector<Edge> edges;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask & (std::uint32_t{1} << bit))
                        edges.emplace_back(u, v);
            const StaticGraph g{n, std::move(edges)};
            if (minor_dichotomy_class(g) == MinorDichotomy::light_forest)
                small_patterns.push_back(g);
        }
    }
    for (int n = 1; n <= 4; ++n) {
        const int slots = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots); ++mask) {
            std::vector<Edge> edges;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask & (std::uint32_t{1} << bit))
                        edges.emplace_back(u, v);
            const StaticGraph host{n, std::move(edges)};
            for (const StaticGraph& pattern : small_patterns)
                if (!check_pair(host, pattern)) {
                    notes.push_back("dichotomy mismatch on a small exhaustive pair");
                    return;
                }
        }
    }

    // random hosts up to 8 vertices, light-forest patterns up to 6 vertices
    Rng rng{20'007};
    for (int round = 0; round < 400; ++round) {
        const StaticGraph host = random_graph(rng, 8, 0.35);
        const StaticGraph pattern = random_graph(rng, 6, 0.25);
        if (!check_pair(host, pattern)) {
            notes.push_back("dichotomy mismatch at round " + std::to_string(round));
            return;
        }
    }
    expect(notes, pairs > 2000, "too few light-forest pairs exercised");
}

// --- 8: E' enumeration vs naive scans ------------------------------------------

void criterion_subset_scan(std::vector<std::string>& notes) {
    Rng rng{20'008};
    int instances = 0;
    while (instances < 100) {
        const EdgePeriodicGraph g = random_epg(rng, 5, 0.5, 5);
        if (g.graph().edge_count() > 6 || global_period(g) > 10'000)
            continue;
        ++instances;
        const StaticGraph pattern = random_graph(rng, 3, 0.5);
        for (const auto problem :
             {SubstructureProblem::subgraph, SubstructureProblem::subgraph_free,
              SubstructureProblem::minor, SubstructureProblem::minor_free}) {
            const auto fast = solve_substructure(g, pattern, problem);
            const auto slow = naive_substructure_scan(g, pattern, problem, 10'000);
            if (fast.has_value() != slow.has_value()) {
                notes.push_back(to_string(problem) + " disagrees with the naive scan on instance " +
                                std::to_string(instances));
                return;
            }
        }
    }
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"1. Fig. 1 reproduction (period 60, snapshots, subgraph-free t=33)", 1.0, criterion_fig1},
        {"2. PCA oracle equivalence on 1000 random instances", 30.0, criterion_pca_equivalence},
        {"3. X-embedding property on 300 pca_to_subgraph images", 60.0, criterion_embedding},
        {"4. traversal oracle equivalence on 300 random EPGs", 120.0, criterion_traversal},
        {"5. reduction corpus soundness (>=100 sources per generator)", 600.0, criterion_corpus},
        {"6. structural gadget properties", 60.0, criterion_structural},
        {"7. minor dichotomy cross-check", 60.0, criterion_dichotomy},
        {"8. subset-enumeration solvers vs naive period scans", 300.0, criterion_subset_scan},
    };
    for (const auto& c : criteria)
        run_criterion(c);
    if (failures == 0) {
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
