#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "epg/cli.hpp"

namespace {

int run(int argc, char** argv) {
    CLI::App app{"Solver toolkit for edge periodic temporal graphs"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    std::string epg_path, pattern_path, pca_path, out_path, manifest_path;
    std::uint64_t t = 0;
    epg::VertexId from = 0, to = 0;
    std::optional<std::uint64_t> budget_flag, start_flag, deadline_flag, k_flag;
    bool oracle = false;
    std::uint64_t seed = 1;

    auto* snapshot = app.add_subcommand("snapshot", "print the snapshot graph at a time step");
    snapshot->add_option("--epg", epg_path, "EPG file")->required();
    snapshot->add_option("--t", t, "time step")->required();
    std::optional<std::string> snapshot_out;
    snapshot->add_option("--out", snapshot_out, "also write the graph file here");

    auto* stats = app.add_subcommand("stats", "label statistics and the global period");
    stats->add_option("--epg", epg_path, "EPG file")->required();

    auto* solve = app.add_subcommand("solve", "solve a decision problem");
    std::string problem;
    solve->add_option("problem", problem, "pca|st|subgraph|subgraph-free|minor|minor-free")->required();
    solve->add_option("--pca", pca_path, "PCA file (problem pca)");
    solve->add_option("--epg", epg_path, "EPG file");
    solve->add_option("--pattern", pattern_path, "pattern graph file");
    solve->add_option("--from", from, "start vertex (problem st)");
    solve->add_option("--to", to, "target vertex (problem st)");
    solve->add_option("--k", k_flag, "time budget (problem st)");
    solve->add_flag("--oracle", oracle, "cross-check against the brute-force oracle");
    solve->add_option("--budget", budget_flag, "override all caps and budgets");

    auto* traverse = app.add_subcommand("traverse", "traversal queries");
    traverse->add_option("--epg", epg_path, "EPG file")->required();
    traverse->add_option("--from", from, "start vertex")->required();
    traverse->add_option("--to", to, "target vertex")->required();
    traverse->add_option("--budget", k_flag, "time budget k");
    traverse->add_option("--start", start_flag, "fixed start step: earliest arrival");
    traverse->add_option("--deadline", deadline_flag, "fixed deadline: latest departure");
    traverse->add_flag("--oracle", oracle, "cross-check against the brute-force oracle");

    auto* generate = app.add_subcommand("generate", "run a reduction and emit a corpus");
    epg::cli::GenerateRequest gen;
    generate->add_option("reduction", gen.reduction,
                         "pca-to-st|mcpca-to-st|pca-to-subgraph|pca-to-subgraph-free-edgeless|"
                         "pca-to-subgraph-free|pca-to-minor-free|pca-to-minor-cycle|pca-to-minor-tree|"
                         "qsat-to-subgraph-free|qsat-to-minor-free|mcc-to-pca")
        ->required();
    std::optional<std::string> gen_in;
    generate->add_option("--in", gen_in, "source instance file");
    generate->add_option("--random", gen.random_count, "generate from N random sources");
    generate->add_option("--seed", seed, "random seed (default 1)");
    std::optional<std::string> gen_pattern;
    generate->add_option("--pattern", gen_pattern, "pattern graph for pattern-parametrized gadgets");
    generate->add_option("--c", gen.edgeless_vertices, "vertices of the edgeless pattern (default 2)");
    generate->add_option("--variant", gen.tree_variant, "tree gadget variant: a|b (default a)");
    generate->add_option("--out", gen.out_dir, "output directory")->required();

    auto* verify = app.add_subcommand("corpus-verify", "re-solve a generated corpus");
    verify->add_option("--manifest", manifest_path, "manifest.json path")->required();
    verify->add_option("--budget", budget_flag, "override all caps and budgets");

    CLI11_PARSE(app, argc, argv);

    epg::cli::Options opt;
    opt.oracle = oracle;
    opt.seed = seed;
    opt = epg::cli::resolve_options(opt, budget_flag);

    epg::cli::RunReport report;
    if (snapshot->parsed()) {
        report = epg::cli::cmd_snapshot(epg_path, t, snapshot_out);
    } else if (stats->parsed()) {
        report = epg::cli::cmd_stats(epg_path);
    } else if (solve->parsed()) {
        if (problem == "pca") {
            if (pca_path.empty())
                throw epg::InvalidInput{"solve pca needs --pca FILE"};
            report = epg::cli::cmd_solve_pca(pca_path, opt);
        } else if (problem == "st") {
            if (epg_path.empty() || !k_flag)
                throw epg::InvalidInput{"solve st needs --epg FILE --from A --to B --k K"};
            report = epg::cli::cmd_solve_st(epg_path, from, to, *k_flag, opt);
        } else {
            if (epg_path.empty() || pattern_path.empty())
                throw epg::InvalidInput{"solve " + problem + " needs --epg FILE --pattern FILE"};
            epg::SubstructureProblem p;
            if (problem == "subgraph")
                p = epg::SubstructureProblem::subgraph;
            else if (problem == "subgraph-free")
                p = epg::SubstructureProblem::subgraph_free;
            else if (problem == "minor")
                p = epg::SubstructureProblem::minor;
            else if (problem == "minor-free")
                p = epg::SubstructureProblem::minor_free;
            else
                throw epg::InvalidInput{"unknown problem \"" + problem + "\""};
            report = epg::cli::cmd_solve_substructure(p, epg_path, pattern_path, opt);
        }
    } else if (traverse->parsed()) {
        report = epg::cli::cmd_traverse(epg_path, from, to, k_flag, start_flag, deadline_flag, opt);
    } else if (generate->parsed()) {
        gen.source_path = gen_in;
        gen.pattern_path = gen_pattern;
        report = epg::cli::cmd_generate(gen, opt);
    } else if (verify->parsed()) {
        report = epg::cli::cmd_corpus_verify(manifest_path, opt);
    }

    std::cout << epg::cli::render(report, as_json);
    return report.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const epg::BudgetError& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return 2;
    } catch (const epg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
