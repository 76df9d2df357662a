#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "epg/reductions.hpp"

namespace epg::cli {

// Exit codes: 0 answer computed, 1 usage/parse error, 2 budget or cap
// exceeded, 3 solver/oracle disagreement (or corpus mismatch).
struct RunReport {
    nlohmann::json data;
    int exit_code = 0;
};

struct Options {
    std::uint64_t brute_cap = kDefaultBruteForceCap;   // PCA brute force / ST oracle / naive scans
    std::size_t class_budget = kDefaultClassBudget;
    std::size_t path_budget = kDefaultPathBudget;
    SubstructureBudgets substructure{};
    bool oracle = false;
    std::uint64_t seed = 1;
};

// Applies the EPG_BUDGET environment variable (one integer, overrides every
// cap above) and then any --budget flag on top.
Options resolve_options(Options base, std::optional<std::uint64_t> budget_flag);

RunReport cmd_snapshot(const std::string& epg_path, std::uint64_t t,
                       const std::optional<std::string>& out_path);
RunReport cmd_stats(const std::string& epg_path);

RunReport cmd_solve_pca(const std::string& pca_path, const Options& opt);
RunReport cmd_solve_st(const std::string& epg_path, VertexId from, VertexId to, std::uint64_t k,
                       const Options& opt);
RunReport cmd_solve_substructure(SubstructureProblem problem, const std::string& epg_path,
                                 const std::string& pattern_path, const Options& opt);

// --start: earliest arrival from that step; --deadline: latest departure;
// neither: free-start minimum traversal time within the budget.
RunReport cmd_traverse(const std::string& epg_path, VertexId from, VertexId to,
                       std::optional<std::uint64_t> budget, std::optional<std::uint64_t> start,
                       std::optional<std::uint64_t> deadline, const Options& opt);

struct GenerateRequest {
    std::string reduction;
    std::optional<std::string> source_path; // exclusive with random_count
    std::size_t random_count = 0;
    std::optional<std::string> pattern_path;
    int edgeless_vertices = 2; // c of the edgeless gadget
    std::string tree_variant = "a";
    std::string out_dir;
};

RunReport cmd_generate(const GenerateRequest& request, const Options& opt);
RunReport cmd_corpus_verify(const std::string& manifest_path, const Options& opt);

// Human-readable rendering; pass json=true for the machine form.
std::string render(const RunReport& report, bool json);

} // namespace epg::cli
