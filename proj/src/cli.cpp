#include "epg/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "epg/io.hpp"
#include "epg/sampling.hpp"

namespace epg::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json answer_json(const std::optional<std::uint64_t>& witness) {
    json j;
    j["answer"] = witness ? "yes" : "no";
    j["witness"] = witness ? json(*witness) : json(nullptr);
    return j;
}

json walk_json(const std::vector<Move>& walk) {
    json arr = json::array();
    for (const Move& m : walk)
        arr.push_back({{"t", m.time}, {"from", m.from}, {"to", m.to}});
    return arr;
}

std::optional<std::uint64_t> parse_env_budget() {
    if (const char* raw = std::getenv("EPG_BUDGET")) {
        try {
            return std::stoull(raw);
        } catch (const std::exception&) {
            throw InvalidInput{"EPG_BUDGET must be an integer, got \"" + std::string{raw} + "\""};
        }
    }
    return std::nullopt;
}

void apply_budget(Options& opt, std::uint64_t b) {
    opt.brute_cap = b;
    opt.class_budget = static_cast<std::size_t>(b);
    opt.path_budget = static_cast<std::size_t>(b);
    opt.substructure.class_budget = static_cast<std::size_t>(b);
    opt.substructure.subset_budget = static_cast<std::size_t>(b);
    opt.substructure.lcm_cap = b;
}

} // namespace

Options resolve_options(Options base, std::optional<std::uint64_t> budget_flag) {
    if (auto env = parse_env_budget())
        apply_budget(base, *env);
    if (budget_flag)
        apply_budget(base, *budget_flag);
    return base;
}

RunReport cmd_snapshot(const std::string& epg_path, std::uint64_t t,
                       const std::optional<std::string>& out_path) {
    const Stopwatch watch;
    const EdgePeriodicGraph g = load_epg(epg_path);
    const StaticGraph snap = snapshot(g, t);
    RunReport report;
    report.data["command"] = "snapshot";
    report.data["inputs"] = {{"epg", digest(print_epg(g))}};
    report.data["t"] = t;
    report.data["vertex_count"] = snap.vertex_count();
    json edges = json::array();
    for (const Edge& e : snap.edges())
        edges.push_back({e.u, e.v});
    report.data["edges"] = edges;
    report.data["graph"] = print_graph(snap);
    if (out_path)
        write_file_atomic(*out_path, print_graph(snap));
    report.data["wall_ms"] = watch.elapsed_ms();
    return report;
}

RunReport cmd_stats(const std::string& epg_path) {
    const Stopwatch watch;
    const EdgePeriodicGraph g = load_epg(epg_path);
    const EpgStats stats = compute_stats(g);
    RunReport report;
    report.data["command"] = "stats";
    report.data["inputs"] = {{"epg", digest(print_epg(g))}};
    report.data["ones_max"] = stats.ones_max;
    report.data["zeros_max"] = stats.zeros_max;
    report.data["runs_total"] = stats.runs_total;
    report.data["period"] = stats.period;
    report.data["label_lengths"] = stats.label_lengths;
    report.data["wall_ms"] = watch.elapsed_ms();
    return report;
}

RunReport cmd_solve_pca(const std::string& pca_path, const Options& opt) {
    const Stopwatch watch;
    const std::string text = [&] {
        std::ifstream in{pca_path, std::ios::binary};
        if (!in)
            throw InvalidInput{"cannot open " + pca_path};
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }();
    const MulticoloredPcaInstance mc = parse_mcpca_text(text);
    RunReport report;
    report.data["command"] = "solve";
    std::optional<std::uint64_t> witness;
    std::optional<std::uint64_t> oracle_witness;
    if (mc.groups.size() == 1) {
        const PcaInstance x{mc.groups[0]};
        report.data["problem"] = "pca";
        report.data["inputs"] = {{"pca", digest(print_pca(x))}};
        witness = solve_pca(x, opt.class_budget);
        if (opt.oracle)
            oracle_witness = solve_pca_bruteforce(x, opt.brute_cap);
    } else {
        report.data["problem"] = "mcpca";
        report.data["inputs"] = {{"pca", digest(print_mcpca(mc))}};
        witness = solve_mcpca(mc, opt.class_budget);
        if (opt.oracle)
            oracle_witness = solve_mcpca_bruteforce(mc, opt.brute_cap);
    }
    report.data.update(answer_json(witness));
    if (opt.oracle) {
        const bool agree = witness == oracle_witness;
        report.data["agreement"] = agree;
        if (!agree)
            report.exit_code = 3;
    }
    report.data["wall_ms"] = watch.elapsed_ms();
    return report;
}

RunReport cmd_solve_st(const std::string& epg_path, VertexId from, VertexId to, std::uint64_t k,
                       const Options& opt) {
    const Stopwatch watch;
    const EdgePeriodicGraph g = load_epg(epg_path);
    const TraversalQuery q{g, from, to, k};
    const TraversalResult r = solve_st(q, opt.path_budget);
    RunReport report;
    report.data["command"] = "solve";
    report.data["problem"] = "st";
    report.data["inputs"] = {{"epg", digest(print_epg(g))}};
    report.data["answer"] = r.feasible ? "yes" : "no";
    report.data["feasible"] = r.feasible;
    if (r.reachable) {
        report.data["k"] = r.traversal_time();
        report.data["start"] = r.start_t;
        report.data["arrival"] = r.arrival_t;
        report.data["walk"] = walk_json(r.walk);
    } else {
        report.data["k"] = json(nullptr);
        report.data["start"] = json(nullptr);
    }
    if (opt.oracle) {
        const TraversalResult o = solve_st_oracle(q, opt.brute_cap);
        const bool agree = o.feasible == r.feasible && o.reachable == r.reachable &&
                           (!r.reachable || (o.traversal_time() == r.traversal_time() &&
                                             o.start_t == r.start_t));
        report.data["agreement"] = agree;
        if (!agree)
            report.exit_code = 3;
    }
    report.data["wall_ms"] = watch.elapsed_ms();
    return report;
}

RunReport cmd_solve_substructure(SubstructureProblem problem, const std::string& epg_path,
                                 const std::string& pattern_path, const Options& opt) {
    const Stopwatch watch;
    const EdgePeriodicGraph g = load_epg(epg_path);
    const StaticGraph pattern = load_graph(pattern_path);
    RunReport report;
    report.data["command"] = "solve";
    report.data["problem"] = to_string(problem);
    report.data["inputs"] = {{"epg", digest(print_epg(g))}, {"pattern", digest(print_graph(pattern))}};
    std::optional<std::uint64_t> witness;
    if (problem == SubstructureProblem::subgraph) {
        const auto embedding = epg_subgraph(g, pattern, opt.substructure.lcm_cap);
        if (embedding) {
            witness = embedding->t;
            report.data["mapping"] = embedding->vertex_map;
        }
    } else {
        witness = solve_substructure(g, pattern, problem, opt.substructure);
    }
    report.data.update(answer_json(witness));
    if (opt.oracle) {
        const auto reference = naive_substructure_scan(g, pattern, problem, opt.brute_cap,
                                                       opt.substructure.minor_host_cap);
        const bool agree = witness.has_value() == reference.has_value();
        report.data["agreement"] = agree;
        if (!agree)
            report.exit_code = 3;
    }
    report.data["wall_ms"] = watch.elapsed_ms();
    return report;
}

RunReport cmd_traverse(const std::string& epg_path, VertexId from, VertexId to,
                       std::optional<std::uint64_t> budget, std::optional<std::uint64_t> start,
                       std::optional<std::uint64_t> deadline, const Options& opt) {
    const Stopwatch watch;
    const EdgePeriodicGraph g = load_epg(epg_path);
    RunReport report;
    report.data["command"] = "traverse";
    report.data["inputs"] = {{"epg", digest(print_epg(g))}};
    if (start && deadline)
        throw InvalidInput{"--start and --deadline are mutually exclusive"};
    if (start) {
        report.data["mode"] = "earliest-arrival";
        const auto arrival = earliest_arrival(g, from, to, *start);
        report.data["feasible"] = arrival.has_value();
        report.data["start"] = *start;
        report.data["arrival"] = arrival ? json(*arrival) : json(nullptr);
    } else if (deadline) {
        report.data["mode"] = "latest-departure";
        const auto departure = latest_departure(g, from, to, *deadline);
        report.data["feasible"] = departure.has_value();
        report.data["deadline"] = *deadline;
        report.data["start"] = departure ? json(*departure) : json(nullptr);
    } else {
        report.data["mode"] = "short-traversal";
        const std::uint64_t k = budget.value_or(traversal_horizon(g));
        const TraversalQuery q{g, from, to, k};
        const TraversalResult r = solve_st(q, opt.path_budget);
        report.data["feasible"] = r.feasible;
        report.data["k"] = r.reachable ? json(r.traversal_time()) : json(nullptr);
        report.data["start"] = r.reachable ? json(r.start_t) : json(nullptr);
        report.data["walk"] = walk_json(r.walk);
        if (opt.oracle) {
            const TraversalResult o = solve_st_oracle(q, opt.brute_cap);
            const bool agree = o.feasible == r.feasible && o.reachable == r.reachable &&
                               (!r.reachable || (o.traversal_time() == r.traversal_time() &&
                                                 o.start_t == r.start_t));
            report.data["agreement"] = agree;
            if (!agree)
                report.exit_code = 3;
        }
    }
    report.data["wall_ms"] = watch.elapsed_ms();
    return report;
}

namespace {

StaticGraph default_pattern(const std::string& reduction, const std::string& tree_variant) {
    if (reduction == "pca-to-minor-cycle")
        return make_cycle(3);
    if (reduction == "pca-to-minor-tree")
        return tree_variant == "b" ? make_star(4) : [] {
            // two adjacent degree-3 vertices with two leaves each
            return StaticGraph{6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}};
        }();
    return make_path(1); // K_2
}

PcaInstance load_source_pca(const std::string& path) { return load_pca(path); }

GeneratedInstance run_reduction(const GenerateRequest& request, const StaticGraph& pattern, Rng& rng,
                                bool random) {
    const std::string& name = request.reduction;
    if (name == "pca-to-st") {
        const PcaInstance x = random ? random_pca(rng, 4, 6) : load_source_pca(*request.source_path);
        return pca_to_st(x);
    }
    if (name == "mcpca-to-st") {
        const MulticoloredPcaInstance x =
            random ? random_single_one_mcpca(rng, 3, 2, 4) : load_mcpca(*request.source_path);
        return mcpca_to_st(x);
    }
    if (name == "pca-to-subgraph") {
        const PcaInstance x = random ? random_pca(rng, 4, 6) : load_source_pca(*request.source_path);
        return pca_to_subgraph(x);
    }
    if (name == "pca-to-subgraph-free-edgeless") {
        const PcaInstance x = random ? random_pca(rng, 2, 5) : load_source_pca(*request.source_path);
        return pca_to_subgraph_free_edgeless(x, request.edgeless_vertices);
    }
    if (name == "pca-to-subgraph-free") {
        const PcaInstance x =
            random ? random_pca_with_zeros(rng, 3, 5) : load_source_pca(*request.source_path);
        return pca_to_subgraph_free(x, pattern);
    }
    if (name == "pca-to-minor-free") {
        const PcaInstance x =
            random ? random_pca_with_zeros(rng, 3, 5) : load_source_pca(*request.source_path);
        return pca_to_minor_free(x, pattern);
    }
    if (name == "pca-to-minor-cycle") {
        const PcaInstance x = random ? random_pca(rng, 3, 5) : load_source_pca(*request.source_path);
        return pca_to_minor_cycle(x, pattern);
    }
    if (name == "pca-to-minor-tree") {
        const PcaInstance x = random ? random_pca(rng, 3, 4) : load_source_pca(*request.source_path);
        return pca_to_minor_tree(x, pattern,
                                 request.tree_variant == "b" ? TreeGadgetVariant::one_deg4
                                                             : TreeGadgetVariant::two_deg3);
    }
    if (name == "qsat-to-subgraph-free" || name == "qsat-to-minor-free") {
        const QbfFormula f = random ? random_qbf(rng, 2, 2, 2) : [&] {
            std::ifstream in{*request.source_path, std::ios::binary};
            if (!in)
                throw InvalidInput{"cannot open " + *request.source_path};
            std::ostringstream buf;
            buf << in.rdbuf();
            return parse_qbf_text(buf.str());
        }();
        return name == "qsat-to-minor-free" ? qsat_to_minor_free(f) : qsat_to_subgraph_free(f);
    }
    if (name == "mcc-to-pca") {
        const MccInstance mcc = random ? random_mcc(rng, 2 + rng() % 2, 3, 0.5) : [&] {
            std::ifstream in{*request.source_path, std::ios::binary};
            if (!in)
                throw InvalidInput{"cannot open " + *request.source_path};
            std::ostringstream buf;
            buf << in.rdbuf();
            return parse_mcc_text(buf.str());
        }();
        return mcc_to_pca_instance(mcc);
    }
    throw InvalidInput{"unknown reduction \"" + name + "\""};
}

json manifest_entry(const GeneratedInstance& inst, const std::string& stem, const std::string& out_dir) {
    json entry;
    entry["reduction"] = inst.reduction;
    entry["expected"] = to_string(inst.expected);
    entry["source_digest"] = inst.source_digest;
    if (const auto* q = std::get_if<TraversalQuery>(&inst.payload)) {
        entry["problem"] = "st";
        entry["epg"] = stem + ".epg";
        entry["from"] = q->from;
        entry["to"] = q->to;
        entry["k"] = q->budget;
        write_file_atomic(out_dir + "/" + stem + ".epg", print_epg(q->epg));
    } else if (const auto* s = std::get_if<SubstructureInstance>(&inst.payload)) {
        entry["problem"] = to_string(s->problem);
        entry["epg"] = stem + ".epg";
        entry["pattern"] = stem + ".pattern.graph";
        write_file_atomic(out_dir + "/" + stem + ".epg", print_epg(s->epg));
        write_file_atomic(out_dir + "/" + stem + ".pattern.graph", print_graph(s->pattern));
    } else {
        entry["problem"] = "pca";
        entry["pca"] = stem + ".pca";
        write_file_atomic(out_dir + "/" + stem + ".pca", print_pca(std::get<PcaInstance>(inst.payload)));
    }
    return entry;
}

} // namespace

RunReport cmd_generate(const GenerateRequest& request, const Options& opt) {
    const Stopwatch watch;
    if (!request.source_path && request.random_count == 0)
        throw InvalidInput{"need --in FILE or --random N"};
    fs::create_directories(request.out_dir);
    Rng rng{opt.seed};
    const StaticGraph pattern = request.pattern_path
                                    ? load_graph(*request.pattern_path)
                                    : default_pattern(request.reduction, request.tree_variant);
    json instances = json::array();
    std::size_t skipped = 0;
    const std::size_t total = request.source_path ? 1 : request.random_count;
    for (std::size_t i = 0; i < total; ++i) {
        char stem[32];
        std::snprintf(stem, sizeof stem, "%04llu", static_cast<unsigned long long>(i));
        try {
            const GeneratedInstance inst = run_reduction(request, pattern, rng, !request.source_path);
            instances.push_back(manifest_entry(inst, stem, request.out_dir));
        } catch (const UnsatisfiableByConstruction&) {
            ++skipped; // certified no-instance without a representable payload
        }
    }
    json manifest;
    manifest["instances"] = instances;
    write_file_atomic(request.out_dir + "/manifest.json", manifest.dump(2) + "\n");
    RunReport report;
    report.data["command"] = "generate";
    report.data["reduction"] = request.reduction;
    report.data["out"] = request.out_dir;
    report.data["count"] = instances.size();
    report.data["skipped_unsatisfiable"] = skipped;
    report.data["wall_ms"] = watch.elapsed_ms();
    return report;
}

namespace {

// Re-solve one corpus entry with the matching solver; returns observed answer.
std::string verify_entry(const json& entry, const std::string& dir, const Options& opt) {
    const std::string problem = entry.at("problem").get<std::string>();
    if (problem == "st") {
        const EdgePeriodicGraph g = load_epg(dir + "/" + entry.at("epg").get<std::string>());
        const TraversalQuery q{g, entry.at("from").get<VertexId>(), entry.at("to").get<VertexId>(),
                               entry.at("k").get<std::uint64_t>()};
        return solve_st(q, opt.path_budget).feasible ? "yes" : "no";
    }
    if (problem == "pca") {
        const PcaInstance x = load_pca(dir + "/" + entry.at("pca").get<std::string>());
        return solve_pca(x, opt.class_budget) ? "yes" : "no";
    }
    const EdgePeriodicGraph g = load_epg(dir + "/" + entry.at("epg").get<std::string>());
    const StaticGraph pattern = load_graph(dir + "/" + entry.at("pattern").get<std::string>());
    SubstructureProblem p;
    if (problem == "subgraph")
        p = SubstructureProblem::subgraph;
    else if (problem == "subgraph-free")
        p = SubstructureProblem::subgraph_free;
    else if (problem == "minor")
        p = SubstructureProblem::minor;
    else if (problem == "minor-free")
        p = SubstructureProblem::minor_free;
    else
        throw InvalidInput{"unknown problem \"" + problem + "\" in manifest"};
    return solve_substructure(g, pattern, p, opt.substructure) ? "yes" : "no";
}

} // namespace

RunReport cmd_corpus_verify(const std::string& manifest_path, const Options& opt) {
    const Stopwatch watch;
    std::ifstream in{manifest_path, std::ios::binary};
    if (!in)
        throw InvalidInput{"cannot open " + manifest_path};
    json manifest;
    in >> manifest;
    const std::string dir = fs::path{manifest_path}.parent_path().string().empty()
                                ? "."
                                : fs::path{manifest_path}.parent_path().string();
    std::size_t checked = 0, matched = 0, skipped = 0;
    json mismatches = json::array();
    for (const json& entry : manifest.at("instances")) {
        const std::string expected = entry.at("expected").get<std::string>();
        if (expected == "unknown") {
            ++skipped;
            continue;
        }
        ++checked;
        const std::string got = verify_entry(entry, dir, opt);
        if (got == expected) {
            ++matched;
        } else {
            json bad = entry;
            bad["got"] = got;
            mismatches.push_back(bad);
        }
    }
    RunReport report;
    report.data["command"] = "corpus-verify";
    report.data["manifest"] = manifest_path;
    report.data["checked"] = checked;
    report.data["matched"] = matched;
    report.data["skipped_unknown"] = skipped;
    report.data["mismatches"] = mismatches;
    if (!mismatches.empty())
        report.exit_code = 3;
    report.data["wall_ms"] = watch.elapsed_ms();
    return report;
}

std::string render(const RunReport& report, bool as_json) {
    if (as_json)
        return report.data.dump(2) + "\n";
    std::ostringstream out;
    const json& d = report.data;
    const std::string command = d.value("command", "");
    if (command == "snapshot") {
        out << d["graph"].get<std::string>();
    } else if (command == "stats") {
        out << "period " << d["period"] << "\nones_max " << d["ones_max"] << "\nzeros_max "
            << d["zeros_max"] << "\nruns_total " << d["runs_total"] << "\nlabel_lengths";
        for (const auto& l : d["label_lengths"])
            out << ' ' << l;
        out << '\n';
    } else if (command == "solve" || command == "traverse") {
        if (d.contains("answer"))
            out << d["answer"].get<std::string>();
        else
            out << (d["feasible"].get<bool>() ? "yes" : "no");
        if (d.contains("witness") && !d["witness"].is_null())
            out << " t=" << d["witness"];
        if (d.contains("k") && !d["k"].is_null())
            out << " k=" << d["k"];
        if (d.contains("start") && !d["start"].is_null())
            out << " start=" << d["start"];
        if (d.contains("arrival") && !d["arrival"].is_null())
            out << " arrival=" << d["arrival"];
        if (d.contains("agreement"))
            out << " agreement=" << (d["agreement"].get<bool>() ? "ok" : "MISMATCH");
        out << '\n';
    } else if (command == "generate") {
        out << "wrote " << d["count"] << " instance(s) to " << d["out"].get<std::string>();
        if (d["skipped_unsatisfiable"].get<std::size_t>() > 0)
            out << " (skipped " << d["skipped_unsatisfiable"] << " unsatisfiable-by-construction)";
        out << '\n';
    } else if (command == "corpus-verify") {
        out << d["matched"] << "/" << d["checked"] << " matched, " << d["skipped_unknown"]
            << " unknown skipped\n";
        for (const auto& bad : d["mismatches"])
            out << "MISMATCH " << bad.dump() << '\n';
    } else {
        out << d.dump(2) << '\n';
    }
    return out.str();
}

} // namespace epg::cli
