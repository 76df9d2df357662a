#include "epg/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "epg/io.hpp"

namespace epg {

std::string to_string(ExpectedAnswer e) {
    switch (e) {
    case ExpectedAnswer::yes: return "yes";
    case ExpectedAnswer::no: return "no";
    default: return "unknown";
    }
}

namespace {

const BinaryLabel kAlwaysOn{"1"};

ExpectedAnswer pca_expected(const PcaInstance& x) {
    try {
        return solve_pca_bruteforce(x) ? ExpectedAnswer::yes : ExpectedAnswer::no;
    } catch (const CapExceeded&) {
    }
    try {
        return solve_pca(x) ? ExpectedAnswer::yes : ExpectedAnswer::no;
    } catch (const BudgetError&) {
        return ExpectedAnswer::unknown;
    }
}

ExpectedAnswer mcpca_expected(const MulticoloredPcaInstance& x) {
    try {
        return solve_mcpca_bruteforce(x) ? ExpectedAnswer::yes : ExpectedAnswer::no;
    } catch (const CapExceeded&) {
    }
    try {
        return solve_mcpca(x) ? ExpectedAnswer::yes : ExpectedAnswer::no;
    } catch (const BudgetError&) {
        return ExpectedAnswer::unknown;
    }
}

// The constructions assume X = {x_1, ..., x_k, 1}. Strings equal to "1" move
// into the implicit all-ones part; if nothing else remains, a single "1"
// stands in as x_1 so the gadget keeps at least one labeled edge.
std::vector<BinaryLabel> gadget_labels(const PcaInstance& x) {
    std::vector<BinaryLabel> p;
    for (const auto& s : x.strings)
        if (s.str() != "1")
            p.push_back(s);
    if (p.empty())
        p.push_back(kAlwaysOn);
    return p;
}

void require_nonempty(const PcaInstance& x) {
    if (x.strings.empty())
        throw InvalidInput{"reduction source must contain at least one string"};
}

} // namespace

GeneratedInstance pca_to_st(const PcaInstance& x) {
    require_nonempty(x);
    const int k = static_cast<int>(x.strings.size());
    std::vector<Edge> edges;
    std::vector<BinaryLabel> labels;
    for (int i = 1; i <= k; ++i) {
        edges.emplace_back(i - 1, i);
        labels.push_back(shift_right(x.strings[static_cast<std::size_t>(i - 1)],
                                     static_cast<std::uint64_t>(i - 1)));
    }
    GeneratedInstance out;
    out.payload = TraversalQuery{EdgePeriodicGraph{StaticGraph{k + 1, std::move(edges)}, std::move(labels)},
                                 0, k, static_cast<std::uint64_t>(k)};
    out.expected = pca_expected(x);
    out.reduction = "pca-to-st";
    out.source_digest = digest(print_pca(x));
    return out;
}

GeneratedInstance mcpca_to_st(const MulticoloredPcaInstance& x) {
    const int k = static_cast<int>(x.groups.size());
    if (k == 0)
        throw InvalidInput{"reduction source must contain at least one group"};
    std::vector<Edge> edges;
    std::vector<BinaryLabel> labels;
    int next_vertex = k + 1; // spine v_0..v_k takes 0..k
    for (int i = 1; i <= k; ++i) {
        const auto& group = x.groups[static_cast<std::size_t>(i - 1)];
        if (group.empty())
            throw InvalidInput{"group " + std::to_string(i) + " is empty"};
        for (const auto& s : group) {
            const int mid = next_vertex++;
            edges.emplace_back(i - 1, mid);
            labels.push_back(shift_right(s, static_cast<std::uint64_t>(2 * (i - 1))));
            edges.emplace_back(mid, i);
            labels.push_back(shift_right(s, static_cast<std::uint64_t>(2 * (i - 1) + 1)));
        }
    }
    // StaticGraph sorts edges; sort labels alongside.
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
    std::vector<Edge> sorted_edges;
    std::vector<BinaryLabel> sorted_labels;
    for (std::size_t i : order) {
        sorted_edges.push_back(edges[i]);
        sorted_labels.push_back(labels[i]);
    }
    GeneratedInstance out;
    out.payload = TraversalQuery{EdgePeriodicGraph{StaticGraph{next_vertex, std::move(sorted_edges)},
                                                   std::move(sorted_labels)},
                                 0, k, static_cast<std::uint64_t>(2 * k)};
    out.expected = mcpca_expected(x);
    out.reduction = "mcpca-to-st";
    out.source_digest = digest(print_mcpca(x));
    return out;
}

namespace {

// Pairs up an edge list with labels and restores StaticGraph's sorted order.
EdgePeriodicGraph build_epg(int n, std::vector<std::pair<Edge, BinaryLabel>> labeled) {
    std::sort(labeled.begin(), labeled.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Edge> edges;
    std::vector<BinaryLabel> labels;
    for (auto& [e, l] : labeled) {
        edges.push_back(e);
        labels.push_back(std::move(l));
    }
    return EdgePeriodicGraph{StaticGraph{n, std::move(edges)}, std::move(labels)};
}

} // namespace

GeneratedInstance pca_to_subgraph(const PcaInstance& x) {
    require_nonempty(x);
    const int k = static_cast<int>(x.strings.size());
    std::vector<std::pair<Edge, BinaryLabel>> labeled;
    for (int i = 0; i < k; ++i)
        labeled.emplace_back(Edge{i, i + 1}, x.strings[static_cast<std::size_t>(i)]);
    GeneratedInstance out;
    out.payload = SubstructureInstance{build_epg(k + 1, std::move(labeled)), make_path(k),
                                       SubstructureProblem::subgraph};
    out.expected = pca_expected(x);
    out.reduction = "pca-to-subgraph";
    out.source_digest = digest(print_pca(x));
    return out;
}

GeneratedInstance pca_to_subgraph_free_edgeless(const PcaInstance& x, int c) {
    require_nonempty(x);
    if (c < 2)
        throw PatternShapeMismatch{"edgeless pattern needs at least 2 vertices"};
    const auto strings = gadget_labels(x);
    const int k = static_cast<int>(strings.size());
    std::vector<std::pair<Edge, BinaryLabel>> labeled;
    for (int u = 0; u < 2 * k; ++u)
        for (int v = u + 1; v < 2 * k; ++v) {
            // matching edge {2i, 2i+1} carries x_{i+1}
            if (v == u + 1 && u % 2 == 0)
                labeled.emplace_back(Edge{u, v}, strings[static_cast<std::size_t>(u / 2)]);
            else
                labeled.emplace_back(Edge{u, v}, kAlwaysOn);
        }
    GeneratedInstance out;
    out.payload = SubstructureInstance{build_epg(2 * k + c - 2, std::move(labeled)), make_edgeless(c),
                                       SubstructureProblem::subgraph_free};
    // When the clique is complete the largest independent set has c-1
    // vertices, so the witnesses of the image are exactly the alignment
    // witnesses of the source: yes iff x yes.
    out.expected = pca_expected(x);
    out.reduction = "pca-to-subgraph-free-edgeless";
    out.source_digest = digest(print_pca(x));
    return out;
}

namespace {

GeneratedInstance copies_with_complements(const PcaInstance& x, const StaticGraph& pattern,
                                          SubstructureProblem problem, const std::string& name) {
    require_nonempty(x);
    if (pattern.edge_count() == 0)
        throw PatternShapeMismatch{"pattern needs at least one edge"};
    const int k = static_cast<int>(x.strings.size());
    const int h = pattern.vertex_count();
    std::vector<std::pair<Edge, BinaryLabel>> labeled;
    for (int i = 0; i < k; ++i) {
        const BinaryLabel inverted = complement(x.strings[static_cast<std::size_t>(i)]);
        for (const Edge& e : pattern.edges())
            labeled.emplace_back(Edge{e.u + i * h, e.v + i * h}, inverted);
    }
    GeneratedInstance out;
    out.payload = SubstructureInstance{build_epg(k * h, std::move(labeled)), pattern, problem};
    out.expected = pca_expected(x);
    out.reduction = name;
    out.source_digest = digest(print_pca(x));
    return out;
}

} // namespace

GeneratedInstance pca_to_subgraph_free(const PcaInstance& x, const StaticGraph& pattern) {
    return copies_with_complements(x, pattern, SubstructureProblem::subgraph_free, "pca-to-subgraph-free");
}

GeneratedInstance pca_to_minor_free(const PcaInstance& x, const StaticGraph& pattern) {
    return copies_with_complements(x, pattern, SubstructureProblem::minor_free, "pca-to-minor-free");
}

namespace {

// Replace the edge {a, b} by a path of `k` edges through k-1 fresh vertices
// labeled x_1..x_k (from the `a` side); all other edges keep "1".
GeneratedInstance subdivision_gadget(const PcaInstance& x, const StaticGraph& pattern,
                                     const StaticGraph& base, VertexId a, VertexId b,
                                     SubstructureProblem problem, const std::string& name) {
    const auto strings = gadget_labels(x);
    const int k = static_cast<int>(strings.size());
    std::vector<std::pair<Edge, BinaryLabel>> labeled;
    for (const Edge& e : base.edges())
        if (e != Edge{a, b})
            labeled.emplace_back(e, kAlwaysOn);
    int next_vertex = base.vertex_count();
    VertexId at = a;
    for (int i = 0; i < k; ++i) {
        const VertexId to = i == k - 1 ? b : next_vertex++;
        labeled.emplace_back(Edge{at, to}, strings[static_cast<std::size_t>(i)]);
        at = to;
    }
    GeneratedInstance out;
    out.payload = SubstructureInstance{build_epg(next_vertex, std::move(labeled)), pattern, problem};
    out.expected = pca_expected(x);
    out.reduction = name;
    out.source_digest = digest(print_pca(x));
    return out;
}

} // namespace

GeneratedInstance pca_to_minor_cycle(const PcaInstance& x, const StaticGraph& pattern) {
    require_nonempty(x);
    const auto cycle = shortest_cycle(pattern);
    if (!cycle)
        throw NoCycleInPattern{};
    // the cycle-closing edge is {first, last} of the returned sequence
    const VertexId a = std::min(cycle->front(), cycle->back());
    const VertexId b = std::max(cycle->front(), cycle->back());
    return subdivision_gadget(x, pattern, pattern, a, b, SubstructureProblem::minor, "pca-to-minor-cycle");
}

GeneratedInstance pca_to_minor_tree(const PcaInstance& x, const StaticGraph& pattern,
                                    TreeGadgetVariant variant) {
    require_nonempty(x);
    if (!pattern.is_forest())
        throw PatternShapeMismatch{"pattern must be a forest"};

    if (variant == TreeGadgetVariant::two_deg3) {
        const auto comp = pattern.component_ids();
        for (VertexId u = 0; u < pattern.vertex_count(); ++u) {
            if (pattern.degree(u) < 3)
                continue;
            for (VertexId w = u + 1; w < pattern.vertex_count(); ++w) {
                if (pattern.degree(w) < 3 ||
                    comp[static_cast<std::size_t>(u)] != comp[static_cast<std::size_t>(w)])
                    continue;
                const auto path = forest_path(pattern, u, w);
                Edge chosen{(*path)[0], (*path)[1]};
                for (std::size_t i = 1; i + 1 < path->size(); ++i)
                    chosen = std::min(chosen, Edge{(*path)[i], (*path)[i + 1]});
                return subdivision_gadget(x, pattern, pattern, chosen.u, chosen.v,
                                          SubstructureProblem::minor, "pca-to-minor-tree-a");
            }
        }
        throw PatternShapeMismatch{"no component has two vertices of degree >= 3"};
    }

    // one_deg4: split a maximum-degree vertex v into v1 (keeps v's slot, takes
    // the two smallest neighbors) and v_{k+1} (fresh, takes the rest), then
    // subdivide the connecting edge.
    VertexId v = -1;
    for (VertexId u = 0; u < pattern.vertex_count(); ++u)
        if (v < 0 || pattern.degree(u) > pattern.degree(v))
            v = u;
    if (v < 0 || pattern.degree(v) < 4)
        throw PatternShapeMismatch{"pattern has no vertex of degree >= 4"};
    const auto comp = pattern.component_ids();
    std::vector<int> deg3_in_component(comp.size(), 0);
    for (VertexId u = 0; u < pattern.vertex_count(); ++u)
        if (pattern.degree(u) >= 3)
            ++deg3_in_component[static_cast<std::size_t>(comp[static_cast<std::size_t>(u)])];
    if (std::any_of(deg3_in_component.begin(), deg3_in_component.end(), [](int c) { return c >= 2; }))
        throw PatternShapeMismatch{"a component has two vertices of degree >= 3; use the two_deg3 variant"};

    const auto& z = pattern.neighbors(v); // sorted
    const VertexId split = pattern.vertex_count();
    std::vector<Edge> base_edges;
    for (const Edge& e : pattern.edges())
        if (e.u != v && e.v != v)
            base_edges.push_back(e);
    for (std::size_t i = 0; i < z.size(); ++i)
        base_edges.emplace_back(i < 2 ? v : split, z[i]);
    base_edges.emplace_back(v, split);
    const StaticGraph base{pattern.vertex_count() + 1, std::move(base_edges)};
    return subdivision_gadget(x, pattern, base, v, split, SubstructureProblem::minor,
                              "pca-to-minor-tree-b");
}

bool exists_forall_unsat(const QbfFormula& f) {
    if (f.existential_count + f.universal_count > 20)
        throw SizeBudgetExceeded{"exhaustive evaluation limited to 20 variables"};
    const std::uint32_t x_limit = std::uint32_t{1} << f.existential_count;
    const std::uint32_t y_limit = std::uint32_t{1} << f.universal_count;
    for (std::uint32_t x = 0; x < x_limit; ++x) {
        bool all_falsify = true;
        for (std::uint32_t y = 0; y < y_limit && all_falsify; ++y) {
            bool psi = true;
            for (const auto& clause : f.clauses) {
                bool clause_true = false;
                for (const QbfLiteral& lit : clause) {
                    const bool value = lit.existential ? (x >> lit.variable) & 1 : (y >> lit.variable) & 1;
                    if (value != lit.negated) {
                        clause_true = true;
                        break;
                    }
                }
                if (!clause_true) {
                    psi = false;
                    break;
                }
            }
            if (psi)
                all_falsify = false;
        }
        if (all_falsify)
            return true;
    }
    return false;
}

namespace {

void validate_qbf(const QbfFormula& f) {
    if (f.existential_count < 0 || f.universal_count < 0)
        throw InvalidInput{"negative variable count"};
    for (const auto& clause : f.clauses)
        for (const QbfLiteral& lit : clause) {
            const int limit = lit.existential ? f.existential_count : f.universal_count;
            if (lit.variable < 0 || lit.variable >= limit)
                throw InvalidInput{"literal variable out of range"};
        }
}

GeneratedInstance qsat_gadget(const QbfFormula& f, bool minor_variant) {
    validate_qbf(f);
    const int k = static_cast<int>(f.clauses.size());
    if (k < 2)
        throw InvalidInput{"need at least 2 clauses"};

    const auto primes = first_primes(static_cast<std::size_t>(f.existential_count));
    const auto endpoint_label = [&](const QbfLiteral& lit) -> BinaryLabel {
        if (!lit.existential)
            return kAlwaysOn;
        const auto p = static_cast<std::size_t>(primes[static_cast<std::size_t>(lit.variable)]);
        std::string bits(p, lit.negated ? '1' : '0');
        bits[0] = lit.negated ? '0' : '1';
        return BinaryLabel{bits};
    };
    const auto complementary = [](const QbfLiteral& a, const QbfLiteral& b) {
        return a.existential == b.existential && a.variable == b.variable && a.negated != b.negated;
    };

    std::vector<std::pair<Edge, BinaryLabel>> labeled;
    for (int c1 = 0; c1 < k; ++c1)
        for (int c2 = c1 + 1; c2 < k; ++c2)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    const QbfLiteral& la = f.clauses[static_cast<std::size_t>(c1)][static_cast<std::size_t>(i)];
                    const QbfLiteral& lb = f.clauses[static_cast<std::size_t>(c2)][static_cast<std::size_t>(j)];
                    if (complementary(la, lb))
                        continue;
                    try {
                        labeled.emplace_back(Edge{3 * c1 + i, 3 * c2 + j},
                                             label_and(endpoint_label(la), endpoint_label(lb)));
                    } catch (const AllZerosProduct&) {
                        // endpoints never co-align: the edge is simply not present
                    }
                }

    const int n = 3 * k;
    std::vector<Edge> pattern_edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            pattern_edges.emplace_back(u, v);
    const StaticGraph pattern{minor_variant ? 3 * k : k, std::move(pattern_edges)};

    GeneratedInstance out;
    out.payload = SubstructureInstance{build_epg(n, std::move(labeled)), pattern,
                                       minor_variant ? SubstructureProblem::minor_free
                                                     : SubstructureProblem::subgraph_free};
    out.expected = exists_forall_unsat(f) ? ExpectedAnswer::yes : ExpectedAnswer::no;
    out.reduction = minor_variant ? "qsat-to-minor-free" : "qsat-to-subgraph-free";
    out.source_digest = digest(print_qbf(f));
    return out;
}

} // namespace

GeneratedInstance qsat_to_subgraph_free(const QbfFormula& f) { return qsat_gadget(f, false); }

GeneratedInstance qsat_to_minor_free(const QbfFormula& f) { return qsat_gadget(f, true); }

bool has_multicolored_clique(const MccInstance& mcc) {
    const std::size_t k = mcc.partition.size();
    std::vector<VertexId> pick(k, -1);
    const auto rec = [&](const auto& self, std::size_t i) -> bool {
        if (i == k)
            return true;
        for (VertexId v : mcc.partition[i]) {
            bool ok = true;
            for (std::size_t j = 0; ok && j < i; ++j)
                ok = mcc.graph.has_edge(pick[j], v);
            if (!ok)
                continue;
            pick[i] = v;
            if (self(self, i + 1))
                return true;
        }
        return false;
    };
    return rec(rec, 0);
}

GeneratedInstance mcc_to_pca_instance(const MccInstance& mcc) {
    GeneratedInstance out;
    out.payload = mcc_to_pca(mcc.graph, mcc.partition);
    out.expected = has_multicolored_clique(mcc) ? ExpectedAnswer::yes : ExpectedAnswer::no;
    out.reduction = "mcc-to-pca";
    out.source_digest = digest(print_mcc(mcc));
    return out;
}

QbfFormula parse_qbf_text(const std::string& text) {
    std::istringstream in{text};
    std::string keyword;
    QbfFormula f;
    std::size_t clause_count = 0;
    if (!(in >> keyword >> f.existential_count >> f.universal_count >> clause_count) || keyword != "qbf")
        throw ParseError{1, "expected header \"qbf <existential> <universal> <clauses>\""};
    for (std::size_t c = 0; c < clause_count; ++c) {
        std::array<QbfLiteral, 3> clause{};
        for (auto& lit : clause) {
            long raw = 0;
            if (!(in >> raw) || raw == 0)
                throw ParseError{c + 2, "expected three nonzero literals per clause"};
            const long var = raw < 0 ? -raw : raw;
            lit.negated = raw < 0;
            lit.existential = var <= f.existential_count;
            lit.variable = static_cast<int>(lit.existential ? var - 1 : var - f.existential_count - 1);
        }
        f.clauses.push_back(clause);
    }
    validate_qbf(f);
    return f;
}

std::string print_qbf(const QbfFormula& f) {
    std::ostringstream out;
    out << "qbf " << f.existential_count << ' ' << f.universal_count << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (std::size_t i = 0; i < clause.size(); ++i) {
            const auto& lit = clause[i];
            const int var = lit.existential ? lit.variable + 1 : f.existential_count + lit.variable + 1;
            out << (i ? " " : "") << (lit.negated ? -var : var);
        }
        out << '\n';
    }
    return out.str();
}

MccInstance parse_mcc_text(const std::string& text) {
    std::istringstream in{text};
    std::string keyword;
    int n = 0;
    std::size_t m = 0, k = 0;
    if (!(in >> keyword >> n >> m >> k) || keyword != "mcc")
        throw ParseError{1, "expected header \"mcc <n> <m> <k>\""};
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw ParseError{i + 2, "expected an edge \"u v\""};
        edges.emplace_back(u, v);
    }
    std::string rest;
    std::getline(in, rest); // finish the last edge line
    MccInstance mcc{StaticGraph{n, std::move(edges)}, {}};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls{line};
        std::vector<VertexId> part;
        int v = 0;
        while (ls >> v)
            part.push_back(v);
        if (!part.empty())
            mcc.partition.push_back(std::move(part));
    }
    if (mcc.partition.size() != k)
        throw ParseError{m + 2, "expected " + std::to_string(k) + " partition lines"};
    return mcc;
}

std::string print_mcc(const MccInstance& mcc) {
    std::ostringstream out;
    out << "mcc " << mcc.graph.vertex_count() << ' ' << mcc.graph.edge_count() << ' '
        << mcc.partition.size() << '\n';
    for (const Edge& e : mcc.graph.edges())
        out << e.u << ' ' << e.v << '\n';
    for (const auto& part : mcc.partition) {
        for (std::size_t i = 0; i < part.size(); ++i)
            out << (i ? " " : "") << part[i];
        out << '\n';
    }
    return out.str();
}

} // namespace epg
