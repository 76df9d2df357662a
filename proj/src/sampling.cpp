#include "epg/sampling.hpp"

#include <algorithm>
#include <string>

namespace epg {

namespace {

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>{lo, hi}(rng);
}

bool chance(Rng& rng, double p) { return std::uniform_real_distribution<double>{0.0, 1.0}(rng) < p; }

} // namespace

BinaryLabel random_label(Rng& rng, std::size_t max_length, double one_probability) {
    const std::size_t len = draw(rng, 1, max_length);
    std::string bits(len, '0');
    for (char& c : bits)
        if (chance(rng, one_probability))
            c = '1';
    bits[draw(rng, 0, len - 1)] = '1'; // keep the label valid
    return BinaryLabel{bits};
}

PcaInstance random_pca(Rng& rng, std::size_t max_strings, std::size_t max_length) {
    PcaInstance x;
    const std::size_t count = draw(rng, 1, max_strings);
    for (std::size_t i = 0; i < count; ++i)
        x.strings.push_back(random_label(rng, max_length));
    return x;
}

PcaInstance random_pca_with_zeros(Rng& rng, std::size_t max_strings, std::size_t max_length) {
    PcaInstance x;
    const std::size_t count = draw(rng, 1, max_strings);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t len = draw(rng, 2, std::max<std::size_t>(2, max_length));
        std::string bits(len, '0');
        for (char& c : bits)
            if (chance(rng, 0.5))
                c = '1';
        const std::size_t one = draw(rng, 0, len - 1);
        bits[one] = '1';
        bits[(one + 1 + draw(rng, 0, len - 2)) % len] = '0';
        x.strings.emplace_back(bits);
    }
    return x;
}

MulticoloredPcaInstance random_single_one_mcpca(Rng& rng, std::size_t max_groups,
                                                std::size_t max_per_group, std::size_t max_length) {
    MulticoloredPcaInstance x;
    const std::size_t groups = draw(rng, 1, max_groups);
    for (std::size_t g = 0; g < groups; ++g) {
        std::vector<BinaryLabel> group;
        const std::size_t count = draw(rng, 1, max_per_group);
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t len = draw(rng, 1, max_length);
            std::string bits(len, '0');
            bits[draw(rng, 0, len - 1)] = '1';
            group.emplace_back(bits);
        }
        x.groups.push_back(std::move(group));
    }
    return x;
}

MulticoloredPcaInstance random_mcpca(Rng& rng, std::size_t max_groups, std::size_t max_per_group,
                                     std::size_t max_length) {
    MulticoloredPcaInstance x;
    const std::size_t groups = draw(rng, 1, max_groups);
    for (std::size_t g = 0; g < groups; ++g) {
        std::vector<BinaryLabel> group;
        const std::size_t count = draw(rng, 1, max_per_group);
        for (std::size_t i = 0; i < count; ++i)
            group.push_back(random_label(rng, max_length));
        x.groups.push_back(std::move(group));
    }
    return x;
}

StaticGraph random_graph(Rng& rng, int max_vertices, double edge_probability) {
    const int n = static_cast<int>(draw(rng, 1, static_cast<std::size_t>(max_vertices)));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (chance(rng, edge_probability))
                edges.emplace_back(u, v);
    return StaticGraph{n, std::move(edges)};
}

EdgePeriodicGraph random_epg(Rng& rng, int max_vertices, double edge_probability,
                             std::size_t max_label_length) {
    const StaticGraph g = random_graph(rng, max_vertices, edge_probability);
    std::vector<BinaryLabel> labels;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        labels.push_back(random_label(rng, max_label_length));
    return EdgePeriodicGraph{g, std::move(labels)};
}

QbfFormula random_qbf(Rng& rng, int clause_count, int existential_count, int universal_count) {
    QbfFormula f;
    f.existential_count = existential_count;
    f.universal_count = universal_count;
    const int total = existential_count + universal_count;
    for (int c = 0; c < clause_count; ++c) {
        std::array<QbfLiteral, 3> clause{};
        for (auto& lit : clause) {
            const int var = static_cast<int>(draw(rng, 0, static_cast<std::size_t>(total - 1)));
            lit.existential = var < existential_count;
            lit.variable = lit.existential ? var : var - existential_count;
            lit.negated = chance(rng, 0.5);
        }
        f.clauses.push_back(clause);
    }
    return f;
}

MccInstance random_mcc(Rng& rng, std::size_t parts, std::size_t max_part_size, double edge_probability) {
    std::vector<std::vector<VertexId>> partition;
    int next = 0;
    for (std::size_t i = 0; i < parts; ++i) {
        std::vector<VertexId> part;
        const std::size_t size = draw(rng, 1, max_part_size);
        for (std::size_t j = 0; j < size; ++j)
            part.push_back(next++);
        partition.push_back(std::move(part));
    }
    std::vector<Edge> edges;
    // only cross-part edges matter for multicolored cliques
    for (std::size_t i = 0; i < parts; ++i)
        for (std::size_t j = i + 1; j < parts; ++j)
            for (VertexId u : partition[i])
                for (VertexId v : partition[j])
                    if (chance(rng, edge_probability))
                        edges.emplace_back(u, v);
    return MccInstance{StaticGraph{next, std::move(edges)}, std::move(partition)};
}

} // namespace epg
