#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "epg/io.hpp"
#include "epg/sampling.hpp"

namespace epg::test {

// The worked running example: 6 vertices, 7 labeled
// edges, global period 60.
inline const char* kFig1Text = R"(# running example
epg 6 7
0 1 001
1 2 011
2 3 01101
3 4 0011
4 5 10
5 0 001
5 2 10
)";

inline EdgePeriodicGraph fig1() { return parse_epg_text(kFig1Text); }

inline PcaInstance make_pca(const std::vector<std::string>& strings) {
    PcaInstance x;
    for (const auto& s : strings)
        x.strings.emplace_back(s);
    return x;
}

inline MulticoloredPcaInstance make_mcpca(const std::vector<std::vector<std::string>>& groups) {
    MulticoloredPcaInstance x;
    for (const auto& g : groups) {
        std::vector<BinaryLabel> labels;
        for (const auto& s : g)
            labels.emplace_back(s);
        x.groups.push_back(std::move(labels));
    }
    return x;
}

inline EdgePeriodicGraph make_epg(int n, const std::vector<std::pair<std::pair<int, int>, std::string>>& edges) {
    std::vector<std::pair<Edge, BinaryLabel>> labeled;
    for (const auto& [uv, bits] : edges)
        labeled.emplace_back(Edge{uv.first, uv.second}, BinaryLabel{bits});
    std::sort(labeled.begin(), labeled.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Edge> es;
    std::vector<BinaryLabel> ls;
    for (auto& [e, l] : labeled) {
        es.push_back(e);
        ls.push_back(l);
    }
    return EdgePeriodicGraph{StaticGraph{n, std::move(es)}, std::move(ls)};
}

// Right-shift every label by s; used by the shift-covariance property.
inline EdgePeriodicGraph shift_epg(const EdgePeriodicGraph& g, std::uint64_t s) {
    std::vector<BinaryLabel> labels;
    for (const auto& l : g.labels())
        labels.push_back(shift_right(l, s));
    return EdgePeriodicGraph{g.graph(), std::move(labels)};
}

// Exact vertex cover number by subset enumeration (hosts are tiny).
inline int vertex_cover_number(const StaticGraph& g) {
    const int n = g.vertex_count();
    for (int size = 0; size <= n; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(n), 0);
        std::fill(pick.begin(), pick.begin() + size, 1);
        std::sort(pick.begin(), pick.end());
        do {
            bool covers = true;
            for (const Edge& e : g.edges())
                if (!pick[static_cast<std::size_t>(e.u)] && !pick[static_cast<std::size_t>(e.v)]) {
                    covers = false;
                    break;
                }
            if (covers)
                return size;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return n;
}

} // namespace epg::test
