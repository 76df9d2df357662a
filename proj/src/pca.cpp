#include "epg/pca.hpp"

#include <algorithm>
#include <string>

namespace epg {

namespace {

std::uint64_t instance_lcm(const PcaInstance& x, std::uint64_t cap) {
    std::uint64_t l = 1;
    for (const auto& s : x.strings) {
        l = checked_lcm(l, s.length(), kPeriodCap);
        if (l > cap)
            throw CapExceeded{"lcm of string lengths exceeds the cap of " + std::to_string(cap)};
    }
    return l;
}

} // namespace

std::optional<std::uint64_t> solve_pca_bruteforce(const PcaInstance& x, std::uint64_t cap) {
    const std::uint64_t l = instance_lcm(x, cap);
    for (std::uint64_t t = 0; t < l; ++t) {
        if (pca_witness_valid(x, t))
            return t;
    }
    return std::nullopt;
}

std::optional<std::uint64_t> solve_mcpca_bruteforce(const MulticoloredPcaInstance& x, std::uint64_t cap) {
    std::uint64_t l = 1;
    for (const auto& group : x.groups) {
        if (group.empty())
            throw InvalidInput{"multicolored PCA group must be nonempty"};
        for (const auto& s : group) {
            l = checked_lcm(l, s.length(), kPeriodCap);
            if (l > cap)
                throw CapExceeded{"lcm of string lengths exceeds the cap of " + std::to_string(cap)};
        }
    }
    for (std::uint64_t t = 0; t < l; ++t)
        if (mcpca_witness_valid(x, t))
            return t;
    return std::nullopt;
}

std::optional<std::uint64_t> solve_pca(const PcaInstance& x, std::size_t class_budget) {
    if (x.strings.empty())
        return 0; // universal quantification over the empty set
    ResidueClassSet working = x.strings.front().one_classes();
    for (std::size_t i = 1; i < x.strings.size(); ++i) {
        working = working.intersect(x.strings[i].one_classes(), class_budget);
        if (working.empty())
            return std::nullopt;
    }
    return working.min_element();
}

std::optional<std::uint64_t> solve_mcpca(const MulticoloredPcaInstance& x, std::size_t class_budget) {
    if (x.groups.empty())
        return 0;
    ResidueClassSet working;
    for (std::size_t i = 0; i < x.groups.size(); ++i) {
        const auto& group = x.groups[i];
        if (group.empty())
            throw InvalidInput{"multicolored PCA group must be nonempty"};
        ResidueClassSet group_classes;
        for (const auto& s : group)
            group_classes = group_classes.unite(s.one_classes(), class_budget);
        working = i == 0 ? group_classes : working.intersect(group_classes, class_budget);
        if (working.empty())
            return std::nullopt;
    }
    return working.min_element();
}

PcaInstance normalize_single_zero(const PcaInstance& x) {
    PcaInstance out;
    for (const auto& s : x.strings) {
        for (std::size_t zero : s.zero_positions()) {
            std::string bits(s.length(), '1');
            bits[zero] = '0';
            out.strings.emplace_back(bits);
        }
    }
    return out;
}

MulticoloredPcaInstance split_strings(const PcaInstance& x) {
    MulticoloredPcaInstance out;
    for (const auto& s : x.strings) {
        std::vector<BinaryLabel> group;
        for (std::size_t one : s.one_positions()) {
            std::string bits(s.length(), '0');
            bits[one] = '1';
            group.emplace_back(bits);
        }
        out.groups.push_back(std::move(group));
    }
    return out;
}

std::vector<std::uint64_t> mcc_primes(const std::vector<std::vector<VertexId>>& partition) {
    std::vector<std::uint64_t> primes;
    for (const auto& part : partition) {
        std::uint64_t p = next_prime_at_least(part.size());
        while (std::find(primes.begin(), primes.end(), p) != primes.end())
            p = next_prime_at_least(p + 1);
        primes.push_back(p);
    }
    return primes;
}

PcaInstance mcc_to_pca(const StaticGraph& g, const std::vector<std::vector<VertexId>>& partition) {
    if (partition.size() < 2)
        throw InvalidPartition{"need at least 2 parts"};
    std::vector<int> part_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (partition[i].empty())
            throw InvalidPartition{"part " + std::to_string(i) + " is empty"};
        for (VertexId v : partition[i]) {
            if (v < 0 || v >= g.vertex_count() || part_of[static_cast<std::size_t>(v)] != -1)
                throw InvalidPartition{"vertex " + std::to_string(v) + " missing or repeated"};
            part_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    if (std::find(part_of.begin(), part_of.end(), -1) != part_of.end())
        throw InvalidPartition{"partition does not cover all vertices"};

    const auto primes = mcc_primes(partition);
    PcaInstance out;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        for (std::size_t j = i + 1; j < partition.size(); ++j) {
            const std::uint64_t len = checked_mul(primes[i], primes[j]);
            std::string bits(static_cast<std::size_t>(len), '0');
            bool any = false;
            for (std::uint64_t t = 0; t < len; ++t) {
                const std::uint64_t ti = t % primes[i];
                const std::uint64_t tj = t % primes[j];
                if (ti >= partition[i].size() || tj >= partition[j].size())
                    continue;
                if (g.has_edge(partition[i][ti], partition[j][tj])) {
                    bits[static_cast<std::size_t>(t)] = '1';
                    any = true;
                }
            }
            if (!any)
                throw UnsatisfiableByConstruction{};
            out.strings.emplace_back(bits);
        }
    }
    return out;
}

bool pca_witness_valid(const PcaInstance& x, std::uint64_t t) {
    return std::all_of(x.strings.begin(), x.strings.end(),
                       [t](const BinaryLabel& s) { return s.at_time(t); });
}

bool mcpca_witness_valid(const MulticoloredPcaInstance& x, std::uint64_t t) {
    return std::all_of(x.groups.begin(), x.groups.end(), [t](const auto& group) {
        return std::any_of(group.begin(), group.end(),
                           [t](const BinaryLabel& s) { return s.at_time(t); });
    });
}

} // namespace epg
