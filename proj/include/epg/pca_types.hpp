#pragma once

#include <vector>

#include "epg/label.hpp"

namespace epg {

// A PCA instance: find a time step where every string reads 1. The empty
// instance is trivially satisfied at t = 0 (it arises from single-zero
// normalization of all-ones inputs).
struct PcaInstance {
    std::vector<BinaryLabel> strings;

    bool operator==(const PcaInstance&) const = default;
};

// Multicolored variant: at least one string per group must read 1 at a
// common time step. Every group must be nonempty.
struct MulticoloredPcaInstance {
    std::vector<std::vector<BinaryLabel>> groups;

    bool operator==(const MulticoloredPcaInstance&) const = default;
};

} // namespace epg
