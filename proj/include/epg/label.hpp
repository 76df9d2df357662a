#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "epg/errors.hpp"
#include "epg/numeric.hpp"

namespace epg {

// A periodic presence string over {0,1}. Position p answers "is the edge
// present in time step t" for every t with t mod length() == p.
// Invariants: length >= 1, at least one position holds 1.
class BinaryLabel {
public:
    explicit BinaryLabel(std::string_view bits);

    std::size_t length() const { return bits_.size(); }
    bool bit(std::size_t pos) const { return bits_[pos] == '1'; }
    const std::string& str() const { return bits_; }

    // tau(e)[t mod |tau(e)|], defined for every t >= 0.
    bool at_time(std::uint64_t t) const { return bits_[t % bits_.size()] == '1'; }

    std::size_t ones_count() const;
    std::size_t zeros_count() const;
    bool all_ones() const { return zeros_count() == 0; }

    // Maximal blocks of consecutive 1s, counted circularly: an all-ones label
    // is one run, and a run wrapping the end/start boundary counts once.
    std::size_t one_runs() const;

    std::vector<std::size_t> one_positions() const;
    std::vector<std::size_t> zero_positions() const;

    // Residue classes of the time steps where the label reads 1.
    ResidueClassSet one_classes() const;

    bool operator==(const BinaryLabel&) const = default;
    auto operator<=>(const BinaryLabel&) const = default;

private:
    std::string bits_;
};

inline bool label_at(const BinaryLabel& label, std::uint64_t t) { return label.at_time(t); }

// result[j] = label[(j - i) mod length]; shift_left is the inverse.
BinaryLabel shift_right(const BinaryLabel& label, std::uint64_t i);
BinaryLabel shift_left(const BinaryLabel& label, std::uint64_t i);

// Bitwise complement; requires at least one 0 (throws AllOnesLabel).
BinaryLabel complement(const BinaryLabel& label);

// Positionwise AND over lcm(|a|,|b|); throws AllZerosProduct when the
// operands never co-align within the joint period.
BinaryLabel label_and(const BinaryLabel& a, const BinaryLabel& b);

} // namespace epg
