#include "epg/label.hpp"

#include <algorithm>

namespace epg {

BinaryLabel::BinaryLabel(std::string_view bits) : bits_(bits) {
    if (bits_.empty())
        throw InvalidInput{"label must be nonempty"};
    if (bits_.find_first_not_of("01") != std::string::npos)
        throw InvalidInput{"label may contain only 0 and 1, got \"" + bits_ + "\""};
    if (bits_.find('1') == std::string::npos)
        throw AllZerosLabel{"all-zero label \"" + bits_ + "\": every edge must exist in at least one time step"};
}

std::size_t BinaryLabel::ones_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1'));
}

std::size_t BinaryLabel::zeros_count() const { return bits_.size() - ones_count(); }

std::size_t BinaryLabel::one_runs() const {
    if (all_ones())
        return 1;
    std::size_t runs = 0;
    const std::size_t n = bits_.size();
    for (std::size_t p = 0; p < n; ++p) {
        // start of a run: 1 whose circular predecessor is 0
        if (bits_[p] == '1' && bits_[(p + n - 1) % n] == '0')
            ++runs;
    }
    return runs;
}

std::vector<std::size_t> BinaryLabel::one_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < bits_.size(); ++p)
        if (bits_[p] == '1')
            out.push_back(p);
    return out;
}

std::vector<std::size_t> BinaryLabel::zero_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < bits_.size(); ++p)
        if (bits_[p] == '0')
            out.push_back(p);
    return out;
}

ResidueClassSet BinaryLabel::one_classes() const {
    std::vector<ResidueClassSet::Class> classes;
    for (std::size_t p : one_positions())
        classes.push_back({p, bits_.size()});
    return ResidueClassSet{std::move(classes)};
}

BinaryLabel shift_right(const BinaryLabel& label, std::uint64_t i) {
    const std::size_t n = label.length();
    const std::size_t s = static_cast<std::size_t>(i % n);
    std::string out(n, '0');
    for (std::size_t j = 0; j < n; ++j)
        out[j] = label.str()[(j + n - s) % n];
    return BinaryLabel{out};
}

BinaryLabel shift_left(const BinaryLabel& label, std::uint64_t i) {
    const std::size_t n = label.length();
    return shift_right(label, n - i % n);
}

BinaryLabel complement(const BinaryLabel& label) {
    if (label.all_ones())
        throw AllOnesLabel{};
    std::string out = label.str();
    for (char& c : out)
        c = c == '0' ? '1' : '0';
    return BinaryLabel{out};
}

BinaryLabel label_and(const BinaryLabel& a, const BinaryLabel& b) {
    const std::uint64_t l = checked_lcm(a.length(), b.length());
    std::string out(static_cast<std::size_t>(l), '0');
    bool any = false;
    for (std::uint64_t i = 0; i < l; ++i) {
        if (a.at_time(i) && b.at_time(i)) {
            out[static_cast<std::size_t>(i)] = '1';
            any = true;
        }
    }
    if (!any)
        throw AllZerosProduct{};
    return BinaryLabel{out};
}

} // namespace epg
