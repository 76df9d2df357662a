#include "epg/numeric.hpp"

#include <algorithm>
#include <numeric>

namespace epg {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    const auto wide = static_cast<unsigned __int128>(a) * b;
    if (wide > cap)
        throw PeriodOverflow{};
    return static_cast<std::uint64_t>(wide);
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    if (a == 0 || b == 0)
        return 0;
    const std::uint64_t g = std::gcd(a, b);
    return checked_mul(a / g, b, cap);
}

ResidueClassSet::ResidueClassSet(std::vector<Class> classes) : classes_(std::move(classes)) {
    for (auto& c : classes_)
        c.residue %= c.modulus;
    std::sort(classes_.begin(), classes_.end());
    classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
}

ResidueClassSet ResidueClassSet::single(std::uint64_t residue, std::uint64_t modulus) {
    return ResidueClassSet{{Class{residue % modulus, modulus}}};
}

std::optional<std::uint64_t> ResidueClassSet::min_element() const {
    std::optional<std::uint64_t> best;
    for (const auto& c : classes_)
        if (!best || c.residue < *best)
            best = c.residue;
    return best;
}

bool ResidueClassSet::contains(std::uint64_t t) const {
    return std::any_of(classes_.begin(), classes_.end(),
                       [t](const Class& c) { return t % c.modulus == c.residue; });
}

ResidueClassSet ResidueClassSet::unite(const ResidueClassSet& other, std::size_t class_budget) const {
    std::vector<Class> merged = classes_;
    merged.insert(merged.end(), other.classes_.begin(), other.classes_.end());
    ResidueClassSet result{std::move(merged)};
    if (result.size() > class_budget)
        throw ClassBudgetExceeded{"residue class union exceeds budget of " + std::to_string(class_budget)};
    return result;
}

ResidueClassSet ResidueClassSet::intersect(const ResidueClassSet& other, std::size_t class_budget) const {
    std::vector<Class> merged;
    for (const auto& a : classes_) {
        for (const auto& b : other.classes_) {
            if (auto c = crt_combine(a.residue, a.modulus, b.residue, b.modulus)) {
                merged.push_back(*c);
                if (merged.size() > class_budget)
                    throw ClassBudgetExceeded{"residue class intersection exceeds budget of " +
                                              std::to_string(class_budget)};
            }
        }
    }
    return ResidueClassSet{std::move(merged)};
}

namespace {

// Extended gcd: returns g and x with a*x == g (mod m), all in signed 128-bit.
__int128 egcd(__int128 a, __int128 b, __int128& x, __int128& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    __int128 x1, y1;
    const __int128 g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

} // namespace

std::optional<ResidueClassSet::Class> crt_combine(std::uint64_t r1, std::uint64_t m1,
                                                  std::uint64_t r2, std::uint64_t m2) {
    const std::uint64_t g = std::gcd(m1, m2);
    const std::uint64_t d = r1 > r2 ? r1 - r2 : r2 - r1;
    if (d % g != 0)
        return std::nullopt;
    const std::uint64_t l = checked_lcm(m1, m2);

    // Solve t = r1 + m1*k with r1 + m1*k == r2 (mod m2).
    __int128 x, y;
    egcd(static_cast<__int128>(m1) / g, static_cast<__int128>(m2) / g, x, y);
    const __int128 m2g = static_cast<__int128>(m2) / g;
    __int128 diff = (static_cast<__int128>(r2) - static_cast<__int128>(r1)) / static_cast<__int128>(g);
    __int128 k = (diff % m2g) * (x % m2g) % m2g;
    if (k < 0)
        k += m2g;
    const __int128 t = (static_cast<__int128>(r1) + static_cast<__int128>(m1) * k) % static_cast<__int128>(l);
    return ResidueClassSet::Class{static_cast<std::uint64_t>(t), l};
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::uint64_t next_prime_at_least(std::uint64_t n) {
    std::uint64_t p = n < 2 ? 2 : n;
    while (!is_prime(p))
        ++p;
    return p;
}

std::vector<std::uint64_t> first_primes(std::size_t n) {
    std::vector<std::uint64_t> primes;
    primes.reserve(n);
    std::uint64_t p = 2;
    while (primes.size() < n) {
        p = next_prime_at_least(p);
        primes.push_back(p);
        ++p;
    }
    return primes;
}

} // namespace epg
