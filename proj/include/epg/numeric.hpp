#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "epg/errors.hpp"

namespace epg {

// Periods and residues live in uint64; intermediates use 128-bit arithmetic.
// Anything beyond the cap (default 2^63-1) throws PeriodOverflow.
inline constexpr std::uint64_t kPeriodCap = (std::uint64_t{1} << 63) - 1;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap = kPeriodCap);
std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b, std::uint64_t cap = kPeriodCap);

// A set of residue classes { t >= 0 : t == r (mod m) for some stored (r, m) }.
// Classes are kept reduced (r < m), sorted, and deduplicated.
class ResidueClassSet {
public:
    struct Class {
        std::uint64_t residue;
        std::uint64_t modulus;
        auto operator<=>(const Class&) const = default;
    };

    ResidueClassSet() = default;
    explicit ResidueClassSet(std::vector<Class> classes);

    static ResidueClassSet single(std::uint64_t residue, std::uint64_t modulus);

    const std::vector<Class>& classes() const { return classes_; }
    bool empty() const { return classes_.empty(); }
    std::size_t size() const { return classes_.size(); }

    // Smallest t contained in the set (each class's least element is its residue).
    std::optional<std::uint64_t> min_element() const;

    bool contains(std::uint64_t t) const;

    // Union: keeps the budget, dedupes.
    ResidueClassSet unite(const ResidueClassSet& other, std::size_t class_budget) const;

    // Pairwise CRT intersection: classes (r1,m1), (r2,m2) merge iff
    // r1 == r2 (mod gcd(m1,m2)), producing a class mod lcm(m1,m2).
    // Throws ClassBudgetExceeded if the result would exceed class_budget.
    ResidueClassSet intersect(const ResidueClassSet& other, std::size_t class_budget) const;

private:
    std::vector<Class> classes_;
};

// CRT merge of t == r1 (mod m1) and t == r2 (mod m2); nullopt when incompatible.
std::optional<ResidueClassSet::Class> crt_combine(std::uint64_t r1, std::uint64_t m1,
                                                  std::uint64_t r2, std::uint64_t m2);

bool is_prime(std::uint64_t n);
std::uint64_t next_prime_at_least(std::uint64_t n);

// First n primes: 2, 3, 5, ...
std::vector<std::uint64_t> first_primes(std::size_t n);

} // namespace epg
