#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apcore/bigint.hpp"

namespace apcore {

/// An integer partition: a nonincreasing sequence of positive parts.
///
/// The empty partition is the unique partition of 0. Construction validates
/// the ordering, so every Partition value satisfies the invariant.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::uint32_t> parts);

    const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }
    std::uint64_t weight() const noexcept { return weight_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    Partition conjugate() const;

    /// Hook lengths of the first column, top row first (strictly decreasing).
    std::vector<std::uint64_t> first_column_hooks() const;

    std::string to_string() const;

    /// Parses "5,3,3"; "", "0", "-" and "()" denote the empty partition.
    static Partition parse(const std::string& text);

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<std::uint32_t> parts_;
    std::uint64_t weight_ = 0;
};

/// The avoided hook set {s, s+t, s+2t, ...}, optionally cut off at s+pt.
///
/// t = 0 means the single hook {s}. For s > t this is still the progression
/// starting at s, never the whole residue class of s mod t.
struct HookProgression {
    std::uint64_t s = 1;
    std::uint64_t t = 0;
    std::optional<std::uint64_t> p;

    HookProgression(std::uint64_t s_, std::uint64_t t_, std::optional<std::uint64_t> p_ = std::nullopt);

    bool contains(std::uint64_t y) const noexcept
    {
        if (y < s)
            return false;
        if (t == 0)
            return y == s;
        const std::uint64_t diff = y - s;
        if (diff % t != 0)
            return false;
        return !p || diff / t <= *p;
    }

    /// True when only finitely many partitions avoid the set.
    bool finite() const noexcept;

    std::string to_string() const;
};

/// Multiset of hook lengths, sorted descending; one entry per cell.
std::vector<std::uint64_t> hook_multiset(const Partition& lambda);

bool is_core(const Partition& lambda, const HookProgression& hooks);

/// Streams the partitions of n in reverse-lexicographic order, starting at (n).
class PartitionGenerator {
public:
    explicit PartitionGenerator(std::uint32_t n);

    /// Returns the next partition, or nullopt when exhausted.
    std::optional<Partition> next();

private:
    std::uint32_t n_;
    std::vector<std::uint32_t> current_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Partition> generate_partitions(std::uint32_t n);

/// c(0..max_weight): number of partitions of each weight avoiding every hook in `hooks`.
///
/// The search builds partitions one row at a time from the bottom up (bead by bead
/// on the abacus) and abandons a branch as soon as the new top row has a forbidden
/// hook; the hooks of lower rows never change when a longer row is placed on top.
std::vector<BigInt> enumerate_cores(const HookProgression& hooks, std::uint64_t max_weight);

/// Every partition of weight <= max_weight avoiding `hooks`, in search order.
std::vector<Partition> list_cores(const HookProgression& hooks, std::uint64_t max_weight);

/// (s^2-1)((s+t)^2-1)/24: the largest (s, s+t)-core, which bounds every finite core here.
std::uint64_t core_size_bound(std::uint64_t s, std::uint64_t t);

/// Total number of partitions avoiding `hooks`; requires gcd(s, t) = 1 and, for a
/// finite cutoff, p >= 1. Throws std::invalid_argument when the set is infinite.
BigInt total_core_count(const HookProgression& hooks);

} // namespace apcore
