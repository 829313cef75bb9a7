#pragma once

#include <cstdint>
#include <string>

#include "apcore/abacus.hpp"
#include "apcore/qseries.hpp"

namespace apcore {

/// How a generating function was obtained.
enum class GenFunRoute { ClosedForm, Composite, BruteForce };

std::string to_string(GenFunRoute route);

struct GenFunRequest {
    std::uint64_t s;
    std::uint64_t t;
    std::size_t trunc;
    std::uint64_t d; ///< gcd(s, t)

    GenFunRequest(std::uint64_t s_, std::uint64_t t_, std::size_t trunc_);
    GenFunRoute route() const;
};

/// Sum over k = 0..m+1 of q^{k(k+1)/2}: the 2 (mod 2m+1)-cores are the
/// staircases up to (m+1, m, ..., 1).
TruncatedSeries gf_two_mod_odd(std::uint64_t m);

/// (q^2;q^2)^2/(q;q) * (sum_{k=0}^{m+1} q^{k^2+k})^2, the 4 (mod 4m+2)-cores.
TruncatedSeries gf_four_mod(std::uint64_t m, std::size_t trunc);

/// The same series through the staircase form
/// (sum_n q^{T_n}) (sum_{k=0}^{m+1} q^{2 T_k})^2.
TruncatedSeries gf_four_mod_staircase(std::uint64_t m, std::size_t trunc);

/// Closed double sums for the 3 (mod 3m+1)- and 3 (mod 3m+2)-cores, each with
/// its single correction monomial subtracted. Exact polynomials.
TruncatedSeries gf_three_mod(std::uint64_t m, ThreeModVariant variant);

/// Weight polynomial of an explicit list of partitions.
TruncatedSeries weight_polynomial(const std::vector<Partition>& partitions);

/// Polynomial of a coprime pair via a closed form when one applies, else by
/// pruned enumeration up to the (s, s+t)-core size bound.
TruncatedSeries gf_coprime(std::uint64_t s, std::uint64_t t, GenFunRoute* route = nullptr);

/// C_{s(t)} through q^trunc. For d = gcd(s, t) > 1:
/// (q^d;q^d)^d/(q;q) * C_{s/d (t/d)}(q^d)^d.
TruncatedSeries gf_composite(std::uint64_t s, std::uint64_t t, std::size_t trunc, GenFunRoute* route = nullptr);

} // namespace apcore
