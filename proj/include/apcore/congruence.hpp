#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "apcore/qseries.hpp"

namespace apcore {

/// Claim: c(A n + b) ≡ 0 (mod m) for every b in residues and every n with
/// A n + b <= trunc. A modulus of 0 means the coefficients vanish outright.
struct APCongruence {
    std::uint64_t period = 1;
    std::set<std::uint64_t> residues;
    std::uint64_t modulus = 0;

    std::string to_string() const;
};

/// Result of checking a congruence to a finite order. Never a proof.
struct APStatus {
    bool verified = true;
    std::size_t trunc = 0;
    std::optional<std::size_t> witness; ///< first index that breaks the claim
    BigInt witness_value = 0;
};

APStatus verify_ap(const TruncatedSeries& series, const APCongruence& cong, std::size_t trunc);

/// r = -2^{-1} - 2^{-3} mod p^2 and the residues k p + r mod p^2 for k ≢ 0 (mod p).
struct Residues4t {
    std::uint64_t p;
    std::uint64_t r;
    std::set<std::uint64_t> residues;
};

/// Throws std::invalid_argument unless p is a prime ≡ 3 (mod 4).
Residues4t residues_4t(std::uint64_t p);

struct CatalogueEntry {
    std::string label;
    APCongruence congruence;
    APStatus status;
};

struct CatalogueReport {
    std::size_t trunc = 0;
    std::vector<CatalogueEntry> entries;
    bool passed() const;
};

/// Checks every specific congruence proved for C_{4(2)}, C_{4(t)}, C_{6(9)} and C_{9(12)}.
CatalogueReport verify_paper_congruences(std::size_t trunc);

/// Finds all progressions A n + b (A <= a_max) on which the coefficients vanish mod m
/// (m = 0: vanish exactly) up to trunc. Progressions implied by one with a period
/// dividing A are left out. Hits are evidence, not proofs. Requires trunc >= 10 a_max.
std::vector<APCongruence> scan_ap_zero(const TruncatedSeries& series, std::uint64_t modulus,
                                       std::uint64_t a_max, std::size_t trunc);

/// {n(n+1)/2 mod m : n >= 0}.
std::set<std::uint64_t> triangular_residues(std::uint64_t mod);
/// {n(3n-2) mod m : n in Z}.
std::set<std::uint64_t> octagonal_residues(std::uint64_t mod);

/// True iff x^2 ≡ -1 (mod p) has a solution, by exhaustive squaring.
bool minus_one_is_square(std::uint64_t p);

} // namespace apcore
