#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "apcore/bigint.hpp"

namespace apcore {

/// Formal power series with exact integer coefficients, known through q^trunc.
///
/// With a modulus m every coefficient is kept in [0, m). Binary operations
/// work to the smaller truncation of their operands; moduli combine by gcd.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t trunc, std::optional<BigInt> modulus = std::nullopt);
    TruncatedSeries(std::vector<BigInt> coeffs, std::size_t trunc, std::optional<BigInt> modulus = std::nullopt);

    static TruncatedSeries one(std::size_t trunc);
    /// c q^k (zero if k > trunc).
    static TruncatedSeries monomial(std::size_t k, const BigInt& c, std::size_t trunc);
    /// Sum of c_i q^{e_i} for the listed exponents, ignoring those beyond trunc.
    static TruncatedSeries sparse(const std::vector<std::pair<std::size_t, BigInt>>& terms, std::size_t trunc);

    std::size_t trunc() const noexcept { return coeffs_.size() - 1; }
    const std::optional<BigInt>& modulus() const noexcept { return modulus_; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    const BigInt& operator[](std::size_t n) const { return coeffs_.at(n); }

    /// Highest exponent with a nonzero coefficient, or nullopt for the zero series.
    std::optional<std::size_t> degree() const;
    BigInt coefficient_sum() const;

    TruncatedSeries truncated(std::size_t trunc) const;
    TruncatedSeries reduced(const BigInt& m) const;
    /// Multiplication by q^k.
    TruncatedSeries shifted(std::size_t k) const;
    TruncatedSeries pow(std::int64_t e) const;
    /// Requires a constant term that is a unit (±1, or invertible mod the modulus).
    TruncatedSeries inverse() const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const BigInt& c, const TruncatedSeries& a);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void canonicalize();

    std::vector<BigInt> coeffs_;
    std::optional<BigInt> modulus_;
};

/// Coefficientwise a ≡ b (mod m) through the smaller truncation.
bool congruent(const TruncatedSeries& a, const TruncatedSeries& b, const BigInt& m);

/// (q^a; q^a)_∞^e through q^trunc, built factor by factor. Negative e divides.
TruncatedSeries pochhammer(std::uint64_t a, std::int64_t e, std::size_t trunc);

/// Sum over n in Z of (-1)^n q^{n(3n-1)/2}.
TruncatedSeries pentagonal_series(std::size_t trunc);
/// Sum over n >= 0 of (-1)^n (2n+1) q^{n(n+1)/2}.
TruncatedSeries jacobi_cube(std::size_t trunc);
/// Sum over n in Z of q^{n(3n-2)}.
TruncatedSeries octagonal_series(std::size_t trunc);

/// g[n] = f[m n + r]. Throws if r exceeds the truncation.
TruncatedSeries dissect(const TruncatedSeries& f, std::uint64_t m, std::uint64_t r);

/// f(q^k), truncated at min(k * f.trunc(), cap).
TruncatedSeries substitute_power(const TruncatedSeries& f, std::uint64_t k,
                                 std::optional<std::size_t> cap = std::nullopt);

/// (q^l;q^l)^{p^k} ≡ (q^{lp};q^{lp})^{p^{k-1}} (mod p^k). Throws for composite p.
bool verify_dream_cong(std::uint64_t p, std::uint64_t k, std::uint64_t l, std::size_t trunc);

/// The exact 2-dissection of (q^9;q^9)/(q;q).
bool verify_xia_yao(std::size_t trunc);
/// (q^9;q^9)/(q;q) ≡ (q^2;q^2)^4 + q (q^36;q^36)/(q^4;q^4) (mod 3).
bool verify_xia_yao_corollary(std::size_t trunc);
/// (q^3;q^3)^3/(q;q) ≡ sum over n in Z of q^{n(3n-2)} (mod 2).
bool robbins_2core3_check(std::size_t trunc);

} // namespace apcore
