#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apcore/bigint.hpp"

namespace apcore {

/// Polynomial in one variable with arbitrary-precision integer coefficients,
/// stored lowest degree first with no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial constant(const BigInt& c);
    /// x + c
    static IntPolynomial linear(const BigInt& c);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
    const BigInt& leading() const { return coeffs_.back(); }
    bool monic() const { return !is_zero() && leading() == 1; }

    BigInt operator()(const BigInt& x) const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const BigInt& c, const IntPolynomial& a);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Human form in the variable `var`, e.g. "s^2 + 9s + 14".
    std::string to_string(const std::string& var = "s") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// C(s+t, t) / (s+t), the number of (s, t)-cores for coprime s, t.
BigInt anderson_count(std::uint64_t s, std::uint64_t t);

/// Absorbed binomial sum over k = 0..floor(s/2) of
/// C(k+t-1, t-1) C(s+t-1, 2k+t-1) / t, for any s, t >= 1.
BigRational chs_sum(std::uint64_t s, std::uint64_t t);

/// The same count in its unabsorbed form: C(s+t,t)/(s+t) plus the sum over
/// k = 1..floor(s/2) of C(k+t, k) C(s+t-1, 2k+t-1) / (k+t).
BigRational chs_two_term(std::uint64_t s, std::uint64_t t);

/// Number of s (mod t)-cores for coprime s, t; the sum must be integral.
BigInt chs_large_p(std::uint64_t s, std::uint64_t t);

/// Unsigned Lah number (t!/m!) C(t-1, m-1) for t >= m >= 1.
BigInt lah(std::uint64_t t, std::uint64_t m);

/// Sum over m = 1..t of L(t, m) (s+1)(s+2)...(s+m-1).
IntPolynomial fayers_poly(std::uint64_t t);

/// 2^{s-t} f_t(s) / t!, asserted integral.
BigInt fayers_count(std::uint64_t s, std::uint64_t t);

struct CheckReport {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

/// 2t g_t(s) = (s + 3(t-1)) g_{t-1}(s) - (t-2) g_{t-2}(s) for 3 <= t <= t_max, 1 <= s <= s_max.
CheckReport check_g_recurrence(std::uint64_t t_max, std::uint64_t s_max);

/// f_t = (s + 3(t-1)) f_{t-1} - 2(t-1)(t-2) f_{t-2} as polynomials, 3 <= t <= t_max,
/// together with f_1 = 1 and f_2 = s + 3.
CheckReport check_f_recurrence(std::uint64_t t_max);

/// f_t(0) = (2^t - 1)(t-1)! for 1 <= t <= t_max.
CheckReport check_constant_term(std::uint64_t t_max);

/// f_t monic of degree t-1 with nonnegative coefficients, 1 <= t <= t_max.
CheckReport check_fayers_shape(std::uint64_t t_max);

struct Conjecture2Row {
    std::uint64_t t;
    BigInt root;  ///< -(t + (-1)^t)
    BigInt value; ///< f_t(root)
    bool vanishes() const { return value == 0; }
};

/// Evaluates f_t at -(t + (-1)^t) for 2 <= t <= t_max. Reported, not asserted.
std::vector<Conjecture2Row> check_conjecture2(std::uint64_t t_max);

} // namespace apcore
