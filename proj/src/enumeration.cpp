#include "apcore/enumeration.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace apcore {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs))
{
    trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c)
{
    return IntPolynomial({c});
}

IntPolynomial IntPolynomial::linear(const BigInt& c)
{
    return IntPolynomial({c, 1});
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt IntPolynomial::operator()(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
{
    return a + BigInt(-1) * b;
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& a)
{
    std::vector<BigInt> out(a.coeffs_);
    for (auto& x : out)
        x *= c;
    return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0)
            continue;
        BigInt mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0 || mag != 1)
            os << mag.get_str();
        if (k >= 1)
            os << var;
        if (k >= 2)
            os << '^' << k;
    }
    return os.str();
}

BigInt anderson_count(std::uint64_t s, std::uint64_t t)
{
    if (s == 0 || t == 0 || std::gcd(s, t) != 1)
        throw std::invalid_argument("anderson_count needs coprime positive s, t");
    BigRational r(binomial(static_cast<std::int64_t>(s + t), static_cast<std::int64_t>(t)), BigInt(s + t));
    r.canonicalize();
    return require_integer(r, "anderson_count");
}

BigRational chs_sum(std::uint64_t s, std::uint64_t t)
{
    if (s == 0 || t == 0)
        throw std::invalid_argument("chs_sum needs positive s, t");
    const auto si = static_cast<std::int64_t>(s);
    const auto ti = static_cast<std::int64_t>(t);
    BigInt total = 0;
    for (std::int64_t k = 0; k <= si / 2; ++k)
        total += binomial(k + ti - 1, ti - 1) * binomial(si + ti - 1, 2 * k + ti - 1);
    BigRational r(total, BigInt(t));
    r.canonicalize();
    return r;
}

BigRational chs_two_term(std::uint64_t s, std::uint64_t t)
{
    if (s == 0 || t == 0)
        throw std::invalid_argument("chs_two_term needs positive s, t");
    const auto si = static_cast<std::int64_t>(s);
    const auto ti = static_cast<std::int64_t>(t);
    BigRational total(binomial(si + ti, ti), BigInt(s + t));
    total.canonicalize();
    for (std::int64_t k = 1; k <= si / 2; ++k) {
        // the l = 0 term of the inner sum; C(k-1, 0) = 1
        BigRational term(binomial(k + ti, k) * binomial(k - 1, 0) * binomial(si + ti - 1, 2 * k + ti - 1),
                         BigInt(k + ti));
        term.canonicalize();
        total += term;
    }
    return total;
}

BigInt chs_large_p(std::uint64_t s, std::uint64_t t)
{
    if (s == 0 || t == 0 || std::gcd(s, t) != 1)
        throw std::invalid_argument("chs_large_p needs coprime positive s, t");
    return require_integer(chs_sum(s, t), "chs_large_p");
}

BigInt lah(std::uint64_t t, std::uint64_t m)
{
    if (m < 1 || m > t)
        throw std::invalid_argument("lah(t, m) needs t >= m >= 1");
    return factorial(t) / factorial(m) *
           binomial(static_cast<std::int64_t>(t) - 1, static_cast<std::int64_t>(m) - 1);
}

IntPolynomial fayers_poly(std::uint64_t t)
{
    if (t == 0)
        throw std::invalid_argument("fayers_poly needs t >= 1");
    IntPolynomial total;
    IntPolynomial rising = IntPolynomial::constant(1); // (s+1)(s+2)...(s+m-1)
    for (std::uint64_t m = 1; m <= t; ++m) {
        if (m > 1)
            rising = rising * IntPolynomial::linear(BigInt(m - 1));
        total = total + lah(t, m) * rising;
    }
    return total;
}

BigInt fayers_count(std::uint64_t s, std::uint64_t t)
{
    if (s == 0 || t == 0 || std::gcd(s, t) != 1)
        throw std::invalid_argument("fayers_count needs coprime positive s, t");
    BigRational value(fayers_poly(t)(BigInt(s)), factorial(t));
    value.canonicalize();
    value *= pow2(static_cast<std::int64_t>(s) - static_cast<std::int64_t>(t));
    return require_integer(value, "fayers_count");
}

CheckReport check_g_recurrence(std::uint64_t t_max, std::uint64_t s_max)
{
    CheckReport report{"g-recurrence", 0, {}};
    for (std::uint64_t t = 3; t <= t_max; ++t) {
        for (std::uint64_t s = 1; s <= s_max; ++s) {
            const BigRational lhs = BigRational(2 * t) * chs_sum(s, t);
            const BigRational rhs = BigRational(s + 3 * (t - 1)) * chs_sum(s, t - 1) -
                                    BigRational(t - 2) * chs_sum(s, t - 2);
            ++report.checked;
            if (lhs != rhs)
                report.failures.push_back("t=" + std::to_string(t) + " s=" + std::to_string(s) + ": " +
                                          lhs.get_str() + " != " + rhs.get_str());
        }
    }
    return report;
}

CheckReport check_f_recurrence(std::uint64_t t_max)
{
    CheckReport report{"f-recurrence", 0, {}};
    auto expect = [&](bool ok, const std::string& what) {
        ++report.checked;
        if (!ok)
            report.failures.push_back(what);
    };
    if (t_max >= 1)
        expect(fayers_poly(1) == IntPolynomial::constant(1), "f_1 != 1");
    if (t_max >= 2)
        expect(fayers_poly(2) == IntPolynomial::linear(3), "f_2 != s + 3");
    for (std::uint64_t t = 3; t <= t_max; ++t) {
        const IntPolynomial rhs = IntPolynomial::linear(BigInt(3 * (t - 1))) * fayers_poly(t - 1) -
                                  BigInt(2 * (t - 1) * (t - 2)) * fayers_poly(t - 2);
        expect(fayers_poly(t) == rhs, "t=" + std::to_string(t) + ": " + fayers_poly(t).to_string() +
                                          " != " + rhs.to_string());
    }
    return report;
}

CheckReport check_constant_term(std::uint64_t t_max)
{
    CheckReport report{"constant-term", 0, {}};
    for (std::uint64_t t = 1; t <= t_max; ++t) {
        BigInt pow = 1;
        mpz_mul_2exp(pow.get_mpz_t(), pow.get_mpz_t(), t);
        const BigInt expected = (pow - 1) * factorial(t - 1);
        const BigInt actual = fayers_poly(t).coefficient(0);
        ++report.checked;
        if (actual != expected)
            report.failures.push_back("t=" + std::to_string(t) + ": " + actual.get_str() + " != " +
                                      expected.get_str());
    }
    return report;
}

CheckReport check_fayers_shape(std::uint64_t t_max)
{
    CheckReport report{"monic-degree-nonnegative", 0, {}};
    for (std::uint64_t t = 1; t <= t_max; ++t) {
        const auto f = fayers_poly(t);
        ++report.checked;
        bool nonneg = true;
        for (const auto& c : f.coeffs())
            nonneg = nonneg && c >= 0;
        if (!f.monic() || f.degree() != static_cast<std::int64_t>(t) - 1 || !nonneg)
            report.failures.push_back("t=" + std::to_string(t) + ": " + f.to_string());
    }
    return report;
}

std::vector<Conjecture2Row> check_conjecture2(std::uint64_t t_max)
{
    std::vector<Conjecture2Row> rows;
    for (std::uint64_t t = 2; t <= t_max; ++t) {
        const BigInt root = -(BigInt(t) + (t % 2 == 0 ? 1 : -1));
        rows.push_back({t, root, fayers_poly(t)(root)});
    }
    return rows;
}

} // namespace apcore
