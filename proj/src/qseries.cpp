#include "apcore/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "apcore/parallel.hpp"

namespace apcore {

namespace {

std::optional<BigInt> combine_moduli(const std::optional<BigInt>& a, const std::optional<BigInt>& b)
{
    if (a && b)
        return BigInt(gcd(*a, *b));
    return a ? a : b;
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t trunc, std::optional<BigInt> modulus)
    : coeffs_(trunc + 1, 0)
    , modulus_(std::move(modulus))
{
    if (modulus_ && *modulus_ <= 0)
        throw std::invalid_argument("series modulus must be positive");
}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs, std::size_t trunc, std::optional<BigInt> modulus)
    : TruncatedSeries(trunc, std::move(modulus))
{
    const std::size_t n = std::min(coeffs.size(), trunc + 1);
    std::move(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(n), coeffs_.begin());
    canonicalize();
}

TruncatedSeries TruncatedSeries::one(std::size_t trunc)
{
    return monomial(0, 1, trunc);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t k, const BigInt& c, std::size_t trunc)
{
    TruncatedSeries s(trunc);
    if (k <= trunc)
        s.coeffs_[k] = c;
    return s;
}

TruncatedSeries TruncatedSeries::sparse(const std::vector<std::pair<std::size_t, BigInt>>& terms, std::size_t trunc)
{
    TruncatedSeries s(trunc);
    for (const auto& [e, c] : terms)
        if (e <= trunc)
            s.coeffs_[e] += c;
    return s;
}

void TruncatedSeries::canonicalize()
{
    if (!modulus_)
        return;
    for (auto& c : coeffs_) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus_->get_mpz_t());
    }
}

std::optional<std::size_t> TruncatedSeries::degree() const
{
    for (std::size_t n = coeffs_.size(); n-- > 0;)
        if (coeffs_[n] != 0)
            return n;
    return std::nullopt;
}

BigInt TruncatedSeries::coefficient_sum() const
{
    BigInt total = 0;
    for (const auto& c : coeffs_)
        total += c;
    return total;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t trunc) const
{
    if (trunc > this->trunc())
        throw std::invalid_argument("cannot extend a truncated series");
    return TruncatedSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(trunc + 1)),
                           trunc, modulus_);
}

TruncatedSeries TruncatedSeries::reduced(const BigInt& m) const
{
    return TruncatedSeries(coeffs_, trunc(), combine_moduli(modulus_, m));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const
{
    TruncatedSeries s(trunc(), modulus_);
    for (std::size_t n = k; n <= trunc(); ++n)
        s.coeffs_[n] = coeffs_[n - k];
    return s;
}

TruncatedSeries TruncatedSeries::pow(std::int64_t e) const
{
    if (e < 0)
        return inverse().pow(-e);
    TruncatedSeries result(trunc(), modulus_);
    result.coeffs_[0] = 1;
    result.canonicalize();
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

TruncatedSeries TruncatedSeries::inverse() const
{
    BigInt inv0;
    if (modulus_) {
        if (mpz_invert(inv0.get_mpz_t(), coeffs_[0].get_mpz_t(), modulus_->get_mpz_t()) == 0)
            throw std::domain_error("constant term is not invertible modulo " + modulus_->get_str());
    } else if (coeffs_[0] == 1 || coeffs_[0] == -1) {
        inv0 = coeffs_[0];
    } else {
        throw std::domain_error("constant term " + coeffs_[0].get_str() + " is not a unit");
    }
    TruncatedSeries g(trunc(), modulus_);
    g.coeffs_[0] = inv0;
    std::vector<std::size_t> support;
    for (std::size_t i = 1; i <= trunc(); ++i)
        if (coeffs_[i] != 0)
            support.push_back(i);
    BigInt acc;
    for (std::size_t n = 1; n <= trunc(); ++n) {
        acc = 0;
        for (std::size_t i : support) {
            if (i > n)
                break;
            mpz_addmul(acc.get_mpz_t(), coeffs_[i].get_mpz_t(), g.coeffs_[n - i].get_mpz_t());
        }
        g.coeffs_[n] = -acc * inv0;
        if (modulus_)
            mpz_fdiv_r(g.coeffs_[n].get_mpz_t(), g.coeffs_[n].get_mpz_t(), modulus_->get_mpz_t());
    }
    return g;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries s(*this);
    for (auto& c : s.coeffs_)
        c = -c;
    s.canonicalize();
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t n = std::min(a.trunc(), b.trunc());
    TruncatedSeries s(n, combine_moduli(a.modulus_, b.modulus_));
    for (std::size_t i = 0; i <= n; ++i)
        s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    s.canonicalize();
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a + (-b);
}

TruncatedSeries operator*(const BigInt& c, const TruncatedSeries& a)
{
    TruncatedSeries s(a);
    for (auto& x : s.coeffs_)
        x *= c;
    s.canonicalize();
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t n = std::min(a.trunc(), b.trunc());
    TruncatedSeries s(n, combine_moduli(a.modulus_, b.modulus_));
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i <= n; ++i)
        if (a.coeffs_[i] != 0)
            support.push_back(i);

    // each output coefficient is an independent dot product
    constexpr std::size_t block = 256;
    const std::size_t blocks = (n + block) / block;
    auto work = [&](std::size_t blk) {
        const std::size_t lo = blk * block;
        const std::size_t hi = std::min(n, lo + block - 1);
        for (std::size_t k = lo; k <= hi; ++k) {
            BigInt& acc = s.coeffs_[k];
            for (std::size_t i : support) {
                if (i > k)
                    break;
                const BigInt& y = b.coeffs_[k - i];
                if (y != 0)
                    mpz_addmul(acc.get_mpz_t(), a.coeffs_[i].get_mpz_t(), y.get_mpz_t());
            }
        }
    };
    if (blocks > 1 && support.size() > 64)
        parallel_for(blocks, work);
    else
        for (std::size_t blk = 0; blk < blocks; ++blk)
            work(blk);
    s.canonicalize();
    return s;
}

bool congruent(const TruncatedSeries& a, const TruncatedSeries& b, const BigInt& m)
{
    const std::size_t n = std::min(a.trunc(), b.trunc());
    BigInt diff;
    for (std::size_t i = 0; i <= n; ++i) {
        diff = a[i] - b[i];
        if (!mpz_divisible_p(diff.get_mpz_t(), m.get_mpz_t()))
            return false;
    }
    return true;
}

TruncatedSeries pochhammer(std::uint64_t a, std::int64_t e, std::size_t trunc)
{
    if (a == 0)
        throw std::invalid_argument("pochhammer base exponent must be positive");
    std::vector<BigInt> g(trunc + 1, 0);
    g[0] = 1;
    const std::uint64_t reps = static_cast<std::uint64_t>(e < 0 ? -e : e);
    for (std::uint64_t step = a; step <= trunc; step += a) {
        for (std::uint64_t r = 0; r < reps; ++r) {
            if (e > 0) {
                // times (1 - q^step)
                for (std::size_t n = trunc; n >= step; --n)
                    g[n] -= g[n - step];
            } else {
                // divided by (1 - q^step)
                for (std::size_t n = step; n <= trunc; ++n)
                    g[n] += g[n - step];
            }
        }
    }
    return TruncatedSeries(std::move(g), trunc);
}

TruncatedSeries pentagonal_series(std::size_t trunc)
{
    std::vector<std::pair<std::size_t, BigInt>> terms{{0, 1}};
    for (std::int64_t n = 1;; ++n) {
        const auto lo = static_cast<std::size_t>(n * (3 * n - 1) / 2);
        if (lo > trunc)
            break;
        const BigInt sign = (n % 2 == 0) ? 1 : -1;
        terms.emplace_back(lo, sign);
        terms.emplace_back(static_cast<std::size_t>(n * (3 * n + 1) / 2), sign);
    }
    return TruncatedSeries::sparse(terms, trunc);
}

TruncatedSeries jacobi_cube(std::size_t trunc)
{
    std::vector<std::pair<std::size_t, BigInt>> terms;
    for (std::int64_t n = 0; static_cast<std::size_t>(n * (n + 1) / 2) <= trunc; ++n)
        terms.emplace_back(static_cast<std::size_t>(n * (n + 1) / 2), BigInt((n % 2 ? -1 : 1) * (2 * n + 1)));
    return TruncatedSeries::sparse(terms, trunc);
}

TruncatedSeries octagonal_series(std::size_t trunc)
{
    std::vector<std::pair<std::size_t, BigInt>> terms{{0, 1}};
    for (std::int64_t n = 1; static_cast<std::size_t>(n * (3 * n - 2)) <= trunc; ++n) {
        terms.emplace_back(static_cast<std::size_t>(n * (3 * n - 2)), 1);
        terms.emplace_back(static_cast<std::size_t>(n * (3 * n + 2)), 1);
    }
    return TruncatedSeries::sparse(terms, trunc);
}

TruncatedSeries dissect(const TruncatedSeries& f, std::uint64_t m, std::uint64_t r)
{
    if (m == 0 || r >= m)
        throw std::invalid_argument("dissection needs 0 <= r < m");
    if (r > f.trunc())
        throw std::invalid_argument("dissection residue beyond truncation");
    const std::size_t trunc = (f.trunc() - r) / m;
    std::vector<BigInt> g(trunc + 1);
    for (std::size_t n = 0; n <= trunc; ++n)
        g[n] = f[m * n + r];
    return TruncatedSeries(std::move(g), trunc, f.modulus());
}

TruncatedSeries substitute_power(const TruncatedSeries& f, std::uint64_t k, std::optional<std::size_t> cap)
{
    if (k == 0)
        throw std::invalid_argument("substitution power must be positive");
    std::size_t trunc = f.trunc() * k;
    if (cap)
        trunc = std::min(trunc, *cap);
    std::vector<BigInt> g(trunc + 1, 0);
    for (std::size_t n = 0; n * k <= trunc; ++n)
        g[n * k] = f[n];
    return TruncatedSeries(std::move(g), trunc, f.modulus());
}

bool verify_dream_cong(std::uint64_t p, std::uint64_t k, std::uint64_t l, std::size_t trunc)
{
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (k == 0 || l == 0)
        throw std::invalid_argument("k and l must be positive");
    BigInt pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
    const auto lhs = pochhammer(l, static_cast<std::int64_t>(pk.get_ui()), trunc);
    const auto rhs = pochhammer(l * p, static_cast<std::int64_t>(pk.get_ui() / p), trunc);
    return congruent(lhs, rhs, pk);
}

bool verify_xia_yao(std::size_t trunc)
{
    const auto lhs = pochhammer(9, 1, trunc) * pochhammer(1, -1, trunc);
    const auto even = pochhammer(12, 3, trunc) * pochhammer(18, 1, trunc) * pochhammer(2, -2, trunc) *
                      pochhammer(6, -1, trunc) * pochhammer(36, -1, trunc);
    const auto odd = pochhammer(4, 2, trunc) * pochhammer(6, 1, trunc) * pochhammer(36, 1, trunc) *
                     pochhammer(2, -3, trunc) * pochhammer(12, -1, trunc);
    return lhs == even + odd.shifted(1);
}

bool verify_xia_yao_corollary(std::size_t trunc)
{
    const auto lhs = pochhammer(9, 1, trunc) * pochhammer(1, -1, trunc);
    const auto rhs = pochhammer(2, 4, trunc) + (pochhammer(36, 1, trunc) * pochhammer(4, -1, trunc)).shifted(1);
    return congruent(lhs, rhs, 3);
}

bool robbins_2core3_check(std::size_t trunc)
{
    const auto lhs = pochhammer(3, 3, trunc) * pochhammer(1, -1, trunc);
    return congruent(lhs, octagonal_series(trunc), 2);
}

} // namespace apcore
