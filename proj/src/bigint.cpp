#include "apcore/bigint.hpp"

namespace apcore {

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(std::uint64_t n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt rising_factorial(const BigInt& x, std::uint64_t m)
{
    BigInt r = 1;
    for (std::uint64_t i = 0; i < m; ++i)
        r *= x + i;
    return r;
}

BigRational pow2(std::int64_t e)
{
    BigInt p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
    if (e >= 0)
        return BigRational(p);
    BigRational r(BigInt(1), p);
    r.canonicalize();
    return r;
}

BigInt require_integer(const BigRational& r, const char* what)
{
    if (r.get_den() != 1)
        throw std::logic_error(std::string(what) + ": non-integral value " + r.get_str());
    return r.get_num();
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace apcore
