#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace apcore {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Binomial coefficient with C(n, k) = 0 outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(std::uint64_t n);

/// x (x+1) ... (x+m-1), with x^(0) = 1.
BigInt rising_factorial(const BigInt& x, std::uint64_t m);

/// 2^e as an exact rational; e may be negative.
BigRational pow2(std::int64_t e);

/// Returns the integer value of r, throwing std::logic_error if r is not integral.
BigInt require_integer(const BigRational& r, const char* what);

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const BigRational& v) { return v.get_str(); }

bool is_prime(std::uint64_t n);

} // namespace apcore
