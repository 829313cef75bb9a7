#include "apcore/genfun.hpp"

#include <numeric>
#include <stdexcept>

#include "apcore/partition.hpp"

namespace apcore {

std::string to_string(GenFunRoute route)
{
    switch (route) {
    case GenFunRoute::ClosedForm:
        return "closed-form";
    case GenFunRoute::Composite:
        return "composite";
    case GenFunRoute::BruteForce:
        return "brute-force";
    }
    return "unknown";
}

GenFunRequest::GenFunRequest(std::uint64_t s_, std::uint64_t t_, std::size_t trunc_)
    : s(s_)
    , t(t_)
    , trunc(trunc_)
    , d(std::gcd(s_, t_))
{
    if (s == 0 || t == 0)
        throw std::invalid_argument("s and t must be positive");
}

GenFunRoute GenFunRequest::route() const
{
    if (d > 1)
        return GenFunRoute::Composite;
    if (s <= 2 || s == 3)
        return GenFunRoute::ClosedForm;
    return GenFunRoute::BruteForce;
}

namespace {

TruncatedSeries polynomial(const std::vector<std::pair<std::size_t, BigInt>>& terms)
{
    std::size_t deg = 0;
    for (const auto& term : terms)
        deg = std::max(deg, term.first);
    return TruncatedSeries::sparse(terms, deg);
}

// Trims trailing zeros so polynomial outputs have trunc == degree.
TruncatedSeries trim(const TruncatedSeries& f)
{
    return f.truncated(f.degree().value_or(0));
}

} // namespace

TruncatedSeries gf_two_mod_odd(std::uint64_t m)
{
    std::vector<std::pair<std::size_t, BigInt>> terms;
    for (std::uint64_t k = 0; k <= m + 1; ++k)
        terms.emplace_back(k * (k + 1) / 2, 1);
    return polynomial(terms);
}

TruncatedSeries gf_four_mod(std::uint64_t m, std::size_t trunc)
{
    std::vector<std::pair<std::size_t, BigInt>> terms;
    for (std::uint64_t k = 0; k <= m + 1; ++k)
        terms.emplace_back(k * k + k, 1);
    const auto theta = TruncatedSeries::sparse(terms, trunc);
    return pochhammer(2, 2, trunc) * pochhammer(1, -1, trunc) * theta * theta;
}

TruncatedSeries gf_four_mod_staircase(std::uint64_t m, std::size_t trunc)
{
    std::vector<std::pair<std::size_t, BigInt>> triangular;
    for (std::size_t n = 0; n * (n + 1) / 2 <= trunc; ++n)
        triangular.emplace_back(n * (n + 1) / 2, 1);
    std::vector<std::pair<std::size_t, BigInt>> doubled;
    for (std::uint64_t k = 0; k <= m + 1; ++k)
        doubled.emplace_back(k * (k + 1), 1);
    const auto f = TruncatedSeries::sparse(doubled, trunc);
    return TruncatedSeries::sparse(triangular, trunc) * f * f;
}

TruncatedSeries gf_three_mod(std::uint64_t m, ThreeModVariant variant)
{
    const auto mm = static_cast<std::int64_t>(m);
    const bool one = variant == ThreeModVariant::OnePlus3m;
    const std::int64_t l_max = one ? mm + 1 : mm + 2;
    std::vector<std::pair<std::size_t, BigInt>> terms;
    for (std::int64_t j = 0; j <= mm + 1; ++j) {
        for (std::int64_t l = -j; l <= l_max; ++l) {
            const std::int64_t e = j * j + j + l * j + l * l + (one ? l : 0);
            if (e < 0)
                throw std::logic_error("negative exponent in 3-mod double sum");
            terms.emplace_back(static_cast<std::size_t>(e), 1);
        }
    }
    const std::int64_t correction = one ? 3 * (mm + 1) * (mm + 1) + 2 * (mm + 1) : (3 * mm + 4) * (mm + 2);
    terms.emplace_back(static_cast<std::size_t>(correction), -1);
    return trim(polynomial(terms));
}

TruncatedSeries weight_polynomial(const std::vector<Partition>& partitions)
{
    std::vector<std::pair<std::size_t, BigInt>> terms;
    for (const auto& p : partitions)
        terms.emplace_back(p.weight(), 1);
    if (terms.empty())
        return TruncatedSeries(0);
    return polynomial(terms);
}

TruncatedSeries gf_coprime(std::uint64_t s, std::uint64_t t, GenFunRoute* route)
{
    if (std::gcd(s, t) != 1)
        throw std::invalid_argument("gf_coprime needs gcd(s, t) = 1");
    const GenFunRoute r = GenFunRequest(s, t, 0).route();
    if (route)
        *route = r;
    if (s == 1)
        return TruncatedSeries::one(0);
    if (s == 2)
        return gf_two_mod_odd((t - 1) / 2);
    if (s == 3)
        return gf_three_mod(t / 3, t % 3 == 1 ? ThreeModVariant::OnePlus3m : ThreeModVariant::TwoPlus3m);
    const auto counts = enumerate_cores(HookProgression(s, t), core_size_bound(s, t));
    return trim(TruncatedSeries(counts, counts.size() - 1));
}

TruncatedSeries gf_composite(std::uint64_t s, std::uint64_t t, std::size_t trunc, GenFunRoute* route)
{
    const GenFunRequest req(s, t, trunc);
    if (route)
        *route = req.route();
    if (req.d == 1) {
        const auto poly = gf_coprime(s, t);
        std::vector<BigInt> c(poly.coeffs().begin(), poly.coeffs().end());
        return TruncatedSeries(std::move(c), trunc);
    }
    const std::size_t inner_trunc = (trunc + req.d - 1) / req.d;
    const auto inner = gf_composite(s / req.d, t / req.d, inner_trunc);
    const auto lifted = substitute_power(inner, req.d).truncated(trunc);
    const auto d = static_cast<std::int64_t>(req.d);
    return pochhammer(req.d, d, trunc) * pochhammer(1, -1, trunc) * lifted.pow(d);
}

} // namespace apcore
