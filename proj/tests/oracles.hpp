#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's search, abacus or series code.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Parts = std::vector<std::uint32_t>;

/// All partitions of n by plain recursion on the largest part.
inline std::vector<Parts> partitions(std::uint32_t n)
{
    std::vector<Parts> out;
    Parts cur;
    std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t rest, std::uint32_t cap) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t part = std::min(rest, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(rest - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Hook lengths by walking the Young diagram as a boolean grid.
inline std::vector<std::uint64_t> hooks(const Parts& rows)
{
    std::vector<std::uint64_t> out;
    if (rows.empty())
        return out;
    const std::size_t height = rows.size();
    const std::size_t width = rows.front();
    std::vector<std::vector<bool>> cell(height, std::vector<bool>(width, false));
    for (std::size_t i = 0; i < height; ++i)
        for (std::size_t j = 0; j < rows[i]; ++j)
            cell[i][j] = true;
    for (std::size_t i = 0; i < height; ++i) {
        for (std::size_t j = 0; j < width; ++j) {
            if (!cell[i][j])
                continue;
            std::uint64_t h = 1;
            for (std::size_t jj = j + 1; jj < width && cell[i][jj]; ++jj)
                ++h;
            for (std::size_t ii = i + 1; ii < height && cell[ii][j]; ++ii)
                ++h;
            out.push_back(h);
        }
    }
    return out;
}

/// p(0..n) by the coin-change recurrence over part sizes.
inline std::vector<std::uint64_t> partition_counts(std::size_t n)
{
    std::vector<std::uint64_t> p(n + 1, 0);
    p[0] = 1;
    for (std::size_t part = 1; part <= n; ++part)
        for (std::size_t k = part; k <= n; ++k)
            p[k] += p[k - part];
    return p;
}

/// Counts of partitions of each weight <= n whose hooks avoid `forbidden`,
/// by exhaustive generation and post-hoc filtering.
inline std::vector<std::uint64_t> filtered_counts(std::uint32_t n, const std::function<bool(std::uint64_t)>& forbidden)
{
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (std::uint32_t w = 0; w <= n; ++w)
        for (const auto& p : partitions(w)) {
            bool ok = true;
            for (auto h : hooks(p))
                ok = ok && !forbidden(h);
            if (ok)
                ++counts[w];
        }
    return counts;
}

/// Dense product of integer polynomials, truncated at `trunc`.
inline std::vector<long long> multiply(const std::vector<long long>& a, const std::vector<long long>& b, std::size_t trunc)
{
    std::vector<long long> c(trunc + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= trunc; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= trunc; ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

/// Coefficient list from exponent -> coefficient pairs.
inline std::vector<long long> from_terms(const std::map<std::size_t, long long>& terms, std::size_t trunc)
{
    std::vector<long long> c(trunc + 1, 0);
    for (auto [e, v] : terms)
        if (e <= trunc)
            c[e] += v;
    return c;
}

} // namespace oracle
