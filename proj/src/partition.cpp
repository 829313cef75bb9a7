#include "apcore/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "apcore/parallel.hpp"

namespace apcore {

Partition::Partition(std::vector<std::uint32_t> parts)
    : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be nonincreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::conjugate() const
{
    if (parts_.empty())
        return {};
    std::vector<std::uint32_t> conj(parts_.front(), 0);
    for (std::uint32_t row : parts_)
        for (std::uint32_t j = 0; j < row; ++j)
            ++conj[j];
    return Partition(std::move(conj));
}

std::vector<std::uint64_t> Partition::first_column_hooks() const
{
    // bead i (counting from the bottom row) sits at part + (number of rows below it)
    const std::size_t k = parts_.size();
    std::vector<std::uint64_t> hooks(k);
    for (std::size_t i = 0; i < k; ++i)
        hooks[i] = parts_[i] + (k - 1 - i);
    return hooks;
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

Partition Partition::parse(const std::string& text)
{
    std::string body;
    for (char c : text)
        if (c != ' ' && c != '(' && c != ')')
            body += c;
    if (body.empty() || body == "0" || body == "-")
        return {};
    std::vector<std::uint32_t> parts;
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("bad partition part '" + item + "' in '" + text + "'");
        parts.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    return Partition(std::move(parts));
}

HookProgression::HookProgression(std::uint64_t s_, std::uint64_t t_, std::optional<std::uint64_t> p_)
    : s(s_)
    , t(t_)
    , p(p_)
{
    if (s == 0)
        throw std::invalid_argument("hook progression needs s >= 1");
}

bool HookProgression::finite() const noexcept
{
    if (s == 1)
        return true;
    if (t == 0 || std::gcd(s, t) != 1)
        return false;
    return !p || *p >= 1;
}

std::string HookProgression::to_string() const
{
    std::ostringstream os;
    os << '{' << s;
    if (t != 0) {
        if (p && *p == 0) {
        } else if (p && *p == 1) {
            os << ", " << s + t;
        } else {
            os << ", " << s + t << ", ";
            if (p)
                os << "..., " << s + *p * t;
            else
                os << "...";
        }
    }
    os << '}';
    return os.str();
}

std::vector<std::uint64_t> hook_multiset(const Partition& lambda)
{
    const auto& rows = lambda.parts();
    const Partition conj = lambda.conjugate();
    const auto& cols = conj.parts();
    std::vector<std::uint64_t> hooks;
    hooks.reserve(lambda.weight());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i]; ++j)
            hooks.push_back((rows[i] - j - 1) + (cols[j] - i - 1) + 1);
    std::sort(hooks.begin(), hooks.end(), std::greater<>());
    return hooks;
}

bool is_core(const Partition& lambda, const HookProgression& hooks)
{
    const auto& rows = lambda.parts();
    const Partition conj = lambda.conjugate();
    const auto& cols = conj.parts();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i]; ++j)
            if (hooks.contains((rows[i] - j - 1) + (cols[j] - i - 1) + 1))
                return false;
    return true;
}

PartitionGenerator::PartitionGenerator(std::uint32_t n)
    : n_(n)
{
}

std::optional<Partition> PartitionGenerator::next()
{
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        if (n_ > 0)
            current_.assign(1, n_);
        return Partition(current_);
    }
    // drop trailing ones, decrement the last part > 1, refill greedily
    std::uint32_t freed = 0;
    while (!current_.empty() && current_.back() == 1) {
        current_.pop_back();
        ++freed;
    }
    if (current_.empty()) {
        done_ = true;
        return std::nullopt;
    }
    const std::uint32_t cap = --current_.back();
    ++freed;
    while (freed > 0) {
        const std::uint32_t part = std::min(cap, freed);
        current_.push_back(part);
        freed -= part;
    }
    return Partition(current_);
}

std::vector<Partition> generate_partitions(std::uint32_t n)
{
    std::vector<Partition> out;
    PartitionGenerator gen(n);
    while (auto p = gen.next())
        out.push_back(std::move(*p));
    return out;
}

namespace {

// Depth-first search over bead sets. Position 0 is always a spacer; a new bead
// at x above the current top bead adds the hooks x - y for every spacer y < x.
class CoreSearch {
public:
    CoreSearch(const HookProgression& hooks, std::uint64_t max_weight)
        : hooks_(hooks)
        , max_weight_(max_weight)
    {
    }

    // Candidate positions for the first (bottom-row) bead.
    std::vector<std::uint64_t> first_candidates() const { return candidates(-1, 0, 0); }

    template <class Visit>
    void run_from(std::uint64_t first_bead, Visit&& visit)
    {
        bead_.assign(first_bead + 1, false);
        positions_.clear();
        if (!admissible(first_bead))
            return;
        place(first_bead, 0, visit);
    }

private:
    std::vector<std::uint64_t> candidates(std::int64_t top, std::uint64_t count, std::uint64_t weight) const
    {
        // A run of s or more spacers below x would contain hook s.
        std::vector<std::uint64_t> out;
        const std::uint64_t lo = static_cast<std::uint64_t>(top + 1) + (top < 0 ? 1 : 0);
        const std::uint64_t hi = static_cast<std::uint64_t>(top + static_cast<std::int64_t>(hooks_.s));
        for (std::uint64_t x = lo; x <= hi; ++x) {
            if (x < count || weight + (x - count) > max_weight_)
                break;
            out.push_back(x);
        }
        return out;
    }

    bool admissible(std::uint64_t x) const
    {
        for (std::uint64_t y = x; y-- > 0;)
            if (!bead_[y] && hooks_.contains(x - y))
                return false;
        return true;
    }

    template <class Visit>
    void place(std::uint64_t x, std::uint64_t weight, Visit& visit)
    {
        const std::uint64_t count = positions_.size();
        const std::uint64_t new_weight = weight + (x - count);
        if (bead_.size() <= x)
            bead_.resize(x + 1, false);
        bead_[x] = true;
        positions_.push_back(x);
        visit(positions_, new_weight);
        for (std::uint64_t next : candidates(static_cast<std::int64_t>(x), count + 1, new_weight)) {
            if (bead_.size() <= next)
                bead_.resize(next + 1, false);
            if (admissible(next))
                place(next, new_weight, visit);
        }
        positions_.pop_back();
        bead_[x] = false;
    }

    const HookProgression& hooks_;
    std::uint64_t max_weight_;
    std::vector<bool> bead_;
    std::vector<std::uint64_t> positions_;
};

Partition partition_from_positions(const std::vector<std::uint64_t>& ascending)
{
    const std::size_t k = ascending.size();
    std::vector<std::uint32_t> parts(k);
    for (std::size_t i = 0; i < k; ++i)
        parts[k - 1 - i] = static_cast<std::uint32_t>(ascending[i] - i);
    return Partition(std::move(parts));
}

} // namespace

std::vector<BigInt> enumerate_cores(const HookProgression& hooks, std::uint64_t max_weight)
{
    const auto firsts = CoreSearch(hooks, max_weight).first_candidates();
    std::vector<std::vector<std::uint64_t>> partial(firsts.size());
    parallel_for(firsts.size(), [&](std::size_t i) {
        std::vector<std::uint64_t> counts(max_weight + 1, 0);
        CoreSearch search(hooks, max_weight);
        search.run_from(firsts[i], [&](const std::vector<std::uint64_t>&, std::uint64_t w) { ++counts[w]; });
        partial[i] = std::move(counts);
    });
    std::vector<BigInt> counts(max_weight + 1, 0);
    counts[0] = 1;
    for (const auto& part : partial)
        for (std::size_t w = 0; w <= max_weight; ++w)
            counts[w] += static_cast<unsigned long>(part[w]);
    return counts;
}

std::vector<Partition> list_cores(const HookProgression& hooks, std::uint64_t max_weight)
{
    std::vector<Partition> out{Partition{}};
    CoreSearch search(hooks, max_weight);
    for (std::uint64_t first : search.first_candidates())
        search.run_from(first, [&](const std::vector<std::uint64_t>& beads, std::uint64_t) {
            out.push_back(partition_from_positions(beads));
        });
    return out;
}

std::uint64_t core_size_bound(std::uint64_t s, std::uint64_t t)
{
    const std::uint64_t u = s + t;
    return (s * s - 1) * (u * u - 1) / 24;
}

BigInt total_core_count(const HookProgression& hooks)
{
    if (!hooks.finite())
        throw std::invalid_argument("infinitely many partitions avoid " + hooks.to_string());
    if (hooks.s == 1)
        return 1;
    const auto counts = enumerate_cores(hooks, core_size_bound(hooks.s, hooks.t));
    return std::accumulate(counts.begin(), counts.end(), BigInt(0));
}

} // namespace apcore
