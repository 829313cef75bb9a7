#include "apcore/abacus.hpp"

#include <sstream>
#include <stdexcept>

namespace apcore {

BeadSequence::BeadSequence(std::set<std::uint64_t> beads)
    : beads_(std::move(beads))
{
    if (beads_.contains(0))
        throw std::invalid_argument("position 0 must be a spacer");
}

bool RunnerView::bead_at(std::uint64_t runner, std::int64_t column) const
{
    if (column < 0)
        return true;
    const auto c = static_cast<std::size_t>(column + 1);
    return c < runners.at(runner).size() && runners[runner][c];
}

BeadSequence from_partition(const Partition& lambda)
{
    const auto hooks = lambda.first_column_hooks();
    return BeadSequence(std::set<std::uint64_t>(hooks.begin(), hooks.end()));
}

Partition to_partition(const BeadSequence& beads)
{
    // part for a bead = number of spacers below it
    std::vector<std::uint32_t> parts;
    std::uint64_t below = 0;
    for (std::uint64_t x : beads.beads()) {
        parts.push_back(static_cast<std::uint32_t>(x - below));
        ++below;
    }
    return Partition(std::vector<std::uint32_t>(parts.rbegin(), parts.rend()));
}

bool has_hook(const BeadSequence& beads, std::uint64_t y)
{
    if (y == 0)
        throw std::invalid_argument("hook length must be positive");
    for (std::uint64_t x : beads.beads())
        if (x >= y && !beads.is_bead(static_cast<std::int64_t>(x - y)))
            return true;
    return false;
}

RunnerView runner_view(const BeadSequence& beads, std::uint64_t d)
{
    if (d == 0)
        throw std::invalid_argument("runner count must be positive");
    RunnerView view;
    view.d = d;
    // at least one all-spacer column past the last bead
    const std::size_t columns = beads.max_position() / d + 3;
    view.runners.assign(d, std::vector<bool>(columns, false));
    for (std::uint64_t i = 0; i < d; ++i) {
        view.runners[i][0] = true;
        for (std::size_t c = 1; c < columns; ++c)
            view.runners[i][c] = beads.is_bead(static_cast<std::int64_t>((c - 1) * d + i));
    }
    return view;
}

BeadSequence reassemble(const RunnerView& view)
{
    std::set<std::uint64_t> beads;
    for (std::uint64_t i = 0; i < view.d; ++i)
        for (std::size_t c = 1; c < view.runners[i].size(); ++c)
            if (view.runners[i][c])
                beads.insert((c - 1) * view.d + i);
    return BeadSequence(std::move(beads));
}

std::string render(const RunnerView& view)
{
    std::ostringstream os;
    for (std::uint64_t i = 0; i < view.d; ++i) {
        for (std::size_t c = 0; c < view.runners[i].size(); ++c)
            os << (c ? " " : "") << (view.runners[i][c] ? 'o' : '.');
        os << '\n';
    }
    return os.str();
}

RunnerView parse_rendered(const std::string& text)
{
    RunnerView view;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::vector<bool> row;
        for (char c : line) {
            if (c == 'o')
                row.push_back(true);
            else if (c == '.')
                row.push_back(false);
            else if (c != ' ')
                throw std::invalid_argument(std::string("unexpected abacus symbol '") + c + "'");
        }
        if (row.empty())
            continue;
        if (!view.runners.empty() && row.size() != view.runners.front().size())
            throw std::invalid_argument("abacus rows differ in length");
        view.runners.push_back(std::move(row));
    }
    view.d = view.runners.size();
    if (view.d == 0)
        throw std::invalid_argument("empty abacus");
    return view;
}

bool runners_settled(const RunnerView& view)
{
    for (const auto& runner : view.runners) {
        bool seen_spacer = false;
        for (bool bead : runner) {
            if (!bead)
                seen_spacer = true;
            else if (seen_spacer)
                return false;
        }
    }
    return true;
}

std::vector<Partition> parametrized_3mod_cores(std::uint64_t m, ThreeModVariant variant)
{
    const bool one = variant == ThreeModVariant::OnePlus3m;
    const std::int64_t top_j = static_cast<std::int64_t>(m) + 1;
    const std::int64_t top_l = static_cast<std::int64_t>(m) + (one ? 1 : 2);
    // runner stopping at height j for the outer index, the other at j + l
    const std::uint64_t outer_runner = one ? 1 : 2;
    const std::uint64_t inner_runner = one ? 2 : 1;

    std::vector<Partition> cores;
    for (std::int64_t j = 0; j <= top_j; ++j) {
        for (std::int64_t l = -j; l <= top_l; ++l) {
            if (j == top_j && l == top_l)
                continue;
            std::set<std::uint64_t> beads;
            for (std::int64_t h = 0; h < j; ++h)
                beads.insert(3 * static_cast<std::uint64_t>(h) + outer_runner);
            for (std::int64_t h = 0; h < j + l; ++h)
                beads.insert(3 * static_cast<std::uint64_t>(h) + inner_runner);
            cores.push_back(to_partition(BeadSequence(std::move(beads))));
        }
    }
    return cores;
}

} // namespace apcore
