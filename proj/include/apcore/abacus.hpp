#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "apcore/partition.hpp"

namespace apcore {

/// Abacus encoding of a partition's boundary, normalized so that position 0 is
/// the first spacer. Negative positions are implicit beads and positions above
/// the largest stored bead are implicit spacers, so bead positions coincide
/// with the first-column hook lengths.
class BeadSequence {
public:
    BeadSequence() = default;
    /// Throws std::invalid_argument if 0 is among the positions.
    explicit BeadSequence(std::set<std::uint64_t> beads);

    const std::set<std::uint64_t>& beads() const noexcept { return beads_; }

    bool is_bead(std::int64_t position) const
    {
        return position < 0 || beads_.contains(static_cast<std::uint64_t>(position));
    }

    std::uint64_t max_position() const noexcept { return beads_.empty() ? 0 : *beads_.rbegin(); }

    friend bool operator==(const BeadSequence&, const BeadSequence&) = default;

private:
    std::set<std::uint64_t> beads_;
};

/// The abacus folded onto d runners: runner i, column j holds position j*d + i.
/// Column -1 is included so the implicit beads before position 0 are visible.
struct RunnerView {
    std::uint64_t d = 1;
    /// runners[i][c] is true for a bead at position (c - 1) * d + i.
    std::vector<std::vector<bool>> runners;

    std::size_t columns() const { return runners.empty() ? 0 : runners.front().size(); }
    bool bead_at(std::uint64_t runner, std::int64_t column) const;
};

BeadSequence from_partition(const Partition& lambda);
Partition to_partition(const BeadSequence& beads);

/// A hook of length y exists iff some spacer x is followed by a bead at x + y.
bool has_hook(const BeadSequence& beads, std::uint64_t y);

RunnerView runner_view(const BeadSequence& beads, std::uint64_t d);
BeadSequence reassemble(const RunnerView& view);

/// One row per runner, `o` for a bead and `.` for a spacer, starting at column -1.
std::string render(const RunnerView& view);
/// Inverse of render().
RunnerView parse_rendered(const std::string& text);

/// True iff no runner of the d-runner view has a spacer followed later by a bead.
bool runners_settled(const RunnerView& view);

enum class ThreeModVariant { OnePlus3m, TwoPlus3m };

/// Builds every 3 (mod 3m+1)-core or 3 (mod 3m+2)-core directly from the 3-abacus.
///
/// Such a core has no beads on runner 0 and, on runners 1 and 2, an unbroken
/// stack of beads ending just before that runner's first spacer. The cores are
/// indexed by the heights of those first spacers: for 3m+1 runner 1 stops at
/// height j in [0, m+1] and runner 2 at j + l with -j <= l <= m+1; for 3m+2 the
/// roles of the runners swap and l reaches m+2. The single choice j = m+1,
/// l = l_max is excluded because it places a bead at 6m+5 (resp. 6m+7).
std::vector<Partition> parametrized_3mod_cores(std::uint64_t m, ThreeModVariant variant);

} // namespace apcore
