#pragma once

// Reference replay: the rotator walk on the all-right background, started at
// ((0,0), d0), revisits its base infinitely often.  The first 180 first-return
// lengths form a fixed integer sequence; we embed the reference table and
// provide helpers to re-measure the sequence from the dynamics and diff the
// two.  A mismatch report carries the first differing index so regressions
// (or defects in the table itself) are pinpointed immediately.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "llg/cycles.hpp"
#include "llg/dynamics.hpp"
#include "llg/errors.hpp"

namespace llg {

// The embedded reference table, 180 entries, read left-to-right then
// top-to-bottom.  Every entry is of the form 6 + 4n.
inline const std::array<int, 180>& reference_cycle_lengths() {
    static const std::array<int, 180> table = {
        6,   18,  6,   42,  6,   18,  6,   6,   66,  6,   18,  14,  10,  30,
        30,  10,  14,  18,  6,   78,  6,   6,   18,  6,   78,  22,  10,  22,
        18,  54,  18,  6,   42,  22,  122, 30,  30,  10,  14,  18,  6,   18,
        6,   6,   18,  6,   18,  14,  10,  126, 30,  34,  14,  42,  6,   114,
        6,   6,   18,  6,   90,  38,  10,  22,  18,  134, 110, 6,   6,   14,
        130, 6,   10,  54,  38,  22,  6,   158, 6,   6,   34,  6,   74,  6,
        42,  6,   6,   150, 6,   34,  46,  38,  10,  38,  18,  6,   298, 6,
        6,   42,  6,   114, 62,  126, 22,  22,  22,  174, 6,   22,  6,   6,
        18,  6,   58,  6,   18,  6,   6,   18,  6,   82,  22,  10,  22,  18,
        118, 54,  6,   6,   14,  38,  6,   6,   210, 54,  170, 30,  202, 30,
        6,   6,   38,  226, 6,   266, 22,  18,  6,   130, 22,  6,   6,   14,
        26,  6,   18,  30,  126, 6,   6,   14,  38,  6,   6,   218, 54,  230,
        30,  14,  10,  6,   38,  6,   6,   34,  6,   170, 6,   42};
    return table;
}

// Run the dynamics until the walker has returned to its base n times and
// report the successive first-return lengths.  The internal step budget grows
// geometrically; if the walker fails to return often enough within
// `step_budget` total steps we refuse rather than loop forever.
inline std::vector<int64_t> first_cycle_lengths(SystemKind kind,
                                                InitialCondition ic, Config& c,
                                                std::size_t n,
                                                int64_t step_budget = 1 << 24) {
    std::vector<int64_t> lengths;
    lengths.reserve(n);
    ParticleState st{ic.site, ic.dir, 0};
    int64_t last_return = 0;
    for (int64_t t = 0; t < step_budget && lengths.size() < n; ++t) {
        st = step(kind, st, c);
        if (st.site == ic.site) {
            lengths.push_back(st.time - last_return);
            last_return = st.time;
        }
    }
    if (lengths.size() < n)
        throw BudgetError("walker did not complete enough cycles in budget");
    return lengths;
}

// Outcome of diffing a measured prefix against the reference table.  `index`
// is 1-based to match the usual numbering L(1), L(2), ...
struct ReplayMismatch {
    std::size_t index;
    int64_t measured;
    int64_t expected;
};

inline std::optional<ReplayMismatch> diff_against_reference(
    const std::vector<int64_t>& measured) {
    const auto& ref = reference_cycle_lengths();
    const std::size_t n = std::min(measured.size(), ref.size());
    for (std::size_t i = 0; i < n; ++i)
        if (measured[i] != ref[i])
            return ReplayMismatch{i + 1, measured[i],
                                  static_cast<int64_t>(ref[i])};
    return std::nullopt;
}

// Convenience wrapper: measure the default all-right replay and diff it.
inline std::optional<ReplayMismatch> verify_replay() {
    Config c(Pattern::all_right());
    auto lengths = first_cycle_lengths(SystemKind::Rotator, InitialCondition{},
                                       c, reference_cycle_lengths().size());
    return diff_against_reference(lengths);
}

}  // namespace llg
