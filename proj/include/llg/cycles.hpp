#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "llg/dynamics.hpp"
#include "llg/lattice.hpp"

// Return-time detection and the decomposition of a trajectory into the
// cycles gamma_i between consecutive visits to the starting site, plus the
// geometric predicates those cycles verifiably satisfy on the all-right
// background: self-avoidance, the local-cycle property (matching velocity at
// both endpoints), and mirror symmetry about the vertical line x = 1/2.

namespace llg {

struct Cycle {
    Site base;
    int64_t t_start = 0;        // tau_{i-1}
    int64_t t_end = 0;          // tau_i
    std::vector<Site> sites;    // closed: sites.front() == sites.back() == base
    int64_t length = 0;         // edges = t_end - t_start = sites.size() - 1
    bool local = false;         // v(t_start) == v(t_end)
};

// The open tail after the last observed return; never a Cycle.
struct TrailingSegment {
    int64_t t_start = 0;
    std::vector<Site> sites;    // positions[t_start..T]
};

struct CycleDecomposition {
    std::vector<int64_t> return_times; // tau_0 = 0, then every t with r(t) = r(0)
    std::vector<Cycle> cycles;         // cycles[i] spans [return_times[i], return_times[i+1]]
    TrailingSegment trailing;
};

// Split a recorded trajectory at every revisit of its starting site.  The
// concatenation of the cycles plus the trailing segment reproduces the
// trajectory exactly.
inline CycleDecomposition decompose(const Trajectory& traj) {
    CycleDecomposition out;
    if (traj.positions.empty())
        throw ContractError("cannot decompose an empty trajectory");
    const Site base = traj.positions.front();
    out.return_times.push_back(0);
    int64_t prev = 0;
    const int64_t T = traj.steps();
    for (int64_t t = 1; t <= T; ++t) {
        if (traj.positions[static_cast<size_t>(t)] != base) continue;
        Cycle c;
        c.base = base;
        c.t_start = prev;
        c.t_end = t;
        c.length = t - prev;
        c.sites.assign(traj.positions.begin() + prev,
                       traj.positions.begin() + t + 1);
        c.local = traj.dirs[static_cast<size_t>(prev)] ==
                  traj.dirs[static_cast<size_t>(t)];
        out.cycles.push_back(std::move(c));
        out.return_times.push_back(t);
        prev = t;
    }
    out.trailing.t_start = prev;
    out.trailing.sites.assign(traj.positions.begin() + prev,
                              traj.positions.end());
    return out;
}

// True iff all sites are pairwise distinct.  With closed = true the first and
// last entries must coincide (a cycle) and are counted once.
inline bool is_self_avoiding(const std::vector<Site>& sites, bool closed) {
    if (sites.empty()) return true;
    size_t n = sites.size();
    if (closed) {
        if (sites.front() != sites.back()) return false;
        --n;
    }
    std::unordered_set<Site, SiteHash> seen;
    seen.reserve(n * 2);
    for (size_t i = 0; i < n; ++i)
        if (!seen.insert(sites[i]).second) return false;
    return true;
}

inline bool is_self_avoiding(const Cycle& c) {
    return is_self_avoiding(c.sites, /*closed=*/true);
}

inline bool is_local_cycle(const Cycle& c) { return c.local; }

// Mirror symmetry about the vertical line half a bond to the right of the
// cycle's base, i.e. (p,q) -> (2-p, q) in base-relative coordinates.
// Compared as unordered site sets: the mirrored cycle is traversed in
// reversed time order, so ordered comparison would be wrong.
inline bool is_symmetric_about_base(const Cycle& c) {
    std::unordered_set<Site, SiteHash> set;
    for (Site s : c.sites)
        set.insert(Site{s.p - c.base.p, s.q - c.base.q});
    for (Site s : set)
        if (!set.count(Site{2 - s.p, s.q})) return false;
    return true;
}

// The published statement is for cycles based at the origin.
inline bool is_symmetric_x_half(const Cycle& c) {
    if (c.base != Site{0, 0})
        throw ContractError("x = 1/2 symmetry check requires base (0,0)");
    return is_symmetric_about_base(c);
}

inline std::vector<int64_t> cycle_lengths(const CycleDecomposition& d) {
    std::vector<int64_t> out;
    out.reserve(d.cycles.size());
    for (const Cycle& c : d.cycles) out.push_back(c.length);
    return out;
}

} // namespace llg
