#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "llg/config.hpp"
#include "llg/cycles.hpp"
#include "llg/dynamics.hpp"
#include "llg/hexclass.hpp"
#include "llg/lattice.hpp"

// Local trajectories of a finite union of hexagons: crossings (enter on one
// external bond, leave on another) and local cycles (closed orbits that never
// leave), together with the search for triperfect partitions -- a split of
// all local trajectories into three parts such that every site of the region
// is covered by exactly three trajectories, one per part.

namespace llg {

// ---------------------------------------------------------------------------
// Regions

struct Region {
    std::vector<HexId> hexes;                    // sorted, unique
    std::vector<Site> site_list;                 // sorted, unique ring union
    std::unordered_set<Site, SiteHash> sites;    // same sites, O(1) membership

    bool contains(Site s) const { return sites.count(s) != 0; }
};

inline Region make_region(std::vector<HexId> hexes) {
    if (hexes.empty()) throw ContractError("region needs at least one hexagon");
    std::sort(hexes.begin(), hexes.end());
    hexes.erase(std::unique(hexes.begin(), hexes.end()), hexes.end());
    Region r;
    r.hexes = std::move(hexes);
    for (HexId h : r.hexes)
        for (Site s : hex_ring(h))
            r.sites.insert(s);
    r.site_list.assign(r.sites.begin(), r.sites.end());
    std::sort(r.site_list.begin(), r.site_list.end());
    return r;
}

// Adjacent faces on the triangular face lattice (sharing one ring edge).
inline std::array<HexId, 6> hex_neighbors(HexId h) {
    return {HexId{h.p + 3, h.q + 1}, HexId{h.p, h.q + 2},
            HexId{h.p - 3, h.q + 1}, HexId{h.p - 3, h.q - 1},
            HexId{h.p, h.q - 2},     HexId{h.p + 3, h.q - 1}};
}

// All faces within `radius` face-steps of the center: 1, 7, 19, ... hexagons.
inline Region hex_ball(HexId center, int radius) {
    if (radius < 0) throw ContractError("negative region radius");
    std::set<HexId> seen{center};
    std::vector<HexId> frontier{center};
    for (int r = 0; r < radius; ++r) {
        std::vector<HexId> next;
        for (HexId h : frontier)
            for (HexId n : hex_neighbors(h))
                if (seen.insert(n).second) next.push_back(n);
        frontier = std::move(next);
    }
    return make_region(std::vector<HexId>(seen.begin(), seen.end()));
}

// ---------------------------------------------------------------------------
// Local trajectories

enum class LocalKind : uint8_t { Crossing, LocalCycle };

// (site, velocity directly after scattering at that site)
struct LocalState {
    Site site;
    Direction dir;

    friend bool operator==(const LocalState& a, const LocalState& b) {
        return a.site == b.site && a.dir == b.dir;
    }
    friend bool operator<(const LocalState& a, const LocalState& b) {
        if (a.site != b.site) return a.site < b.site;
        return a.dir.k < b.dir.k;
    }
};

struct LocalStateHash {
    size_t operator()(const LocalState& s) const {
        return SiteHash{}(s.site) * 7 + static_cast<size_t>(s.dir.k);
    }
};

// A boundary port: a bond leading out of the region.
struct Port {
    Site site;
    Direction out;
};

struct LocalTrajectory {
    LocalKind kind = LocalKind::Crossing;
    std::vector<LocalState> states;  // cycles: minimal cyclic rotation
    Port entry{};                    // crossings only: bond the particle arrived along
    Port exit{};                     // crossings only: bond it left along

    std::vector<Site> site_sequence() const {
        std::vector<Site> out;
        out.reserve(states.size());
        for (const LocalState& st : states) out.push_back(st.site);
        return out;
    }
};

inline std::vector<Port> boundary_ports(const Region& r) {
    std::vector<Port> ports;
    for (Site s : r.site_list)
        for (Direction d : allowed_directions(s))
            if (!r.contains(neighbor(s, d))) ports.push_back(Port{s, d});
    return ports;
}

namespace detail {

inline constexpr int kLocalStepGuard = 1 << 16;

// Rotate a cyclic state sequence so its minimal element comes first.
inline void canonical_rotation(std::vector<LocalState>& states) {
    auto mn = std::min_element(states.begin(), states.end());
    std::rotate(states.begin(), mn, states.end());
}

} // namespace detail

// Every local crossing and local cycle of the region, each computed on a
// fresh copy of C (one passage each).  Crossings are seeded from the boundary
// ports in deterministic order; afterwards every interior (site, direction)
// state not already on a recorded trajectory seeds a cycle search, keeping
// closed orbits and discarding seeds whose forward orbit leaves the region.
inline std::vector<LocalTrajectory> enumerate_local_trajectories(
    const Region& region, const Config& base) {
    std::vector<LocalTrajectory> out;
    std::unordered_set<LocalState, LocalStateHash> explained;

    // crossings: one per entry port
    for (const Port& port : boundary_ports(region)) {
        Config c = base;
        LocalTrajectory traj;
        traj.kind = LocalKind::Crossing;
        traj.entry = port;
        Site pos = neighbor(port.site, port.out); // just outside
        Direction v = opposite(port.out);         // arriving inward
        for (int guard = 0;; ++guard) {
            if (guard >= detail::kLocalStepGuard)
                throw InternalError("local crossing failed to exit the region");
            Site ns = neighbor(pos, v);
            if (!region.contains(ns)) {
                traj.exit = Port{pos, v};
                break;
            }
            v = rotate(v, c.orientation(ns));
            c.flip(ns);
            pos = ns;
            traj.states.push_back(LocalState{pos, v});
        }
        for (const LocalState& st : traj.states) explained.insert(st);
        out.push_back(std::move(traj));
    }

    // local cycles: seed every unexplained interior state
    for (Site s : region.site_list) {
        for (Direction d : allowed_directions(s)) {
            LocalState seed{s, d};
            if (explained.count(seed)) continue;
            Config c = base;
            std::vector<LocalState> states{seed};
            Site pos = s;
            Direction v = d;
            bool closed = false;
            for (int guard = 0; guard < detail::kLocalStepGuard; ++guard) {
                Site ns = neighbor(pos, v);
                if (!region.contains(ns)) break; // exits: belongs to a crossing
                v = rotate(v, c.orientation(ns));
                c.flip(ns);
                pos = ns;
                if (LocalState{pos, v} == seed) {
                    closed = true;
                    break;
                }
                states.push_back(LocalState{pos, v});
                if (guard + 2 >= detail::kLocalStepGuard)
                    throw InternalError("local orbit neither closed nor exited");
            }
            if (!closed) {
                explained.insert(seed); // exiting seed: never re-simulate
                continue;
            }
            detail::canonical_rotation(states);
            for (const LocalState& st : states) explained.insert(st);
            LocalTrajectory traj;
            traj.kind = LocalKind::LocalCycle;
            traj.states = std::move(states);
            out.push_back(std::move(traj));
        }
    }
    return out;
}

// How many recorded trajectories pass through each region site, counting a
// trajectory once per visit (a self-avoiding trajectory visits a site at most
// once, so for admissible configurations this is also the trajectory count).
inline std::unordered_map<Site, int, SiteHash> site_cover_counts(
    const Region& region, const std::vector<LocalTrajectory>& trajs) {
    std::unordered_map<Site, int, SiteHash> counts;
    for (Site s : region.site_list) counts[s] = 0;
    for (const LocalTrajectory& t : trajs)
        for (const LocalState& st : t.states) ++counts[st.site];
    return counts;
}

// ---------------------------------------------------------------------------
// Triperfect partitions

struct TriperfectPartition {
    std::vector<int> parts; // parts[i] in {0,1,2}, aligned with enumeration order
};

namespace detail {

// Per-site lists of (trajectory index, visits); the partition machinery needs
// every region site to be visited by exactly three distinct trajectories,
// once each.
struct SiteIncidence {
    std::map<Site, std::vector<int>> by_site;
    bool exactly_three = true;
};

inline SiteIncidence site_incidence(const Region& region,
                                    const std::vector<LocalTrajectory>& trajs) {
    SiteIncidence inc;
    for (Site s : region.site_list) inc.by_site[s] = {};
    for (size_t i = 0; i < trajs.size(); ++i)
        for (const LocalState& st : trajs[i].states)
            inc.by_site[st.site].push_back(static_cast<int>(i));
    for (auto& [s, list] : inc.by_site) {
        std::sort(list.begin(), list.end());
        if (list.size() != 3 ||
            std::adjacent_find(list.begin(), list.end()) != list.end())
            inc.exactly_three = false;
    }
    return inc;
}

} // namespace detail

// Check Properties 1 and 2 for a concrete assignment: every crossing is
// self-avoiding, and every site of the region is covered by exactly three
// trajectories carrying all three part labels.
inline bool verify_triperfect(const Region& region, const Config& c,
                              const TriperfectPartition& partition) {
    auto trajs = enumerate_local_trajectories(region, c);
    if (partition.parts.size() != trajs.size()) return false;
    for (int p : partition.parts)
        if (p < 0 || p > 2) return false;
    for (const LocalTrajectory& t : trajs)
        if (t.kind == LocalKind::Crossing &&
            !is_self_avoiding(t.site_sequence(), /*closed=*/false))
            return false;
    auto inc = detail::site_incidence(region, trajs);
    if (!inc.exactly_three) return false;
    for (const auto& [s, list] : inc.by_site) {
        bool used[3] = {false, false, false};
        for (int ti : list) used[partition.parts[ti]] = true;
        if (!(used[0] && used[1] && used[2])) return false;
    }
    return true;
}

// Exact search: three-color the trajectories so that the three trajectories
// through each site get three different colors.  Trajectories are ordered
// hexagon by hexagon (the order regions are naturally grown in), which keeps
// the backtracking near-linear on admissible inputs.  Returns nothing when
// Property 1 fails, when some site is not covered exactly three times, or
// when no coloring exists.
inline std::optional<TriperfectPartition> find_triperfect(const Region& region,
                                                          const Config& c) {
    auto trajs = enumerate_local_trajectories(region, c);
    for (const LocalTrajectory& t : trajs)
        if (t.kind == LocalKind::Crossing &&
            !is_self_avoiding(t.site_sequence(), /*closed=*/false))
            return std::nullopt;
    auto inc = detail::site_incidence(region, trajs);
    if (!inc.exactly_three) return std::nullopt;

    const int n = static_cast<int>(trajs.size());
    // conflict lists from the per-site triples
    std::vector<std::set<int>> conflicts(n);
    for (const auto& [s, list] : inc.by_site)
        for (int a : list)
            for (int b : list)
                if (a != b) conflicts[a].insert(b);

    // variable order: trajectories grouped by the first region hexagon they touch
    std::vector<int> order;
    {
        std::vector<bool> placed(n, false);
        std::unordered_map<Site, std::vector<int>, SiteHash> trajs_at;
        for (int i = 0; i < n; ++i)
            for (const LocalState& st : trajs[i].states)
                trajs_at[st.site].push_back(i);
        for (HexId h : region.hexes)
            for (Site s : hex_ring(h))
                for (int i : trajs_at[s])
                    if (!placed[i]) {
                        placed[i] = true;
                        order.push_back(i);
                    }
        for (int i = 0; i < n; ++i)
            if (!placed[i]) order.push_back(i);
    }

    std::vector<int> color(n, -1);
    int64_t nodes = 0;
    const int64_t node_budget = 10'000'000;
    auto dfs = [&](auto&& self, size_t idx) -> bool {
        if (idx == order.size()) return true;
        if (++nodes > node_budget)
            throw BudgetError("triperfect search exceeded its node budget");
        int v = order[idx];
        for (int col = 0; col < 3; ++col) {
            bool ok = true;
            for (int u : conflicts[v])
                if (color[u] == col) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = col;
            if (self(self, idx + 1)) return true;
            color[v] = -1;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    return TriperfectPartition{std::move(color)};
}

} // namespace llg
