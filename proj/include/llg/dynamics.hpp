#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "llg/config.hpp"
#include "llg/lattice.hpp"

// The deterministic steppers.  One time step is: move along the current
// velocity, scatter at the arrival site using its orientation as read
// *before* flipping, then flip that site.  The flipping-mirror system reuses
// the rotator rotation through the sublattice rule: a mirror acts as a
// rotator of equal chirality on Plus sites and opposite chirality on Minus
// sites.

namespace llg {

enum class SystemKind : uint8_t { Rotator, Mirror };

struct ParticleState {
    Site site;
    Direction dir; // velocity directly after `time`
    int64_t time = 0;
};

struct InitialCondition {
    Site site{0, 0};
    Direction dir{0};
};

inline InitialCondition initial_condition(Site s, Direction d) {
    if (!is_allowed(s, d))
        throw GeometryError("initial velocity d" + std::to_string(d.k) +
                            " is not a bond at (" + std::to_string(s.p) + "," +
                            std::to_string(s.q) + ")");
    return InitialCondition{s, d};
}

inline ParticleState step(SystemKind kind, const ParticleState& st, Config& c) {
    Site ns = neighbor(st.site, st.dir);
    int z = c.orientation(ns);
    if (kind == SystemKind::Mirror && sublattice(ns) == Sublattice::Minus)
        z = -z;
    Direction nd = rotate(st.dir, z);
    c.flip(ns);
    return ParticleState{ns, nd, st.time + 1};
}

struct Trajectory {
    std::vector<Site> positions;  // indexed by t = 0..T
    std::vector<Direction> dirs;  // v(t), directly after time t
    SystemKind kind = SystemKind::Rotator;

    int64_t steps() const { return static_cast<int64_t>(positions.size()) - 1; }
};

// Stream a run through `observe(state)` without storing it; the initial
// state is observed first.  C is mutated in place (it ends as C(T)).
template <typename F>
void run_visit(SystemKind kind, InitialCondition ic, Config& c, int64_t t_max,
               F&& observe) {
    if (t_max < 0) throw ContractError("negative step budget");
    ParticleState st{ic.site, ic.dir, 0};
    observe(st);
    for (int64_t t = 0; t < t_max; ++t) {
        st = step(kind, st, c);
        observe(st);
    }
}

inline Trajectory run(SystemKind kind, InitialCondition ic, Config& c,
                      int64_t t_max) {
    Trajectory traj;
    traj.kind = kind;
    traj.positions.reserve(static_cast<size_t>(t_max) + 1);
    traj.dirs.reserve(static_cast<size_t>(t_max) + 1);
    run_visit(kind, ic, c, t_max, [&](const ParticleState& st) {
        traj.positions.push_back(st.site);
        traj.dirs.push_back(st.dir);
    });
    return traj;
}

// Both directions of the rotator/mirror correspondence: the rotator in C and
// the mirror in phi(C) trace identical positions, and vice versa.
inline bool check_equivalence(InitialCondition ic, const Config& c,
                              int64_t t_max) {
    auto positions_of = [&](SystemKind kind, Config cfg) {
        Trajectory t = run(kind, ic, cfg, t_max);
        return t.positions;
    };
    if (positions_of(SystemKind::Rotator, c) !=
        positions_of(SystemKind::Mirror, phi(c)))
        return false;
    return positions_of(SystemKind::Mirror, c) ==
           positions_of(SystemKind::Rotator, phi(c));
}

} // namespace llg
