#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "llg/config.hpp"
#include "llg/dynamics.hpp"
#include "llg/lattice.hpp"

// Blocking verification: a configuration blocks when every initial condition
// returns to its starting site within some uniform bound; the least such
// bound realized is the blocking time.  For periodic backgrounds the
// universal quantifier reduces to one fundamental domain times the three
// bond directions, by translation equivariance.

namespace llg {

struct BlockingReport {
    std::optional<int64_t> blocking_time; // empty: some probe exceeded `bound`
    InitialCondition witness;             // attains the maximum, or escapes
    int64_t bound = 0;
    // every probed initial condition with its first-return time (or empty)
    std::vector<std::pair<InitialCondition, std::optional<int64_t>>> probes;
};

// Smallest t >= 1 with r(t) = r(0), or nothing if it exceeds `bound`.  The
// probe runs on a copy; the caller's configuration is left untouched.
inline std::optional<int64_t> first_return_time(InitialCondition ic,
                                                const Config& base,
                                                int64_t bound) {
    if (bound < 1) throw ContractError("return-time bound must be >= 1");
    Config c = base;
    ParticleState st{ic.site, ic.dir, 0};
    for (int64_t t = 1; t <= bound; ++t) {
        st = step(SystemKind::Rotator, st, c);
        if (st.site == ic.site) return t;
    }
    return std::nullopt;
}

// The closed site loop of the first return, or nothing on escape.
inline std::optional<std::vector<Site>> first_return_cycle(InitialCondition ic,
                                                           const Config& base,
                                                           int64_t bound) {
    if (bound < 1) throw ContractError("return-time bound must be >= 1");
    Config c = base;
    ParticleState st{ic.site, ic.dir, 0};
    std::vector<Site> sites{ic.site};
    for (int64_t t = 1; t <= bound; ++t) {
        st = step(SystemKind::Rotator, st, c);
        sites.push_back(st.site);
        if (st.site == ic.site) return sites;
    }
    return std::nullopt;
}

// Worst first-return time over one fundamental domain x three directions.
// Requires a pristine periodic configuration: overrides would break the
// translation argument that makes the enumeration exhaustive.
inline BlockingReport blocking_time(const Config& base, int64_t bound) {
    if (!base.background().periodic())
        throw ContractError("blocking verification needs a periodic pattern");
    if (base.override_count() != 0)
        throw ContractError("blocking verification needs a pristine configuration");
    BlockingReport report;
    report.bound = bound;
    int64_t worst = -1;
    for (Site s : base.background().fundamental_sites()) {
        for (Direction d : allowed_directions(s)) {
            InitialCondition ic{s, d};
            auto t = first_return_time(ic, base, bound);
            report.probes.emplace_back(ic, t);
            if (!t) {
                report.blocking_time.reset();
                report.witness = ic;
                return report;
            }
            if (*t > worst) {
                worst = *t;
                report.witness = ic;
            }
        }
    }
    report.blocking_time = worst;
    return report;
}

// Return times observed while running from I for up to `step_budget` steps or
// until `n_returns` returns, whichever comes first.  The caller checks the
// count; falling short falsifies a recurrence expectation but is reported,
// not thrown.
inline std::vector<int64_t> recurrence_probe(InitialCondition ic,
                                             const Config& base,
                                             int64_t n_returns,
                                             int64_t step_budget) {
    Config c = base;
    std::vector<int64_t> times;
    ParticleState st{ic.site, ic.dir, 0};
    for (int64_t t = 1;
         t <= step_budget && static_cast<int64_t>(times.size()) < n_returns;
         ++t) {
        st = step(SystemKind::Rotator, st, c);
        if (st.site == ic.site) times.push_back(t);
    }
    return times;
}

// ---------------------------------------------------------------------------
// Shape classes of first-return cycles, up to translation and the twelve
// point symmetries (six rotations, each optionally reflected).

namespace detail {

inline std::string shape_key(std::vector<std::array<int, 2>> pts) {
    int minp = pts[0][0], minq = pts[0][1];
    for (const auto& a : pts) {
        minp = std::min(minp, a[0]);
        minq = std::min(minq, a[1]);
    }
    for (auto& a : pts) {
        a[0] -= minp;
        a[1] -= minq;
    }
    std::sort(pts.begin(), pts.end());
    std::string key;
    for (const auto& a : pts)
        key += std::to_string(a[0]) + "," + std::to_string(a[1]) + ";";
    return key;
}

} // namespace detail

// Canonical name of the unordered site set of a cycle: minimal shape_key over
// the twelve integer point symmetries, with translations quotiented out by
// coordinate normalization.
inline std::string canonical_shape(const std::vector<Site>& cycle_sites) {
    if (cycle_sites.empty()) throw ContractError("empty cycle has no shape");
    std::vector<std::array<int, 2>> pts;
    for (Site s : cycle_sites) pts.push_back({s.p, s.q});
    if (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back(); // closed
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::string best;
    for (int refl = 0; refl < 2; ++refl) {
        for (int rot = 0; rot < 6; ++rot) {
            std::string key = detail::shape_key(pts);
            if (best.empty() || key < best) best = key;
            for (auto& a : pts) {
                auto r = rotate60(a[0], a[1]);
                a = {r[0], r[1]};
            }
        }
        for (auto& a : pts) {
            auto r = reflect_q(a[0], a[1]);
            a = {r[0], r[1]};
        }
    }
    return best;
}

// Distinct first-return cycle shapes over the fundamental-domain enumeration,
// keyed by canonical shape, with one representative cycle and a count each.
struct ShapeSurvey {
    std::map<std::string, int> counts;
    std::map<std::string, std::vector<Site>> representative;
    std::vector<int64_t> lengths; // every observed first-return time, sorted
};

inline ShapeSurvey first_return_shapes(const Config& base, int64_t bound) {
    if (!base.background().periodic())
        throw ContractError("shape survey needs a periodic pattern");
    if (base.override_count() != 0)
        throw ContractError("shape survey needs a pristine configuration");
    ShapeSurvey survey;
    for (Site s : base.background().fundamental_sites()) {
        for (Direction d : allowed_directions(s)) {
            auto cyc = first_return_cycle(InitialCondition{s, d}, base, bound);
            if (!cyc) continue;
            survey.lengths.push_back(static_cast<int64_t>(cyc->size()) - 1);
            std::string key = canonical_shape(*cyc);
            if (++survey.counts[key] == 1) survey.representative[key] = *cyc;
        }
    }
    std::sort(survey.lengths.begin(), survey.lengths.end());
    return survey;
}

} // namespace llg
