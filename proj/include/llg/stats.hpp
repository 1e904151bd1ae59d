#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "llg/cycles.hpp"
#include "llg/dynamics.hpp"
#include "llg/errors.hpp"

// Displacement statistics: squared displacement series, running time
// averages, the cycle-length fraction F(l), log-log power-law fitting with a
// fixed documented protocol, and growth classification.

namespace llg {

enum class SeriesMeaning : uint8_t { MSD, TAMSD, Generic };

// A real sequence indexed by t = 1..T.
struct Series {
    std::vector<double> values; // values[t-1] holds entry t
    SeriesMeaning meaning = SeriesMeaning::Generic;

    int64_t tmax() const { return static_cast<int64_t>(values.size()); }
    double at(int64_t t) const {
        if (t < 1 || t > tmax()) throw ContractError("series index out of range");
        return values[static_cast<size_t>(t - 1)];
    }
};

// Exact squared Euclidean displacement from the starting position,
// (dp^2 + 3 dq^2) / 4, for t = 1..T.
inline Series msd(const Trajectory& traj) {
    if (traj.positions.empty()) throw ContractError("empty trajectory");
    Series s;
    s.meaning = SeriesMeaning::MSD;
    const Site origin = traj.positions.front();
    s.values.reserve(traj.positions.size() - 1);
    for (size_t t = 1; t < traj.positions.size(); ++t)
        s.values.push_back(
            static_cast<double>(squared_distance(traj.positions[t], origin)));
    return s;
}

// Pointwise mean over an ensemble of equal-length trajectories.
inline Series ensemble_msd(const std::vector<Trajectory>& trajs) {
    if (trajs.empty()) throw ContractError("empty ensemble");
    Series acc = msd(trajs.front());
    acc.meaning = SeriesMeaning::MSD;
    for (size_t i = 1; i < trajs.size(); ++i) {
        Series s = msd(trajs[i]);
        if (s.tmax() != acc.tmax())
            throw ContractError("ensemble trajectories differ in length");
        for (size_t t = 0; t < acc.values.size(); ++t)
            acc.values[t] += s.values[t];
    }
    for (double& v : acc.values) v /= static_cast<double>(trajs.size());
    return acc;
}

// Running mean: out[t] = (1/t) * sum_{i=1..t} s[i].
inline Series tamsd(const Series& s) {
    Series out;
    out.meaning = SeriesMeaning::TAMSD;
    out.values.reserve(s.values.size());
    double acc = 0;
    for (size_t i = 0; i < s.values.size(); ++i) {
        acc += s.values[i];
        out.values.push_back(acc / static_cast<double>(i + 1));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cycle-length statistics

struct CycleLengthHistogram {
    std::map<int64_t, int64_t> counts; // length -> completed cycles
    int64_t total = 0;
    int64_t horizon = 0;
};

// Count only cycles completed within the horizon; the trailing partial cycle
// never contributes.
inline CycleLengthHistogram cycle_length_histogram(const CycleDecomposition& d,
                                                   int64_t horizon) {
    CycleLengthHistogram h;
    h.horizon = horizon;
    for (const Cycle& c : d.cycles) {
        if (c.t_end > horizon) break;
        ++h.counts[c.length];
        ++h.total;
    }
    return h;
}

inline std::map<int64_t, double> fraction_of_cycles(
    const CycleLengthHistogram& h) {
    if (h.total == 0) throw ContractError("empty cycle histogram");
    std::map<int64_t, double> f;
    for (const auto& [l, n] : h.counts)
        f[l] = static_cast<double>(n) / static_cast<double>(h.total);
    return f;
}

// ---------------------------------------------------------------------------
// Power-law fitting

struct PowerLawFit {
    double c = 0;      // prefactor
    double alpha = 0;  // exponent
    int64_t t_min = 0;
    int64_t t_max = 0;
    double residual = 0; // RMS residual in log space
    int64_t points = 0;  // samples actually used
};

namespace detail {

inline PowerLawFit loglog_least_squares(
    const std::vector<std::pair<double, double>>& pts) {
    if (pts.size() < 2)
        throw ContractError("power-law fit needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        if (!(x > 0) || !(y > 0))
            throw ContractError("power-law fit requires positive samples");
        double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double n = static_cast<double>(pts.size());
    double denom = n * sxx - sx * sx;
    if (denom == 0) throw ContractError("degenerate abscissae in fit");
    PowerLawFit fit;
    fit.alpha = (n * sxy - sx * sy) / denom;
    fit.c = std::exp((sy - fit.alpha * sx) / n);
    double ss = 0;
    for (const auto& [x, y] : pts) {
        double e = std::log(y) - (std::log(fit.c) + fit.alpha * std::log(x));
        ss += e * e;
    }
    fit.residual = std::sqrt(ss / n);
    fit.points = static_cast<int64_t>(pts.size());
    return fit;
}

} // namespace detail

// Direct least squares on (log x, log y) over explicit sample points.
inline PowerLawFit fit_power_law(
    const std::vector<std::pair<double, double>>& pts) {
    return detail::loglog_least_squares(pts);
}

// Fixed series protocol: geometric subsampling at 32 points per decade over
// [t_min, t_max], zero entries excluded (exact zeros occur at return times
// and would poison the log); negative entries violate the contract.
inline PowerLawFit fit_power_law(const Series& s, int64_t t_min,
                                 int64_t t_max) {
    if (t_min < 1 || t_max > s.tmax() || t_min >= t_max)
        throw ContractError("fit range outside the series");
    std::vector<std::pair<double, double>> pts;
    double lo = static_cast<double>(t_min), hi = static_cast<double>(t_max);
    int npts = static_cast<int>(32.0 * std::log10(hi / lo)) + 1;
    int64_t last = -1;
    for (int i = 0; i < npts; ++i) {
        double tt = npts == 1 ? lo
                              : lo * std::pow(hi / lo,
                                              static_cast<double>(i) /
                                                  static_cast<double>(npts - 1));
        int64_t t = std::llround(tt);
        t = std::clamp<int64_t>(t, t_min, t_max);
        if (t == last) continue;
        last = t;
        double v = s.at(t);
        if (v < 0) throw ContractError("negative sample in fit range");
        if (v == 0) continue;
        pts.push_back({static_cast<double>(t), v});
    }
    PowerLawFit fit = detail::loglog_least_squares(pts);
    fit.t_min = t_min;
    fit.t_max = t_max;
    return fit;
}

// Decay of the cycle-length fraction over the support {l <= l_max} with
// nonzero counts.
inline PowerLawFit fit_cycle_decay(const CycleLengthHistogram& h,
                                   int64_t l_max = 200) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [l, n] : h.counts)
        if (l <= l_max && n > 0)
            pts.push_back({static_cast<double>(l),
                           static_cast<double>(n) /
                               static_cast<double>(h.total)});
    return detail::loglog_least_squares(pts);
}

// ---------------------------------------------------------------------------
// Growth classification

enum class GrowthLabel : uint8_t {
    Bounded,
    TaSubdiffusion,
    TaDiffusion,
    TaSuperdiffusion,
    TaPropagation,
};

inline std::string growth_label_name(GrowthLabel g) {
    switch (g) {
    case GrowthLabel::Bounded: return "bounded";
    case GrowthLabel::TaSubdiffusion: return "ta-subdiffusion";
    case GrowthLabel::TaDiffusion: return "ta-diffusion";
    case GrowthLabel::TaSuperdiffusion: return "ta-superdiffusion";
    case GrowthLabel::TaPropagation: return "ta-propagation";
    }
    throw InternalError("unhandled growth label");
}

// Band classification of a fitted exponent.  `diverging` is the caller's
// floor check (does the series outgrow every constant?): without it any
// sublinear exponent is indistinguishable from bounded wandering.
inline GrowthLabel classify_growth(const PowerLawFit& fit, bool diverging,
                                   double tolerance = 0.08) {
    if (!diverging) return GrowthLabel::Bounded;
    double a = fit.alpha;
    if (std::abs(a - 1.0) <= tolerance) return GrowthLabel::TaDiffusion;
    if (a >= 2.0 - tolerance) return GrowthLabel::TaPropagation;
    if (a > 1.0 + tolerance) return GrowthLabel::TaSuperdiffusion;
    if (a > tolerance) return GrowthLabel::TaSubdiffusion;
    return GrowthLabel::Bounded;
}

// Crude divergence check used alongside classify_growth: the tail keeps
// reaching new highs well above the early maximum.
inline bool looks_diverging(const Series& s) {
    if (s.tmax() < 100) return false;
    int64_t head_end = s.tmax() / 10;
    double head_max = 0, tail_max = 0;
    for (int64_t t = 1; t <= head_end; ++t)
        head_max = std::max(head_max, s.at(t));
    for (int64_t t = head_end + 1; t <= s.tmax(); ++t)
        tail_max = std::max(tail_max, s.at(t));
    return tail_max > 2.0 * head_max && tail_max > 0;
}

// ---------------------------------------------------------------------------
// Time-average relations (direction checks only; the converses are false)

struct TimeAverageReport {
    double tail_ratio = 0;        // mean of series[t] / t^alpha over the last decade
    double expected_ratio = 0;    // c/2 for alpha=1, c/3 for alpha=2
    bool consistent = false;      // within 1%
};

// Mean of s[t]/t^alpha over the final decade of the series.
inline double tail_ratio(const Series& s, double alpha) {
    int64_t t_hi = s.tmax();
    if (t_hi < 10) throw ContractError("series too short for a tail ratio");
    int64_t t_lo = std::max<int64_t>(1, t_hi / 10);
    double acc = 0;
    int64_t n = 0;
    for (int64_t t = t_lo; t <= t_hi; ++t) {
        acc += s.at(t) / std::pow(static_cast<double>(t), alpha);
        ++n;
    }
    return acc / static_cast<double>(n);
}

// If the squared-displacement series grows like c*t (resp. c*t^2), its
// running mean grows like (c/2)*t (resp. (c/3)*t^2).  Verifies the implied
// tail ratio to 1%.
inline TimeAverageReport check_time_average_ratio(const Series& raw,
                                                  double c, int degree) {
    if (degree != 1 && degree != 2)
        throw ContractError("ratio check covers degrees 1 and 2 only");
    TimeAverageReport rep;
    rep.expected_ratio = degree == 1 ? c / 2.0 : c / 3.0;
    rep.tail_ratio = tail_ratio(tamsd(raw), static_cast<double>(degree));
    rep.consistent =
        std::abs(rep.tail_ratio - rep.expected_ratio) <=
        0.01 * std::abs(rep.expected_ratio);
    return rep;
}

// The alternating series 0, 3, 0, 7, 0, 11, ... (2t-1 at odd t, 0 at even t):
// its running mean is exactly (t+1)/2 at odd t and (t-1)/2 at even t, a
// series whose time average is linear while the series itself has no t-limit.
inline Series alternating_counterexample(int64_t T) {
    Series s;
    s.meaning = SeriesMeaning::MSD;
    s.values.reserve(static_cast<size_t>(T));
    for (int64_t t = 1; t <= T; ++t)
        s.values.push_back(t % 2 == 1 ? static_cast<double>(2 * t - 1) : 0.0);
    return s;
}

} // namespace llg
