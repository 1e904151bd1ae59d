#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "llg/cycles.hpp"
#include "llg/dynamics.hpp"
#include "llg/lattice.hpp"
#include "llg/localtraj.hpp"
#include "llg/pattern.hpp"

// Plain deterministic SVG emission.  Scale and styling are fixed constants
// (documented in the README); tests only assert well-formedness, the images
// are for human eyes.

namespace llg {

namespace svg {

inline constexpr double kScale = 24.0;  // pixels per bond length
inline constexpr double kMargin = 36.0; // pixels around the bounding box

struct Box {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;

    void grow(Vec2 v) {
        min_x = std::min(min_x, v.x);
        max_x = std::max(max_x, v.x);
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
};

class Canvas {
  public:
    explicit Canvas(Box box) : box_(box) {
        width_ = (box.max_x - box.min_x) * kScale + 2 * kMargin;
        height_ = (box.max_y - box.min_y) * kScale + 2 * kMargin;
    }

    // y grows upward in lattice coordinates, downward in SVG
    double px(double x) const { return (x - box_.min_x) * kScale + kMargin; }
    double py(double y) const { return (box_.max_y - y) * kScale + kMargin; }

    void polyline(const std::vector<Vec2>& pts, const std::string& stroke,
                  double width, const std::string& dash = "") {
        body_ << "<polyline fill=\"none\" stroke=\"" << stroke
              << "\" stroke-width=\"" << width << "\"";
        if (!dash.empty()) body_ << " stroke-dasharray=\"" << dash << "\"";
        body_ << " points=\"";
        for (const Vec2& v : pts) body_ << px(v.x) << ',' << py(v.y) << ' ';
        body_ << "\"/>\n";
    }

    void circle(Vec2 at, double r, const std::string& fill) {
        body_ << "<circle cx=\"" << px(at.x) << "\" cy=\"" << py(at.y)
              << "\" r=\"" << r << "\" fill=\"" << fill << "\"/>\n";
    }

    std::string finish() const {
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
           << static_cast<int>(std::ceil(width_)) << "\" height=\""
           << static_cast<int>(std::ceil(height_)) << "\">\n"
           << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
           << body_.str() << "</svg>\n";
        return os.str();
    }

  private:
    Box box_;
    double width_ = 0, height_ = 0;
    std::ostringstream body_;
};

inline void draw_scatterers(Canvas& canvas, const Pattern& pat, int p_lo,
                            int p_hi, int q_lo, int q_hi) {
    for (int p = p_lo; p <= p_hi; ++p)
        for (int q = q_lo; q <= q_hi; ++q)
            if (is_site(p, q))
                canvas.circle(euclidean(Site{p, q}), 2.5,
                              pat.at(Site{p, q}) == kLeft ? "#d62728"
                                                          : "#1f77b4");
}

} // namespace svg

// Trajectory as a polyline over scatterer dots (left red, right blue); the
// starting site is marked green.  Very long walks are decimated to keep the
// file size sane, and the dot layer is skipped on large bounding boxes.
inline std::string render_trajectory_svg(const Trajectory& traj,
                                         const Pattern& background,
                                         size_t max_points = 200000) {
    svg::Box box;
    std::vector<Vec2> pts;
    size_t n = traj.positions.size();
    size_t stride = n > max_points ? (n + max_points - 1) / max_points : 1;
    for (size_t t = 0; t < n; t += stride) {
        Vec2 v = euclidean(traj.positions[t]);
        box.grow(v);
        pts.push_back(v);
    }
    svg::Canvas canvas(box);
    int p_lo = traj.positions[0].p, p_hi = p_lo;
    int q_lo = traj.positions[0].q, q_hi = q_lo;
    for (Site s : traj.positions) {
        p_lo = std::min(p_lo, s.p);
        p_hi = std::max(p_hi, s.p);
        q_lo = std::min(q_lo, s.q);
        q_hi = std::max(q_hi, s.q);
    }
    if (static_cast<int64_t>(p_hi - p_lo + 5) * (q_hi - q_lo + 5) <= 20000)
        svg::draw_scatterers(canvas, background, p_lo - 2, p_hi + 2, q_lo - 2,
                             q_hi + 2);
    canvas.polyline(pts, "#333333", 1.5);
    canvas.circle(euclidean(traj.positions.front()), 4.0, "#2ca02c");
    return canvas.finish();
}

// One cycle with its base marked.
inline std::string render_cycle_svg(const Cycle& c) {
    svg::Box box;
    std::vector<Vec2> pts;
    for (Site s : c.sites) {
        Vec2 v = euclidean(s);
        box.grow(v);
        pts.push_back(v);
    }
    svg::Canvas canvas(box);
    canvas.polyline(pts, "#333333", 1.5);
    canvas.circle(euclidean(c.base), 4.0, "#2ca02c");
    return canvas.finish();
}

// A region's local trajectories in three part styles (solid / long dash /
// short dash, distinct colors).  Pass the partition from find_triperfect;
// trajectories keep enumeration order.
inline std::string render_partition_svg(
    const Region& region, const std::vector<LocalTrajectory>& trajs,
    const TriperfectPartition& partition) {
    if (partition.parts.size() != trajs.size())
        throw ContractError("partition does not match the trajectory list");
    svg::Box box;
    for (Site s : region.site_list) box.grow(euclidean(s));
    svg::Canvas canvas(box);
    for (Site s : region.site_list) canvas.circle(euclidean(s), 2.0, "#999999");
    const char* colors[3] = {"#1f77b4", "#d62728", "#2ca02c"};
    const char* dashes[3] = {"", "8,4", "2,4"};
    for (size_t i = 0; i < trajs.size(); ++i) {
        std::vector<Vec2> pts;
        for (const LocalState& st : trajs[i].states)
            pts.push_back(euclidean(st.site));
        if (trajs[i].kind == LocalKind::LocalCycle && !pts.empty())
            pts.push_back(pts.front()); // close the loop
        int part = partition.parts[i];
        canvas.polyline(pts, colors[part], 1.5, dashes[part]);
    }
    return canvas.finish();
}

// A rectangle of the background pattern.
inline std::string render_pattern_svg(const Pattern& pat, int p_lo, int p_hi,
                                      int q_lo, int q_hi) {
    svg::Box box;
    box.grow(euclidean(Site{p_lo, q_lo}));
    box.grow(euclidean(Site{p_hi, q_hi}));
    svg::Canvas canvas(box);
    svg::draw_scatterers(canvas, pat, p_lo, p_hi, q_lo, q_hi);
    return canvas.finish();
}

} // namespace llg
