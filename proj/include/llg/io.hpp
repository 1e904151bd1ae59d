#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "llg/blocking.hpp"
#include "llg/config.hpp"
#include "llg/cycles.hpp"
#include "llg/dynamics.hpp"
#include "llg/hexclass.hpp"
#include "llg/stats.hpp"

// File formats: CSV dumps for trajectories, cycle reports, series and
// histograms; JSON for patterns/configurations, the class transition graph,
// and blocking reports.  All writers are deterministic: identical inputs
// produce byte-identical files.

namespace llg {

using nlohmann::json;

// ---------------------------------------------------------------------------
// CSV

inline void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "t,p,q,k\n";
    for (size_t t = 0; t < traj.positions.size(); ++t)
        os << t << ',' << traj.positions[t].p << ',' << traj.positions[t].q
           << ',' << static_cast<int>(traj.dirs[t].k) << '\n';
}

inline void write_cycles_csv(std::ostream& os, const CycleDecomposition& d) {
    os << "i,tau_start,tau_end,L,local,symmetric\n";
    for (size_t i = 0; i < d.cycles.size(); ++i) {
        const Cycle& c = d.cycles[i];
        os << i + 1 << ',' << c.t_start << ',' << c.t_end << ',' << c.length
           << ',' << (c.local ? 1 : 0) << ','
           << (is_symmetric_about_base(c) ? 1 : 0) << '\n';
    }
}

inline void write_series_csv(std::ostream& os, const Series& s) {
    os << "t,value\n";
    std::ostringstream buf;
    buf.precision(17);
    for (int64_t t = 1; t <= s.tmax(); ++t) {
        buf.str("");
        buf << s.at(t);
        os << t << ',' << buf.str() << '\n';
    }
}

inline void write_histogram_csv(std::ostream& os,
                                const CycleLengthHistogram& h) {
    os << "l,count,fraction\n";
    std::ostringstream buf;
    buf.precision(17);
    for (const auto& [l, n] : h.counts) {
        buf.str("");
        buf << (static_cast<double>(n) / static_cast<double>(h.total));
        os << l << ',' << n << ',' << buf.str() << '\n';
    }
}

inline void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ContractError("cannot open for writing: " + path);
    f << body;
}

template <typename WriteFn>
inline void write_csv_file(const std::string& path, WriteFn&& fn) {
    std::ostringstream os;
    fn(os);
    write_text_file(path, os.str());
}

// ---------------------------------------------------------------------------
// Pattern / configuration JSON
//
// {"kind": "...", "params": {...}, "overrides": [[p,q,+1|-1], ...]}

inline std::string pattern_kind_name(PatternKind k) {
    switch (k) {
    case PatternKind::AllRight: return "all-right";
    case PatternKind::AllLeft: return "all-left";
    case PatternKind::PatternA: return "a";
    case PatternKind::PatternB: return "b";
    case PatternKind::PeriodicTile: return "tile";
    case PatternKind::Random: return "random";
    }
    throw InternalError("unhandled pattern kind");
}

inline json pattern_to_json(const Pattern& pat) {
    json j;
    j["kind"] = pattern_kind_name(pat.kind());
    json params = json::object();
    switch (pat.kind()) {
    case PatternKind::AllRight:
    case PatternKind::AllLeft: break;
    case PatternKind::PatternA: {
        params["u"] = {pat.period_u().dp, pat.period_u().dq};
        params["v"] = {pat.period_v().dp, pat.period_v().dq};
        params["anchor"] = {pat.anchor().p, pat.anchor().q};
        json offs = json::array();
        for (const auto& o : pat.left_offsets()) offs.push_back({o[0], o[1]});
        params["left_offsets"] = offs;
        break;
    }
    case PatternKind::PatternB:
        params["thickness"] = pat.thickness();
        params["phase"] = pat.phase();
        break;
    case PatternKind::PeriodicTile: {
        params["u"] = {pat.period_u().dp, pat.period_u().dq};
        params["v"] = {pat.period_v().dp, pat.period_v().dq};
        std::vector<std::array<int, 3>> cell;
        for (const auto& [s, o] : pat.tile())
            cell.push_back({s.p, s.q, o});
        std::sort(cell.begin(), cell.end());
        json jc = json::array();
        for (const auto& e : cell) jc.push_back({e[0], e[1], e[2]});
        params["cell"] = jc;
        break;
    }
    case PatternKind::Random:
        params["seed"] = pat.seed();
        params["p_right"] = pat.p_right();
        break;
    }
    j["params"] = params;
    return j;
}

inline Pattern pattern_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const json params = j.value("params", json::object());
    auto period = [&](const char* key) {
        auto a = params.at(key);
        return Period{a.at(0).get<int>(), a.at(1).get<int>()};
    };
    if (kind == "all-right") return Pattern::all_right();
    if (kind == "all-left") return Pattern::all_left();
    if (kind == "a") {
        if (params.empty()) return pattern_a_default();
        std::vector<std::array<int, 2>> offs;
        for (const auto& o : params.at("left_offsets"))
            offs.push_back({o.at(0).get<int>(), o.at(1).get<int>()});
        auto a = params.at("anchor");
        return Pattern::pattern_a(period("u"), period("v"),
                                  site(a.at(0).get<int>(), a.at(1).get<int>()),
                                  std::move(offs));
    }
    if (kind == "b")
        return Pattern::pattern_b(params.value("thickness", 1),
                                  params.value("phase", 0));
    if (kind == "tile") {
        std::unordered_map<Site, Orientation, SiteHash> cell;
        for (const auto& e : params.at("cell")) {
            int o = e.at(2).get<int>();
            if (o != 1 && o != -1)
                throw ContractError("orientations must be +1 or -1");
            cell[site(e.at(0).get<int>(), e.at(1).get<int>())] =
                static_cast<Orientation>(o);
        }
        return Pattern::periodic_tile(period("u"), period("v"),
                                      std::move(cell));
    }
    if (kind == "random")
        return Pattern::random(params.at("seed").get<uint64_t>(),
                               params.value("p_right", 0.5));
    throw ContractError("unknown pattern kind: " + kind);
}

// Overrides are absolute orientations; they are applied by flipping wherever
// the background disagrees.
inline Config config_from_json(const json& j) {
    Config c(pattern_from_json(j));
    for (const auto& e : j.value("overrides", json::array())) {
        Site s = site(e.at(0).get<int>(), e.at(1).get<int>());
        int o = e.at(2).get<int>();
        if (o != 1 && o != -1)
            throw ContractError("orientations must be +1 or -1");
        if (c.orientation(s) != o) c.flip(s);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Transition graph JSON: nodes as +1/-1 words, edges with entry annotations,
// components as label lists.

inline json graph_to_json(const TransitionGraph& g) {
    json nodes = json::array();
    for (const HexWord& w : g.nodes) {
        json word = json::array();
        for (Orientation o : w) word.push_back(static_cast<int>(o));
        nodes.push_back(word);
    }
    json edges = json::array();
    for (const TransitionEdge& e : g.edges)
        edges.push_back({e.from, e.to, e.entry});
    json comps = json::array();
    for (const auto& comp : g.components) comps.push_back(comp);
    return json{{"nodes", nodes},
                {"edges", edges},
                {"components", comps},
                {"admissible_component", g.admissible_component}};
}

// ---------------------------------------------------------------------------
// Blocking report JSON

inline json blocking_report_to_json(const BlockingReport& r,
                                    const ShapeSurvey* shapes = nullptr) {
    json j;
    if (r.blocking_time)
        j["tau_b"] = *r.blocking_time;
    else
        j["tau_b"] = nullptr;
    j["bound"] = r.bound;
    j["witness"] = {{"p", r.witness.site.p},
                    {"q", r.witness.site.q},
                    {"k", r.witness.dir.k}};
    if (shapes) {
        json by_shape = json::array();
        for (const auto& [key, count] : shapes->counts) {
            json rep = json::array();
            for (Site s : shapes->representative.at(key))
                rep.push_back({s.p, s.q});
            by_shape.push_back({{"count", count},
                                {"length", shapes->representative.at(key).size() - 1},
                                {"cycle", rep}});
        }
        j["cycles_by_shape"] = by_shape;
    }
    return j;
}

// ---------------------------------------------------------------------------
// Fit metadata JSON (fit protocol recorded alongside every fit)

inline json fit_to_json(const PowerLawFit& f, const std::string& series_name) {
    return json{{"series", series_name},
                {"c", f.c},
                {"alpha", f.alpha},
                {"t_min", f.t_min},
                {"t_max", f.t_max},
                {"residual", f.residual},
                {"points", f.points},
                {"protocol",
                 "log-log least squares, 32 points per decade geometric "
                 "subsample, zeros excluded"}};
}

} // namespace llg
