#include <catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "llg/blocking.hpp"
#include "llg/io.hpp"
#include "llg/svg.hpp"

using namespace llg;

namespace {

// two patterns agree if they give the same orientation on every site of a
// window large enough to cover several fundamental cells
bool same_over_window(const Pattern& x, const Pattern& y, int r = 14) {
    for (int p = -r; p <= r; ++p)
        for (int q = -r; q <= r; ++q)
            if (is_site(p, q) && x.at(site(p, q)) != y.at(site(p, q)))
                return false;
    return true;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("pattern JSON round-trips", "[io]") {
    std::vector<Pattern> pats;
    pats.push_back(Pattern::all_right());
    pats.push_back(Pattern::all_left());
    pats.push_back(pattern_a_default());
    pats.push_back(Pattern::pattern_b(1, 0));
    pats.push_back(Pattern::pattern_b(2, 1));
    pats.push_back(Pattern::random(123456789u, 0.37));
    {
        // a tile built from the six-left cell reproduces the ring pattern
        Pattern a = pattern_a_default();
        std::unordered_map<Site, Orientation, SiteHash> cell;
        for (Site s : a.fundamental_sites()) cell[s] = a.at(s);
        pats.push_back(Pattern::periodic_tile(a.period_u(), a.period_v(),
                                              std::move(cell)));
    }

    for (const Pattern& pat : pats) {
        json j = pattern_to_json(pat);
        Pattern back = pattern_from_json(j);
        INFO("kind " << pattern_kind_name(pat.kind()));
        REQUIRE(back.kind() == pat.kind());
        REQUIRE(same_over_window(pat, back));
    }

    // a tile serialization of the ring pattern equals the ring pattern
    REQUIRE(same_over_window(pats[2], pats.back()));

    // random keeps its parameters bit-for-bit
    json jr = pattern_to_json(pats[5]);
    REQUIRE(jr.at("params").at("seed").get<uint64_t>() == 123456789u);
    REQUIRE(jr.at("params").at("p_right").get<double>() == 0.37);

    // kind "a" with no parameters falls back to the builtin ring pattern
    Pattern a_default = pattern_from_json(json{{"kind", "a"}});
    REQUIRE(same_over_window(a_default, pattern_a_default()));

    REQUIRE_THROWS_AS(pattern_from_json(json{{"kind", "squares"}}),
                      ContractError);
}

TEST_CASE("configuration JSON applies absolute overrides", "[io]") {
    json j = pattern_to_json(Pattern::all_right());
    j["overrides"] = json::array();
    j["overrides"].push_back({3, 1, -1}); // disagreement: flips
    j["overrides"].push_back({0, 0, 1});  // already right: no flip
    Config c = config_from_json(j);
    REQUIRE(c.orientation(site(3, 1)) == kLeft);
    REQUIRE(c.orientation(site(0, 0)) == kRight);
    REQUIRE(c.override_count() == 1);

    json bad = pattern_to_json(Pattern::all_right());
    bad["overrides"] = json::array();
    bad["overrides"].push_back({3, 1, 0});
    REQUIRE_THROWS_AS(config_from_json(bad), ContractError);
}

TEST_CASE("CSV layouts", "[io]") {
    Config c(Pattern::all_right());
    Trajectory traj = run(SystemKind::Rotator, InitialCondition{}, c, 30);

    std::ostringstream ts;
    write_trajectory_csv(ts, traj);
    auto tl = lines_of(ts.str());
    REQUIRE(tl.size() == 32); // header + 31 states
    REQUIRE(tl[0] == "t,p,q,k");
    REQUIRE(tl[1] == "0,0,0,0");
    REQUIRE(tl[2] == "1,2,0,5");
    REQUIRE(tl[3] == "2,3,-1,4");

    CycleDecomposition d = decompose(traj);
    std::ostringstream cs;
    write_cycles_csv(cs, d);
    auto cl = lines_of(cs.str());
    REQUIRE(cl[0] == "i,tau_start,tau_end,L,local,symmetric");
    REQUIRE(cl[1] == "1,0,6,6,1,1"); // the first hexagon loop

    std::ostringstream hs;
    write_histogram_csv(hs, cycle_length_histogram(d, 30));
    auto hl = lines_of(hs.str());
    REQUIRE(hl[0] == "l,count,fraction");
    REQUIRE(hl[1].rfind("6,2,0.6666666666666666", 0) == 0);
    REQUIRE(hl[2].rfind("18,1,0.3333333333333333", 0) == 0);

    Series s;
    s.values = {1.5, 2.0};
    std::ostringstream ss;
    write_series_csv(ss, s);
    auto sl = lines_of(ss.str());
    REQUIRE(sl[0] == "t,value");
    REQUIRE(sl[1] == "1,1.5");
    REQUIRE(sl[2] == "2,2");
}

TEST_CASE("transition graph JSON shape", "[io]") {
    const TransitionGraph& g = transition_graph();
    json j = graph_to_json(g);

    REQUIRE(j.at("nodes").size() == 13);
    for (const auto& w : j.at("nodes")) {
        REQUIRE(w.size() == 6);
        for (const auto& o : w) REQUIRE((o == 1 || o == -1));
    }

    REQUIRE(j.at("edges").size() == 78);
    for (const auto& e : j.at("edges")) {
        REQUIRE(e.size() == 3);
        REQUIRE((e.at(0) >= 1 && e.at(0) <= 13));
        REQUIRE((e.at(1) >= 1 && e.at(1) <= 13));
        REQUIRE((e.at(2) >= 0 && e.at(2) < 6));
    }

    REQUIRE(j.at("components").size() == 2);
    REQUIRE(j.at("components").at(0).size() == 7);
    REQUIRE(j.at("components").at(1).size() == 6);
    int adm = j.at("admissible_component").get<int>();
    REQUIRE(adm == g.admissible_component);
    // the admissible component holds the all-right class (label 13)
    bool found = false;
    for (const auto& label : j.at("components").at(adm))
        if (label == 13) found = true;
    REQUIRE(found);
}

TEST_CASE("blocking report JSON", "[io]") {
    Config right(Pattern::all_right());
    BlockingReport r = blocking_time(right, 1000);
    json j = blocking_report_to_json(r);
    REQUIRE(j.at("tau_b") == 6);
    REQUIRE(j.at("bound") == 1000);
    REQUIRE(j.at("witness").contains("p"));
    REQUIRE(j.at("witness").contains("k"));
    REQUIRE_FALSE(j.contains("cycles_by_shape"));

    ShapeSurvey sv = first_return_shapes(right, 1000);
    json j2 = blocking_report_to_json(r, &sv);
    REQUIRE(j2.at("cycles_by_shape").size() == 1);
    REQUIRE(j2.at("cycles_by_shape").at(0).at("count") == 6);
    REQUIRE(j2.at("cycles_by_shape").at(0).at("length") == 6);
    REQUIRE(j2.at("cycles_by_shape").at(0).at("cycle").size() == 7);

    // a strip background never returns: tau_b is null
    Config strip(Pattern::pattern_b());
    json j3 = blocking_report_to_json(blocking_time(strip, 2000));
    REQUIRE(j3.at("tau_b").is_null());
}

TEST_CASE("fit metadata JSON", "[io]") {
    Series s;
    for (int64_t t = 1; t <= 10000; ++t)
        s.values.push_back(2.0 * double(t));
    PowerLawFit fit = fit_power_law(s, 10, 10000);
    json j = fit_to_json(fit, "msd");
    REQUIRE(j.at("series") == "msd");
    REQUIRE(j.at("alpha").get<double>() == Catch::Approx(1.0).margin(1e-9));
    REQUIRE(j.at("c").get<double>() == Catch::Approx(2.0).epsilon(1e-9));
    REQUIRE(j.at("t_min") == 10);
    REQUIRE(j.at("t_max") == 10000);
    REQUIRE(j.at("points").get<int64_t>() == fit.points);
    REQUIRE(j.at("protocol").get<std::string>().find("32 points per decade") !=
            std::string::npos);
}

TEST_CASE("SVG well-formedness", "[io][svg]") {
    auto well_formed = [](const std::string& svg_text) {
        REQUIRE(svg_text.rfind("<svg", 0) == 0);
        REQUIRE(svg_text.find("</svg>") != std::string::npos);
    };

    Config c(Pattern::all_right());
    Trajectory traj = run(SystemKind::Rotator, InitialCondition{}, c, 200);
    std::string t_svg = render_trajectory_svg(traj, c.background());
    well_formed(t_svg);
    REQUIRE(t_svg.find("<polyline") != std::string::npos);
    REQUIRE(t_svg.find("#2ca02c") != std::string::npos); // start marker

    CycleDecomposition d = decompose(traj);
    well_formed(render_cycle_svg(d.cycles.front()));

    Region region = make_region({hex(1, 1)});
    Config base(Pattern::all_right());
    auto trajs = enumerate_local_trajectories(region, base);
    auto part = find_triperfect(region, base);
    REQUIRE(part.has_value());
    std::string p_svg = render_partition_svg(region, trajs, *part);
    well_formed(p_svg);
    REQUIRE(p_svg.find("stroke-dasharray") != std::string::npos);

    std::string bg_svg = render_pattern_svg(pattern_a_default(), -6, 12, -6, 12);
    well_formed(bg_svg);
    REQUIRE(bg_svg.find("#d62728") != std::string::npos); // left sites present
    REQUIRE(bg_svg.find("#1f77b4") != std::string::npos); // right sites present
}

TEST_CASE("decimation keeps long trajectory renders bounded", "[io][svg]") {
    Config c(Pattern::all_right());
    Trajectory traj = run(SystemKind::Rotator, InitialCondition{}, c, 30000);
    std::string small = render_trajectory_svg(traj, c.background(), 500);
    std::string big = render_trajectory_svg(traj, c.background());
    REQUIRE(small.size() < big.size());
    REQUIRE(small.rfind("<svg", 0) == 0);
}
