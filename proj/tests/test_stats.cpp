#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "llg/cycles.hpp"
#include "llg/stats.hpp"

using namespace llg;

TEST_CASE("squared displacement from the start", "[stats]") {
    Config c(Pattern::all_right());
    Trajectory traj = run(SystemKind::Rotator, InitialCondition{}, c, 6);
    Series m = msd(traj);
    REQUIRE(m.tmax() == 6);
    // hand values for the first hexagon loop
    REQUIRE(m.at(1) == Catch::Approx(1.0));   // (2,0)
    REQUIRE(m.at(2) == Catch::Approx(3.0));   // (3,-1)
    REQUIRE(m.at(3) == Catch::Approx(4.0));   // (2,-2)
    REQUIRE(m.at(4) == Catch::Approx(3.0));   // (0,-2)
    REQUIRE(m.at(5) == Catch::Approx(1.0));   // (-1,-1)
    REQUIRE(m.at(6) == Catch::Approx(0.0));   // home again
    REQUIRE_THROWS_AS(m.at(0), ContractError);
    REQUIRE_THROWS_AS(m.at(7), ContractError);
}

TEST_CASE("running time average", "[stats]") {
    Series s;
    s.values = {2.0, 4.0, 6.0};  // t = 1,2,3
    Series tm = tamsd(s);
    REQUIRE(tm.at(1) == Catch::Approx(2.0));
    REQUIRE(tm.at(2) == Catch::Approx(3.0));
    REQUIRE(tm.at(3) == Catch::Approx(4.0));
}

TEST_CASE("ensemble average demands aligned horizons", "[stats]") {
    Config c1(Pattern::all_right());
    Config c2(pattern_a_default());
    Trajectory a = run(SystemKind::Rotator, InitialCondition{}, c1, 50);
    Trajectory b = run(SystemKind::Rotator, InitialCondition{}, c2, 50);
    Series avg = ensemble_msd({a, b});
    REQUIRE(avg.tmax() == 50);
    for (int64_t t = 1; t <= 50; ++t)
        REQUIRE(avg.at(t) ==
                Catch::Approx((msd(a).at(t) + msd(b).at(t)) / 2.0));

    Config c3(Pattern::all_right());
    Trajectory shorter = run(SystemKind::Rotator, InitialCondition{}, c3, 10);
    REQUIRE_THROWS_AS(ensemble_msd({a, shorter}), ContractError);
}

TEST_CASE("exact power-law recovery", "[stats][property]") {
    // a pure c*t^alpha series must come back with its parameters to many
    // digits regardless of the sampling grid
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uc(0.1, 5.0), ua(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        double c = uc(rng), alpha = ua(rng);
        std::vector<std::pair<double, double>> pts;
        for (double t = 1; t <= 4096; t *= 2)
            pts.push_back({t, c * std::pow(t, alpha)});
        PowerLawFit fit = fit_power_law(pts);
        REQUIRE(fit.alpha == Catch::Approx(alpha).margin(1e-9));
        REQUIRE(fit.c == Catch::Approx(c).epsilon(1e-9));
        REQUIRE(fit.residual == Catch::Approx(0.0).margin(1e-9));
    }

    // the series-windowed variant recovers synthetic growth laws too
    Series s;
    for (int64_t t = 1; t <= 100000; ++t)
        s.values.push_back(0.7 * std::pow(double(t), 0.54));
    PowerLawFit fit = fit_power_law(s, 1000, 100000);
    REQUIRE(fit.alpha == Catch::Approx(0.54).margin(1e-6));
    REQUIRE(fit.c == Catch::Approx(0.7).epsilon(1e-6));
    // geometric subsampling: about 32 points per decade over two decades
    REQUIRE(fit.points >= 50);
    REQUIRE(fit.points <= 70);

    REQUIRE_THROWS_AS(fit_power_law(s, 0, 100), ContractError);
    REQUIRE_THROWS_AS(fit_power_law(s, 100, 100), ContractError);
    std::vector<std::pair<double, double>> bad = {{1.0, 1.0}, {2.0, 0.0}};
    REQUIRE_THROWS_AS(fit_power_law(bad), ContractError);
}

TEST_CASE("cycle-length histogram counts completed cycles only", "[stats]") {
    Config c(Pattern::all_right());
    Trajectory traj = run(SystemKind::Rotator, InitialCondition{}, c, 700);
    CycleDecomposition d = decompose(traj);

    CycleLengthHistogram full = cycle_length_histogram(d, 700);
    int64_t total = 0;
    for (auto& [len, n] : full.counts) {
        REQUIRE(len % 4 == 2);
        total += n;
    }
    REQUIRE(total == full.total);
    REQUIRE(full.total == static_cast<int64_t>(d.cycles.size()));

    // a tighter horizon drops the late cycles
    CycleLengthHistogram early = cycle_length_histogram(d, 30);
    REQUIRE(early.total == 3);  // lengths 6, 18, 6 complete by t = 30
    REQUIRE(early.counts.at(6) == 2);
    REQUIRE(early.counts.at(18) == 1);

    // fractions normalize to one
    auto frac = fraction_of_cycles(full);
    double sum = 0;
    for (auto& [len, f] : frac) sum += f;
    REQUIRE(sum == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cycle-length decay fit on synthetic counts", "[stats]") {
    // build a histogram that follows count ~ 1000 * l^{-3/2} exactly on the
    // observed support and confirm the fit finds the exponent
    CycleLengthHistogram h;
    h.horizon = 1000000;
    for (int64_t len = 6; len <= 200; len += 4) {
        int64_t n = std::llround(1e6 * std::pow(double(len), -1.5));
        h.counts[len] = n;
        h.total += n;
    }
    PowerLawFit fit = fit_cycle_decay(h, 200);
    REQUIRE(fit.alpha == Catch::Approx(-1.5).margin(2e-3));
}

TEST_CASE("growth-band classification", "[stats]") {
    auto fit_with = [](double a) {
        PowerLawFit f;
        f.alpha = a;
        return f;
    };
    REQUIRE(classify_growth(fit_with(0.54), true) ==
            GrowthLabel::TaSubdiffusion);
    REQUIRE(classify_growth(fit_with(1.0), true) == GrowthLabel::TaDiffusion);
    REQUIRE(classify_growth(fit_with(1.07), true) == GrowthLabel::TaDiffusion);
    REQUIRE(classify_growth(fit_with(1.2), true) ==
            GrowthLabel::TaSuperdiffusion);
    REQUIRE(classify_growth(fit_with(1.95), true) ==
            GrowthLabel::TaPropagation);
    REQUIRE(classify_growth(fit_with(0.05), true) == GrowthLabel::Bounded);
    // without divergence every exponent reads as bounded
    REQUIRE(classify_growth(fit_with(0.54), false) == GrowthLabel::Bounded);
    REQUIRE(growth_label_name(GrowthLabel::TaSubdiffusion) ==
            "ta-subdiffusion");
}

TEST_CASE("divergence heuristic", "[stats]") {
    Series grow, flat;
    for (int64_t t = 1; t <= 10000; ++t) {
        grow.values.push_back(double(t));
        flat.values.push_back(3.0 + (t % 7) * 0.1);
    }
    REQUIRE(looks_diverging(grow));
    REQUIRE_FALSE(looks_diverging(flat));
}

TEST_CASE("alternating series: the time average hides the gap", "[stats]") {
    // raw values 2t-1 at odd t and 0 at even t have no limit, yet the
    // running mean is exactly (t+1)/2 at odd t and (t-1)/2 at even t
    const int64_t T = 10000;
    Series raw = alternating_counterexample(T);
    Series avg = tamsd(raw);
    for (int64_t t = 1; t <= T; ++t) {
        double expect = (t % 2 == 1) ? (t + 1) / 2.0 : (t - 1) / 2.0;
        REQUIRE(avg.at(t) == Catch::Approx(expect).margin(1e-9));
    }
}

TEST_CASE("linear and quadratic tail ratios", "[stats]") {
    const int64_t T = 100000;
    Series lin, quad;
    for (int64_t t = 1; t <= T; ++t) {
        lin.values.push_back(0.8 * double(t));
        quad.values.push_back(0.8 * double(t) * double(t));
    }
    TimeAverageReport r1 = check_time_average_ratio(lin, 0.8, 1);
    REQUIRE(r1.consistent);
    REQUIRE(r1.tail_ratio == Catch::Approx(0.4).epsilon(0.01));
    TimeAverageReport r2 = check_time_average_ratio(quad, 0.8, 2);
    REQUIRE(r2.consistent);
    REQUIRE(r2.tail_ratio == Catch::Approx(0.8 / 3).epsilon(0.01));
    REQUIRE_THROWS_AS(check_time_average_ratio(lin, 0.8, 3), ContractError);
}
