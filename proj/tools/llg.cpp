// Command-line surface for the lattice-gas toolkit.  Four subcommands:
//
//   simulate       run the walker and write trajectory/cycle/statistics files
//   verify-replay  re-measure the first 180 all-right cycle lengths and diff
//                  them against the embedded reference table
//   classify       build the hexagon transition graph and emit it as JSON
//   blocking       decide whether a periodic background is blocking
//
// Exit codes: 0 ok, 1 contract error (bad flags/inputs), 2 verification
// failure (a checked claim does not hold), 3 step/search budget exceeded.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "llg/blocking.hpp"
#include "llg/config.hpp"
#include "llg/cycles.hpp"
#include "llg/dynamics.hpp"
#include "llg/errors.hpp"
#include "llg/hexclass.hpp"
#include "llg/io.hpp"
#include "llg/pattern.hpp"
#include "llg/replay.hpp"
#include "llg/stats.hpp"
#include "llg/svg.hpp"

namespace {

using namespace llg;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitContract = 1;
constexpr int kExitVerification = 2;
constexpr int kExitBudget = 3;

struct PatternChoice {
    std::string name = "all-right";
    std::string file;
    uint64_t seed = 0;
};

// Resolve the --pattern/--pattern-file flags into a configuration.  A file
// supplies the full JSON document (kind/params/overrides); for kind "random"
// without an explicit seed the --seed flag fills it in.
Config resolve_config(const PatternChoice& pc) {
    if (pc.name == "file") {
        if (pc.file.empty())
            throw ContractError("--pattern file requires --pattern-file");
        std::ifstream in(pc.file);
        if (!in) throw ContractError("cannot open pattern file: " + pc.file);
        json j = json::parse(in);
        if (j.value("kind", "") == "random" &&
            !j.value("params", json::object()).contains("seed"))
            j["params"]["seed"] = pc.seed;
        return config_from_json(j);
    }
    if (pc.name == "all-right") return Config(Pattern::all_right());
    if (pc.name == "all-left") return Config(Pattern::all_left());
    if (pc.name == "a") return Config(pattern_a_default());
    if (pc.name == "b") return Config(Pattern::pattern_b(1, 0));
    throw ContractError("unknown pattern: " + pc.name);
}

void write_json_output(const json& j, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        write_text_file(out_path, j.dump(2) + "\n");
    }
}

int cmd_simulate(SystemKind kind, const PatternChoice& pc, int p, int q, int k,
                 int64_t steps, const std::string& out_dir, bool svg) {
    Config c = resolve_config(pc);
    InitialCondition ic = initial_condition(site(p, q), direction(k));

    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);

    Trajectory traj = run(kind, ic, c, steps);
    CycleDecomposition dec = decompose(traj);
    Series m = msd(traj);
    Series tm = tamsd(m);
    CycleLengthHistogram hist = cycle_length_histogram(dec, steps);

    write_csv_file((dir / "trajectory.csv").string(),
                   [&](std::ostream& os) { write_trajectory_csv(os, traj); });
    write_csv_file((dir / "cycles.csv").string(),
                   [&](std::ostream& os) { write_cycles_csv(os, dec); });
    write_csv_file((dir / "msd.csv").string(),
                   [&](std::ostream& os) { write_series_csv(os, m); });
    write_csv_file((dir / "tamsd.csv").string(),
                   [&](std::ostream& os) { write_series_csv(os, tm); });
    write_csv_file((dir / "cycle_hist.csv").string(),
                   [&](std::ostream& os) { write_histogram_csv(os, hist); });

    json stats;
    stats["system"] = (kind == SystemKind::Rotator) ? "rotator" : "mirror";
    stats["pattern"] = pattern_to_json(c.background());
    stats["initial"] = {{"p", p}, {"q", q}, {"k", k}};
    stats["steps"] = steps;
    stats["seed"] = pc.seed;
    stats["flips"] = c.flip_count();
    stats["final"] = {{"p", traj.positions.back().p},
                      {"q", traj.positions.back().q}};
    stats["returns"] = dec.cycles.size();
    stats["cycles_completed"] = hist.total;

    if (hist.total > 0) {
        auto frac = fraction_of_cycles(hist);
        auto it = frac.find(6);
        stats["f6"] = (it != frac.end()) ? json(it->second) : json(nullptr);
    } else {
        stats["f6"] = nullptr;
    }

    // Fits need a populated window; skip them on short runs rather than fail.
    stats["tamsd_fit"] = nullptr;
    if (steps >= 2000) {
        try {
            auto fit = fit_power_law(tm, 1000, steps);
            stats["tamsd_fit"] = fit_to_json(fit, "tamsd");
        } catch (const ContractError&) {
        }
    }
    stats["cycle_decay"] = nullptr;
    if (hist.total > 0) {
        try {
            auto fit = fit_cycle_decay(hist);
            stats["cycle_decay"] = fit_to_json(fit, "cycle length distribution");
        } catch (const ContractError&) {
        }
    }

    write_json_output(stats, (dir / "stats.json").string());

    if (svg)
        write_text_file((dir / "trajectory.svg").string(),
                        render_trajectory_svg(traj, c.background()));

    std::fprintf(stderr,
                 "simulate: %lld steps, %zu returns, %lld flips -> %s\n",
                 static_cast<long long>(steps), dec.cycles.size(),
                 static_cast<long long>(c.flip_count()), out_dir.c_str());
    return kExitOk;
}

int cmd_verify_replay() {
    Config c(Pattern::all_right());
    auto lengths = first_cycle_lengths(SystemKind::Rotator, InitialCondition{},
                                       c, reference_cycle_lengths().size());
    auto mismatch = diff_against_reference(lengths);
    std::printf("measured L(1..5)  = %lld,%lld,%lld,%lld,%lld\n",
                static_cast<long long>(lengths[0]),
                static_cast<long long>(lengths[1]),
                static_cast<long long>(lengths[2]),
                static_cast<long long>(lengths[3]),
                static_cast<long long>(lengths[4]));
    if (!mismatch) {
        std::printf("verify-replay: all %zu cycle lengths match the table\n",
                    lengths.size());
        return kExitOk;
    }
    std::printf(
        "verify-replay: FIRST MISMATCH at i=%zu: measured %lld, table %lld\n",
        mismatch->index, static_cast<long long>(mismatch->measured),
        static_cast<long long>(mismatch->expected));
    return kExitVerification;
}

int cmd_classify(const std::string& out_path) {
    const TransitionGraph& g = transition_graph();
    write_json_output(graph_to_json(g), out_path);
    std::fprintf(stderr, "classify: %zu classes, %zu edges, components:",
                 g.nodes.size(), g.edges.size());
    for (const auto& comp : g.components)
        std::fprintf(stderr, " %zu", comp.size());
    std::fprintf(stderr, "\n");
    const bool ok = g.nodes.size() == 13 && g.components.size() == 2 &&
                    g.components[0].size() == 7 && g.components[1].size() == 6;
    if (!ok) {
        std::fprintf(stderr,
                     "classify: component structure is not (7,6) -- bug\n");
        return kExitVerification;
    }
    return kExitOk;
}

int cmd_blocking(const PatternChoice& pc, int64_t bound,
                 const std::string& out_path) {
    Config c = resolve_config(pc);
    BlockingReport rep = blocking_time(c, bound);
    std::optional<ShapeSurvey> shapes;
    if (rep.blocking_time) shapes = first_return_shapes(c, bound);
    write_json_output(
        blocking_report_to_json(rep, shapes ? &*shapes : nullptr), out_path);
    if (rep.blocking_time)
        std::fprintf(stderr, "blocking: tau_b = %lld\n",
                     static_cast<long long>(*rep.blocking_time));
    else
        std::fprintf(stderr, "blocking: not blocking within %lld\n",
                     static_cast<long long>(bound));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lorentz lattice gas toolkit (honeycomb, flipping scatterers)"};
    app.require_subcommand(1);

    // ---- simulate ----
    auto* sim = app.add_subcommand("simulate", "run the walker, write files");
    std::string system_name = "rotator";
    PatternChoice pc;
    int p = 0, q = 0, k = 0;
    int64_t steps = 100000;
    std::string out_dir = "run";
    bool svg = false;
    sim->add_option("--system", system_name, "rotator|mirror")
        ->check(CLI::IsMember({"rotator", "mirror"}));
    sim->add_option("--pattern", pc.name, "all-right|all-left|a|b|file")
        ->check(CLI::IsMember({"all-right", "all-left", "a", "b", "file"}));
    sim->add_option("--pattern-file", pc.file, "pattern JSON document");
    sim->add_option("--p", p, "initial site p");
    sim->add_option("--q", q, "initial site q");
    sim->add_option("--k", k, "initial direction index 0..5");
    sim->add_option("--steps", steps, "number of steps")
        ->check(CLI::NonNegativeNumber);
    sim->add_option("--out-dir", out_dir, "output directory");
    sim->add_option("--seed", pc.seed, "seed for random pattern files");
    sim->add_flag("--svg", svg, "also render trajectory.svg");

    // ---- verify-replay ----
    app.add_subcommand("verify-replay",
                       "diff the first 180 all-right cycle lengths against "
                       "the embedded reference table");

    // ---- classify ----
    auto* cls = app.add_subcommand(
        "classify", "build the hexagon transition graph, emit JSON");
    std::string cls_out = "-";
    cls->add_option("--out", cls_out, "output path (- for stdout)");

    // ---- blocking ----
    auto* blk = app.add_subcommand(
        "blocking", "decide whether a periodic background is blocking");
    PatternChoice blk_pc;
    int64_t bound = 10000;
    std::string blk_out = "-";
    blk->add_option("--pattern", blk_pc.name, "all-right|all-left|a|b|file")
        ->check(CLI::IsMember({"all-right", "all-left", "a", "b", "file"}));
    blk->add_option("--pattern-file", blk_pc.file, "pattern JSON document");
    blk->add_option("--bound", bound, "per-start step bound")
        ->check(CLI::PositiveNumber);
    blk->add_option("--out", blk_out, "output path (- for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            SystemKind kind = (system_name == "mirror") ? SystemKind::Mirror
                                                        : SystemKind::Rotator;
            return cmd_simulate(kind, pc, p, q, k, steps, out_dir, svg);
        }
        if (app.get_subcommand("verify-replay")->parsed())
            return cmd_verify_replay();
        if (cls->parsed()) return cmd_classify(cls_out);
        if (blk->parsed()) return cmd_blocking(blk_pc, bound, blk_out);
    } catch (const llg::BudgetError& e) {
        std::fprintf(stderr, "budget exceeded: %s\n", e.what());
        return kExitBudget;
    } catch (const llg::InternalError& e) {
        std::fprintf(stderr, "internal invariant violated: %s\n", e.what());
        return kExitVerification;
    } catch (const llg::ContractError& e) {
        std::fprintf(stderr, "contract error: %s\n", e.what());
        return kExitContract;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitContract;
    }
    return kExitContract;
}
