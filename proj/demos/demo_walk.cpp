// Run the flipping-rotator walk on the all-right background, print the cycle
// structure it carves out, and drop a picture plus CSV dumps in the working
// directory.
//
// Build:  cmake --build build --target demo_walk
// Run:    ./build/demo_walk

#include <iostream>

#include "llg/cycles.hpp"
#include "llg/dynamics.hpp"
#include "llg/io.hpp"
#include "llg/stats.hpp"
#include "llg/svg.hpp"

using namespace llg;

int main() {
    const int64_t T = 200000;
    Config c(Pattern::all_right());
    Trajectory traj = run(SystemKind::Rotator, InitialCondition{}, c, T);
    CycleDecomposition d = decompose(traj);

    std::cout << "all-right flipping rotators, " << T << " steps from ((0,0), d0)\n";
    std::cout << "  scatterer flips : " << c.flip_count() << '\n';
    std::cout << "  base returns    : " << d.cycles.size() << '\n';

    std::cout << "  first cycle lengths:";
    for (size_t i = 0; i < d.cycles.size() && i < 12; ++i)
        std::cout << ' ' << d.cycles[i].length;
    std::cout << " ...\n";

    auto hist = cycle_length_histogram(d, T);
    std::cout << "  F(6) = " << fraction_of_cycles(hist).at(6)
              << "  (fraction of cycles that are plain hexagons)\n";

    Series avg = tamsd(msd(traj));
    PowerLawFit fit = fit_power_law(avg, 1000, T);
    std::cout << "  time-averaged squared displacement ~ " << fit.c << " * t^"
              << fit.alpha << "  (fit over [1e3, " << T << "])\n";

    write_text_file("walk.svg", render_trajectory_svg(traj, c.background()));
    write_csv_file("walk_cycles.csv",
                   [&](std::ostream& os) { write_cycles_csv(os, d); });
    write_csv_file("walk_tamsd.csv",
                   [&](std::ostream& os) { write_series_csv(os, avg); });
    std::cout << "wrote walk.svg, walk_cycles.csv, walk_tamsd.csv\n";
    return 0;
}
