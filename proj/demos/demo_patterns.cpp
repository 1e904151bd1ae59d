// Render the builtin scatterer backgrounds as SVG swatches (left rotators
// red, right rotators blue) and print the hexagon classes each periodic
// background is built from.
//
// Build:  cmake --build build --target demo_patterns
// Run:    ./build/demo_patterns

#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "llg/hexclass.hpp"
#include "llg/io.hpp"
#include "llg/svg.hpp"

using namespace llg;

int main() {
    std::vector<std::pair<std::string, Pattern>> gallery = {
        {"all_right", Pattern::all_right()},
        {"all_left", Pattern::all_left()},
        {"ring", pattern_a_default()},
        {"strips", Pattern::pattern_b(1, 0)},
        {"random", Pattern::random(20240815u, 0.5)},
    };

    for (const auto& [name, pat] : gallery) {
        std::string file = "pattern_" + name + ".svg";
        write_text_file(file, render_pattern_svg(pat, -12, 24, -12, 12));
        std::cout << "wrote " << file;

        if (pat.periodic()) {
            // the hexagon classes one fundamental cell is built from
            Config c(pat);
            std::set<std::string> classes;
            for (HexId h : fundamental_hexes(pat))
                classes.insert(word_string(class_of(c, h).canonical));
            std::cout << "   face classes:";
            for (const std::string& w : classes) std::cout << ' ' << w;
        }
        std::cout << '\n';
    }
    return 0;
}
