#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "llg/config.hpp"
#include "llg/lattice.hpp"

// Classification of the 64 hexagon words into 13 classes (up to the order-12
// dihedral symmetry of the ring), direct simulation of a particle passing
// through a single hexagon, and the transition graph those passages induce.
// The graph splits into exactly two components; the one containing the
// all-right word is called admissible, and a configuration is admissible on a
// region when every one of its hexagons falls into that component.

namespace llg {

inline constexpr int kClassCount = 13;

// w'[j] = w[(j+r) mod 6]: rotate the ring reading frame.
inline HexWord rotate_word(const HexWord& w, int r) {
    HexWord out;
    for (int j = 0; j < 6; ++j) out[j] = w[detail::mod(j + r, 6)];
    return out;
}

// w'[j] = w[(6-j) mod 6]: reflect the ring about vertex 0.
inline HexWord reflect_word(const HexWord& w) {
    HexWord out;
    for (int j = 0; j < 6; ++j) out[j] = w[detail::mod(-j, 6)];
    return out;
}

// Lexicographic minimum over the 12 dihedral images, with -1 < +1.
inline HexWord canonical_word(const HexWord& w) {
    HexWord best = w;
    for (int r = 0; r < 6; ++r) {
        HexWord a = rotate_word(w, r);
        if (a < best) best = a;
        HexWord b = reflect_word(a);
        if (b < best) best = b;
    }
    return best;
}

inline std::string word_string(const HexWord& w) {
    std::string s;
    for (Orientation o : w) s += o < 0 ? 'L' : 'R';
    return s;
}

// The 13 canonical words in lexicographic order; labels are 1-based indices
// into this table, so label 1 is all-left and label 13 is all-right.
inline const std::array<HexWord, kClassCount>& class_table() {
    static const std::array<HexWord, kClassCount> table = [] {
        std::set<HexWord> canon;
        for (int m = 0; m < 64; ++m) {
            HexWord w;
            for (int j = 0; j < 6; ++j)
                w[j] = (m >> j) & 1 ? kRight : kLeft;
            canon.insert(canonical_word(w));
        }
        if (canon.size() != kClassCount)
            throw InternalError("dihedral classification did not yield 13 classes");
        std::array<HexWord, kClassCount> out;
        std::copy(canon.begin(), canon.end(), out.begin());
        return out;
    }();
    return table;
}

struct ClassId {
    HexWord canonical;
    int label = 0; // 1..13

    friend bool operator==(const ClassId& a, const ClassId& b) {
        return a.label == b.label;
    }
    friend bool operator!=(const ClassId& a, const ClassId& b) {
        return !(a == b);
    }
    friend bool operator<(const ClassId& a, const ClassId& b) {
        return a.label < b.label;
    }
};

inline ClassId canonicalize(const HexWord& w) {
    HexWord c = canonical_word(w);
    const auto& table = class_table();
    auto it = std::lower_bound(table.begin(), table.end(), c);
    if (it == table.end() || *it != c)
        throw InternalError("canonical word missing from the class table");
    return ClassId{c, static_cast<int>(it - table.begin()) + 1};
}

inline ClassId class_of(const Config& c, HexId h) {
    return canonicalize(hexagon_word(c, h));
}

// ---------------------------------------------------------------------------
// Single-hexagon passage

struct TransitionResult {
    HexWord word;    // ring word at the exit step
    int exit_vertex; // ring index the particle left from
    int steps;       // arrivals at ring vertices during the passage
};

// Simulate one particle passage through a lone hexagon: it arrives at ring
// vertex `entry` along that vertex's external bond, scatters and flips ring
// vertices under the flipping-rotator rule, and eventually leaves through an
// external bond.  Only the six ring vertices exist; the first off-ring
// arrival is the exit.
inline TransitionResult hexagon_transition(const HexWord& w0, int entry) {
    if (entry < 0 || entry >= 6)
        throw ContractError("entry vertex must be in 0..5");
    const HexId h{1, 1};
    const auto ring = hex_ring(h);
    auto ring_index = [&](Site s) -> int {
        for (int j = 0; j < 6; ++j)
            if (ring[j] == s) return j;
        return -1;
    };
    auto external_dir = [&](int j) -> Direction {
        for (Direction d : allowed_directions(ring[j]))
            if (ring_index(neighbor(ring[j], d)) < 0) return d;
        throw InternalError("ring vertex without an external bond");
    };

    HexWord w = w0;
    Site pos = neighbor(ring[entry], external_dir(entry));
    Direction v = opposite(external_dir(entry));
    int cur = -1; // ring index of pos, -1 while outside
    for (int steps = 0; steps < (1 << 16); ++steps) {
        Site ns = neighbor(pos, v);
        int j = ring_index(ns);
        if (j < 0) {
            if (cur < 0)
                throw InternalError("entry bond did not lead onto the ring");
            return TransitionResult{w, cur, steps};
        }
        v = rotate(v, w[j]);
        w[j] = static_cast<Orientation>(-w[j]);
        pos = ns;
        cur = j;
    }
    throw InternalError("hexagon passage failed to terminate");
}

// ---------------------------------------------------------------------------
// Transition graph

struct TransitionEdge {
    int from = 0;  // class label
    int to = 0;    // class label
    int entry = 0; // entry vertex on the canonical representative
};

struct TransitionGraph {
    std::array<HexWord, kClassCount> nodes;          // canonical word of label i+1
    std::vector<TransitionEdge> edges;               // from the 78 simulations, deduplicated
    std::array<int, kClassCount> component{};        // component id per label-1
    std::vector<std::vector<int>> components;        // labels per component, largest first
    int admissible_component = 0;                    // id of the all-right component

    bool admissible(int label) const {
        return component[label - 1] == admissible_component;
    }
};

// Build the class-level graph from the 6 x 13 = 78 passages through the
// canonical representatives.  The collapse from words to classes is only
// sound if symmetric inputs give symmetric outputs; passages are equivariant
// under ring rotations (entry e of w matches entry e-r of rotate_word(w,r)),
// and that is verified here for all rotations of all representatives.
// Reflections are deliberately not part of the check: reflecting a hexagon
// swaps the roles of left and right scatterers, so it conjugates the passage
// map rather than commuting with it.  The tests separately confirm that the
// edge set built from all 64 x 6 word passages coincides with this one.
inline TransitionGraph build_transition_graph() {
    TransitionGraph g;
    g.nodes = class_table();

    std::set<std::array<int, 3>> seen;
    for (int i = 0; i < kClassCount; ++i) {
        for (int e = 0; e < 6; ++e) {
            ClassId to = canonicalize(hexagon_transition(g.nodes[i], e).word);
            // rotation equivariance of the collapse ("fails loudly")
            for (int r = 1; r < 6; ++r) {
                ClassId rto = canonicalize(
                    hexagon_transition(rotate_word(g.nodes[i], r),
                                       detail::mod(e - r, 6))
                        .word);
                if (rto != to)
                    throw InternalError(
                        "class collapse is not rotation-equivariant");
            }
            if (seen.insert({i + 1, to.label, e}).second)
                g.edges.push_back(TransitionEdge{i + 1, to.label, e});
        }
    }

    // undirected components via union-find
    std::array<int, kClassCount> parent;
    for (int i = 0; i < kClassCount; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges) parent[find(e.from - 1)] = find(e.to - 1);

    std::vector<std::vector<int>> groups(kClassCount);
    for (int i = 0; i < kClassCount; ++i) groups[find(i)].push_back(i + 1);
    for (auto& grp : groups)
        if (!grp.empty()) g.components.push_back(std::move(grp));
    std::sort(g.components.begin(), g.components.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });

    HexWord all_right;
    all_right.fill(kRight);
    int right_label = canonicalize(all_right).label;
    for (size_t ci = 0; ci < g.components.size(); ++ci)
        for (int label : g.components[ci]) {
            g.component[label - 1] = static_cast<int>(ci);
            if (label == right_label)
                g.admissible_component = static_cast<int>(ci);
        }
    return g;
}

inline const TransitionGraph& transition_graph() {
    static const TransitionGraph g = build_transition_graph();
    return g;
}

inline bool is_admissible_class(const ClassId& c) {
    return transition_graph().admissible(c.label);
}

// True iff every hexagon of the region carries a word in the all-right
// component.
inline bool is_admissible(const Config& c, const std::vector<HexId>& region) {
    if (region.empty())
        throw ContractError("admissibility needs a nonempty region");
    for (HexId h : region)
        if (!is_admissible_class(class_of(c, h))) return false;
    return true;
}

// Every hexagon of one fundamental period of a periodic background: the
// region over which pattern-level admissibility is decided.
inline std::vector<HexId> fundamental_hexes(const Pattern& pat) {
    std::set<HexId> hexes;
    for (Site s : pat.fundamental_sites())
        for (HexId h : hexagons_containing(s))
            hexes.insert(h);
    return std::vector<HexId>(hexes.begin(), hexes.end());
}

} // namespace llg
