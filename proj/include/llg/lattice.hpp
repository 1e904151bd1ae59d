#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>

#include "llg/errors.hpp"

// Exact integer geometry of the infinite honeycomb lattice.
//
// A vertex is stored as a pair of integers (p, q) embedding into the plane as
//
//     x = p / 2,      y = q * sqrt(3) / 2.
//
// Vertices satisfy p + q even and p mod 3 in {0, 2}; the leftover residue
// p mod 3 == 1 names the hexagonal face centers, so sites and faces share one
// integer namespace without collisions.  All equality tests and hashing are
// exact; floating point appears only in the final embedding.

namespace llg {

namespace detail {
inline int mod(int a, int b) {
    int r = a % b;
    return r < 0 ? r + b : r;
}
} // namespace detail

// ---------------------------------------------------------------------------
// Directions
//
// Six unit directions d_k at angle 60k degrees.  In (p,q) units:
//
//        d2   d1
//          \ /
//    d3 --- * --- d0        d0 = (+2, 0), d1 = (+1,+1), d2 = (-1,+1),
//          / \              d3 = (-2, 0), d4 = (-1,-1), d5 = (+1,-1)
//        d4   d5
//
// Each displacement has Euclidean length 1: (dp/2)^2 + 3 (dq/2)^2 = 1.

struct Direction {
    int k = 0; // 0..5

    friend bool operator==(Direction a, Direction b) { return a.k == b.k; }
    friend bool operator!=(Direction a, Direction b) { return a.k != b.k; }
};

inline constexpr std::array<std::array<int, 2>, 6> kDirectionDisplacement = {{
    {+2, 0}, {+1, +1}, {-1, +1}, {-2, 0}, {-1, -1}, {+1, -1},
}};

inline Direction direction(int k) { return Direction{detail::mod(k, 6)}; }

inline Direction opposite(Direction d) { return direction(d.k + 3); }

// Rotation by the scatterer orientation z: z = +1 (right scatterer) rotates
// the velocity by -60 degrees, z = -1 by +60 degrees.  This is the index form
// of the rotation matrix R(z) acting on the Euclidean velocity vector; the
// equivalence over all 12 (d, z) pairs is checked once in the test suite.
inline Direction rotate(Direction d, int z) {
    return direction(d.k - z);
}

// ---------------------------------------------------------------------------
// Sites

enum class Sublattice : uint8_t {
    Minus, // left end of its horizontal bond, p == 0 (mod 3)
    Plus,  // right end of its horizontal bond, p == 2 (mod 3)
};

struct Site {
    int p = 0;
    int q = 0;

    friend bool operator==(Site a, Site b) { return a.p == b.p && a.q == b.q; }
    friend bool operator!=(Site a, Site b) { return !(a == b); }
    friend bool operator<(Site a, Site b) {
        return a.p != b.p ? a.p < b.p : a.q < b.q;
    }
};

inline bool is_site(int p, int q) {
    if (detail::mod(p + q, 2) != 0) return false;
    int r = detail::mod(p, 3);
    return r == 0 || r == 2;
}

inline Site site(int p, int q) {
    if (!is_site(p, q))
        throw CoordinateError("(" + std::to_string(p) + "," + std::to_string(q) +
                              ") is not a lattice site");
    return Site{p, q};
}

inline Sublattice sublattice(Site s) {
    return detail::mod(s.p, 3) == 0 ? Sublattice::Minus : Sublattice::Plus;
}

// The three bonds available at a site.  Minus sites carry {d0, d2, d4},
// Plus sites {d1, d3, d5}; the two sets alternate along every bond.
inline std::array<Direction, 3> allowed_directions(Site s) {
    if (sublattice(s) == Sublattice::Minus)
        return {direction(0), direction(2), direction(4)};
    return {direction(1), direction(3), direction(5)};
}

inline bool is_allowed(Site s, Direction d) {
    bool even = (d.k % 2) == 0;
    return (sublattice(s) == Sublattice::Minus) == even;
}

inline Site neighbor(Site s, Direction d) {
    if (!is_allowed(s, d))
        throw GeometryError("direction d" + std::to_string(d.k) +
                            " is not a bond at (" + std::to_string(s.p) + "," +
                            std::to_string(s.q) + ")");
    return Site{s.p + kDirectionDisplacement[d.k][0],
                s.q + kDirectionDisplacement[d.k][1]};
}

struct Vec2 {
    double x = 0;
    double y = 0;
};

inline Vec2 euclidean(Site s) {
    return Vec2{s.p / 2.0, s.q * std::sqrt(3.0) / 2.0};
}

// Exact squared Euclidean distance between two sites.  (dp^2 + 3 dq^2) is
// divisible by 4 whenever dp and dq have equal parity, which site coordinates
// guarantee, so the result is an exact integer.
inline int64_t squared_distance(Site a, Site b) {
    int64_t dp = a.p - b.p;
    int64_t dq = a.q - b.q;
    return (dp * dp + 3 * dq * dq) / 4;
}

// ---------------------------------------------------------------------------
// Hexagonal faces

struct HexId {
    int p = 0;
    int q = 0;

    friend bool operator==(HexId a, HexId b) { return a.p == b.p && a.q == b.q; }
    friend bool operator!=(HexId a, HexId b) { return !(a == b); }
    friend bool operator<(HexId a, HexId b) {
        return a.p != b.p ? a.p < b.p : a.q < b.q;
    }
};

inline bool is_hex(int p, int q) {
    return detail::mod(p, 3) == 1 && detail::mod(p + q, 2) == 0;
}

inline HexId hex(int p, int q) {
    if (!is_hex(p, q))
        throw CoordinateError("(" + std::to_string(p) + "," + std::to_string(q) +
                              ") is not a face center");
    return HexId{p, q};
}

// The six boundary sites of a face, read clockwise starting from the vertex
// with maximal p (the rightmost one; ties cannot occur).  Index j holds the
// vertex in direction d_{-j mod 6} from the center:
//
//     j:  0        1        2        3        4        5
//        (p+2,q) (p+1,q-1) (p-1,q-1) (p-2,q) (p-1,q+1) (p+1,q+1)
inline std::array<Site, 6> hex_ring(HexId h) {
    std::array<Site, 6> ring;
    for (int j = 0; j < 6; ++j) {
        const auto& d = kDirectionDisplacement[detail::mod(-j, 6)];
        ring[j] = Site{h.p + d[0], h.q + d[1]};
    }
    return ring;
}

// The three faces whose rings contain s.  Their centers sit across the three
// bonds *not* available at s (center directions and bond directions alternate
// around a vertex).
inline std::array<HexId, 3> hexagons_containing(Site s) {
    std::array<HexId, 3> out;
    int base = sublattice(s) == Sublattice::Minus ? 1 : 0;
    for (int i = 0; i < 3; ++i) {
        const auto& d = kDirectionDisplacement[base + 2 * i];
        out[i] = HexId{s.p + d[0], s.q + d[1]};
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integer point symmetries
//
// Rotation by +60 degrees about the Euclidean origin, as an integer map on
// (p,q).  The origin is a *site*, so this map alone does not preserve the
// lattice; composed with a suitable translation (equivalently, performed
// about a face center) it does.  Shape canonicalization quotients out all
// translations afterwards, which makes the raw map sufficient there.
inline std::array<int, 2> rotate60(int p, int q) {
    return {(p - 3 * q) / 2, (p + q) / 2};
}

inline std::array<int, 2> reflect_q(int p, int q) { return {p, -q}; }

struct SiteHash {
    size_t operator()(Site s) const {
        uint64_t x = (static_cast<uint64_t>(static_cast<uint32_t>(s.p)) << 32) |
                     static_cast<uint32_t>(s.q);
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ULL;
        x ^= x >> 33;
        return static_cast<size_t>(x);
    }
};

struct HexHash {
    size_t operator()(HexId h) const { return SiteHash{}(Site{h.p, h.q}); }
};

} // namespace llg

template <>
struct std::hash<llg::Site> {
    size_t operator()(llg::Site s) const { return llg::SiteHash{}(s); }
};

template <>
struct std::hash<llg::HexId> {
    size_t operator()(llg::HexId h) const { return llg::HexHash{}(h); }
};
