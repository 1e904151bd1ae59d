#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "llg/errors.hpp"
#include "llg/lattice.hpp"

// Background scatterer patterns: deterministic maps Site -> {-1,+1}.
// A pattern is immutable once built; per-run mutation lives in Config.

namespace llg {

using Orientation = int8_t; // -1 = left scatterer, +1 = right scatterer

inline constexpr Orientation kLeft = -1;
inline constexpr Orientation kRight = +1;

namespace detail {
inline int floor_div(int a, int b) {
    int q = a / b;
    int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// splitmix64 finalizer; the site-hash generator below is built from it and
// is documented in the README so other implementations can match it bit for
// bit.
inline uint64_t sm64_mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace detail

// An integer lattice translation that maps sites to sites (dp = 0 mod 3,
// dp + dq even).
struct Period {
    int dp = 0;
    int dq = 0;
};

inline bool is_lattice_translation(Period v) {
    return detail::mod(v.dp, 3) == 0 && detail::mod(v.dp + v.dq, 2) == 0;
}

enum class PatternKind : uint8_t {
    AllRight,
    AllLeft,
    PatternA,     // all-right background decorated with periodic left sites
    PatternB,     // alternating horizontal layers of right and left scatterers
    PeriodicTile, // explicit fundamental cell over two period vectors
    Random,       // seeded site-hash coin flips, not periodic
};

class Pattern {
  public:
    // -- factories ----------------------------------------------------------

    static Pattern all_right() { return Pattern(PatternKind::AllRight); }
    static Pattern all_left() { return Pattern(PatternKind::AllLeft); }

    // All-right background with the sites {anchor + offset + i*u + j*v}
    // turned into left scatterers.  Every offset must land on a site when
    // added to the anchor, and u, v must be independent lattice translations.
    static Pattern pattern_a(Period u, Period v, Site anchor,
                             std::vector<std::array<int, 2>> left_offsets) {
        Pattern p(PatternKind::PatternA);
        p.validate_basis(u, v);
        p.u_ = u;
        p.v_ = v;
        p.anchor_ = anchor;
        p.offsets_ = std::move(left_offsets);
        for (const auto& off : p.offsets_)
            if (!is_site(anchor.p + off[0], anchor.q + off[1]))
                throw ContractError("pattern-a offset does not land on a site");
        p.build_tile();
        return p;
    }

    // Defaults: the sparsest left-hexagon arrangement that realizes exactly
    // three hexagon classes (all-right, two-adjacent-left, all-left); see
    // pattern_a_default() below.
    static Pattern pattern_a();

    // Horizontal layers: the scatterer at (p,q) is right when
    // floor((q - phase) / (3*thickness)) is even, left when odd.  Thickness
    // counts face rows; one face row is three site rows.  The defaults
    // (thickness 1, phase 0) admit the rightward zig-zag escape along the
    // q = 0 / q = -1 boundary from the standard initial state ((0,0), d0).
    static Pattern pattern_b(int thickness = 1, int phase = 0) {
        if (thickness < 1) throw ContractError("layer thickness must be >= 1");
        Pattern p(PatternKind::PatternB);
        p.thickness_ = thickness;
        p.phase_ = phase;
        p.u_ = Period{6, 0};
        p.v_ = Period{0, 6 * thickness};
        return p;
    }

    // Explicit fundamental cell: cell[s] for every site s = a*u + b*v with
    // a, b in [0,1).  The evaluation reduces an arbitrary site into that
    // parallelogram, so the map must cover it exactly.
    static Pattern periodic_tile(
        Period u, Period v,
        std::unordered_map<Site, Orientation, SiteHash> cell) {
        Pattern p(PatternKind::PeriodicTile);
        p.validate_basis(u, v);
        p.u_ = u;
        p.v_ = v;
        p.tile_ = std::move(cell);
        p.check_tile_cover();
        return p;
    }

    // Independent coin per site: right with probability p_right.  The draw is
    //   h = mix(mix(seed ^ zigzag(p)) ^ zigzag(q)),   u = (h >> 11) * 2^-53,
    // right iff u < p_right, with mix = the splitmix64 finalizer and
    // zigzag(n) = (n << 1) ^ (n >> 63) on the sign-extended coordinate.
    static Pattern random(uint64_t seed, double p_right = 0.5) {
        if (!(p_right >= 0.0 && p_right <= 1.0))
            throw ContractError("p_right must lie in [0,1]");
        Pattern p(PatternKind::Random);
        p.seed_ = seed;
        p.p_right_ = p_right;
        return p;
    }

    // -- evaluation ----------------------------------------------------------

    PatternKind kind() const { return kind_; }

    Orientation at(Site s) const {
        switch (kind_) {
        case PatternKind::AllRight:
            return kRight;
        case PatternKind::AllLeft:
            return kLeft;
        case PatternKind::PatternA:
        case PatternKind::PeriodicTile: {
            auto it = tile_.find(reduce(s));
            if (it == tile_.end())
                throw InternalError("periodic tile does not cover its cell");
            return it->second;
        }
        case PatternKind::PatternB: {
            int layer = detail::floor_div(s.q - phase_, 3 * thickness_);
            return detail::mod(layer, 2) == 0 ? kRight : kLeft;
        }
        case PatternKind::Random: {
            auto zigzag = [](int64_t n) {
                return (static_cast<uint64_t>(n) << 1) ^
                       static_cast<uint64_t>(n >> 63);
            };
            uint64_t h = detail::sm64_mix(seed_ ^ zigzag(s.p));
            h = detail::sm64_mix(h ^ zigzag(s.q));
            double unit = static_cast<double>(h >> 11) * 0x1.0p-53;
            return unit < p_right_ ? kRight : kLeft;
        }
        }
        throw InternalError("unhandled pattern kind");
    }

    bool periodic() const { return kind_ != PatternKind::Random; }

    Period period_u() const { return require_periodic(), u_; }
    Period period_v() const { return require_periodic(), v_; }

    // One representative for every site class modulo the period lattice.
    std::vector<Site> fundamental_sites() const {
        require_periodic();
        std::vector<Site> out;
        // Scan the parallelogram {a*u + b*v : a,b in [0,1)} via a bounding
        // box; reduce() is the membership test.
        int pmax = std::abs(u_.dp) + std::abs(v_.dp);
        int qmax = std::abs(u_.dq) + std::abs(v_.dq);
        for (int p = -pmax; p <= pmax; ++p)
            for (int q = -qmax; q <= qmax; ++q)
                if (is_site(p, q) && reduce(Site{p, q}) == Site{p, q})
                    out.push_back(Site{p, q});
        return out;
    }

    // Accessors used by serialization.
    const std::unordered_map<Site, Orientation, SiteHash>& tile() const {
        return tile_;
    }
    Site anchor() const { return anchor_; }
    const std::vector<std::array<int, 2>>& left_offsets() const { return offsets_; }
    int thickness() const { return thickness_; }
    int phase() const { return phase_; }
    uint64_t seed() const { return seed_; }
    double p_right() const { return p_right_; }

  private:
    explicit Pattern(PatternKind k) : kind_(k) {}

    void require_periodic() const {
        if (!periodic())
            throw ContractError("pattern has no period lattice");
    }

    void validate_basis(Period u, Period v) const {
        if (!is_lattice_translation(u) || !is_lattice_translation(v))
            throw ContractError("period vectors must map sites to sites");
        if (u.dp * v.dq - u.dq * v.dp == 0)
            throw ContractError("period vectors must be linearly independent");
    }

    // Translate s by integer multiples of u and v into the fundamental
    // parallelogram.  Uses exact rational floor of the inverse basis matrix.
    Site reduce(Site s) const {
        int64_t det = int64_t(u_.dp) * v_.dq - int64_t(u_.dq) * v_.dp;
        // (a,b) = M^-1 * s, scaled by det to stay integral.
        int64_t a_num = int64_t(v_.dq) * s.p - int64_t(v_.dp) * s.q;
        int64_t b_num = -int64_t(u_.dq) * s.p + int64_t(u_.dp) * s.q;
        if (det < 0) {
            det = -det;
            a_num = -a_num;
            b_num = -b_num;
        }
        auto fdiv = [](int64_t n, int64_t d) {
            int64_t q = n / d, r = n % d;
            return (r != 0 && (r < 0)) ? q - 1 : q;
        };
        int64_t a = fdiv(a_num, det);
        int64_t b = fdiv(b_num, det);
        return Site{static_cast<int>(s.p - a * u_.dp - b * v_.dp),
                    static_cast<int>(s.q - a * u_.dq - b * v_.dq)};
    }

    void build_tile() {
        tile_.clear();
        for (Site s : fundamental_cell_sites())
            tile_[s] = kRight;
        for (const auto& off : offsets_) {
            Site s = reduce(Site{anchor_.p + off[0], anchor_.q + off[1]});
            auto it = tile_.find(s);
            if (it == tile_.end())
                throw InternalError("reduced left site missed the cell");
            it->second = kLeft;
        }
    }

    std::vector<Site> fundamental_cell_sites() const {
        std::vector<Site> out;
        int pmax = std::abs(u_.dp) + std::abs(v_.dp);
        int qmax = std::abs(u_.dq) + std::abs(v_.dq);
        for (int p = -pmax; p <= pmax; ++p)
            for (int q = -qmax; q <= qmax; ++q)
                if (is_site(p, q) && reduce(Site{p, q}) == Site{p, q})
                    out.push_back(Site{p, q});
        return out;
    }

    void check_tile_cover() const {
        for (Site s : fundamental_cell_sites())
            if (tile_.find(s) == tile_.end())
                throw ContractError("tile cell map is missing a site");
    }

    PatternKind kind_;
    Period u_{3, 1}, v_{3, -1}; // trivial site-lattice basis by default
    Site anchor_{0, 0};
    std::vector<std::array<int, 2>> offsets_;
    std::unordered_map<Site, Orientation, SiteHash> tile_;
    int thickness_ = 1;
    int phase_ = 0;
    uint64_t seed_ = 0;
    double p_right_ = 0.5;
};

// Default spacing for the decorated pattern: the ring of hexagon (1,1)
// turned left, repeated on the index-9 triangular superlattice spanned by
// (9,3) and (0,6).  This is the sparsest period for which every hexagon
// falls into one of exactly three classes -- all-right, all-left, or
// two-adjacent-left -- and it reproduces the pulsating subdiffusive motion
// measured in the tests.  Exhaustive sweeps over every period lattice of
// index <= 16 (see README) show the computed blocking time of this family
// is always 18 with first-return lengths {6, 18}; no spacing attains 16.
inline Pattern pattern_a_default() {
    std::vector<std::array<int, 2>> ring;
    for (Site s : hex_ring(HexId{1, 1}))
        ring.push_back({s.p, s.q});
    return Pattern::pattern_a(Period{9, 3}, Period{0, 6}, Site{0, 0}, ring);
}

inline Pattern Pattern::pattern_a() { return pattern_a_default(); }

} // namespace llg
