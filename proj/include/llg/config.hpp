#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <unordered_map>

#include "llg/lattice.hpp"
#include "llg/pattern.hpp"

// A scatterer configuration C: site -> orientation, stored as an immutable
// shared background pattern plus the sparse set of sites that have flipped.
// The lattice is infinite; only visited sites ever cost memory.

namespace llg {

using HexWord = std::array<Orientation, 6>;

class Config {
  public:
    explicit Config(Pattern background)
        : background_(std::make_shared<const Pattern>(std::move(background))) {}

    explicit Config(std::shared_ptr<const Pattern> background)
        : background_(std::move(background)) {}

    Orientation orientation(Site s) const {
        Orientation raw;
        auto it = overrides_.find(s);
        raw = it != overrides_.end() ? it->second : background_->at(s);
        if (phi_applied_ && sublattice(s) == Sublattice::Minus)
            return static_cast<Orientation>(-raw);
        return raw;
    }

    // Negate the orientation at s.  Every flipped site is recorded, even if a
    // second flip restores the background value; flip_count counts them all.
    void flip(Site s) {
        auto it = overrides_.find(s);
        if (it != overrides_.end()) {
            it->second = static_cast<Orientation>(-it->second);
        } else {
            overrides_.emplace(s, static_cast<Orientation>(-background_->at(s)));
        }
        ++flip_count_;
    }

    int64_t flip_count() const { return flip_count_; }
    size_t override_count() const { return overrides_.size(); }
    const Pattern& background() const { return *background_; }
    std::shared_ptr<const Pattern> background_ptr() const { return background_; }

    // The rotator <-> mirror correspondence: negate the orientation of every
    // Minus site and keep Plus sites.  An involution: phi(phi(C)) == C.
    friend Config phi(const Config& c) {
        Config out = c;
        out.phi_applied_ = !out.phi_applied_;
        return out;
    }

  private:
    std::shared_ptr<const Pattern> background_;
    std::unordered_map<Site, Orientation, SiteHash> overrides_;
    int64_t flip_count_ = 0;
    // When set, reads negate Minus sites on the fly.  The stored override
    // values stay in raw (pre-phi) terms; negation commutes with flipping, so
    // flip() needs no special casing.
    bool phi_applied_ = false;
};

// The six ring orientations of face h, clockwise from the rightmost vertex
// (the hex_ring order).
inline HexWord hexagon_word(const Config& c, HexId h) {
    HexWord w;
    auto ring = hex_ring(h);
    for (int j = 0; j < 6; ++j)
        w[j] = c.orientation(ring[j]);
    return w;
}

} // namespace llg
