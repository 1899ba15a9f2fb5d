#pragma once

#include <compare>
#include <cstdint>

namespace helly {

/// A point of the integer grid. Cells compare by (y, x); that order is the
/// canonical storage order throughout the library.
struct Cell {
    std::int32_t x = 0;
    std::int32_t y = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell& a, const Cell& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }
};

inline constexpr int kTransformCount = 8;

/// One of the eight symmetries of the square, encoded as index = r + 4*f.
/// f = 1 reflects across the vertical axis first ((x,y) -> (-x,y)), then r
/// quarter-turn counterclockwise rotations are applied.
struct Transform {
    std::uint8_t index = 0;

    friend bool operator==(const Transform&, const Transform&) = default;
};

constexpr Cell transform_cell(Transform t, Cell c) {
    std::int32_t x = c.x;
    std::int32_t y = c.y;
    if (t.index >= 4) x = -x;
    for (int r = t.index & 3; r > 0; --r) {
        const std::int32_t nx = -y;
        y = x;
        x = nx;
    }
    return {x, y};
}

/// outer ∘ inner, again one of the eight symmetries.
Transform compose(Transform outer, Transform inner);

Transform inverse(Transform t);

/// Identifies a copy of a polyomino: a symmetry followed by a translation.
struct Placement {
    Transform t;
    std::int32_t dx = 0;
    std::int32_t dy = 0;

    friend bool operator==(const Placement&, const Placement&) = default;
};

constexpr Cell place_cell(const Placement& pl, Cell c) {
    const Cell m = transform_cell(pl.t, c);
    return {m.x + pl.dx, m.y + pl.dy};
}

/// outer ∘ inner as a single placement.
Placement compose(const Placement& outer, const Placement& inner);

}  // namespace helly
