#pragma once

#include <string>
#include <vector>

#include "helly/geometry.hpp"
#include "helly/polyomino.hpp"

namespace helly {

/// A family of copies certifying that the Helly number of `polyomino` is at
/// least `h`: the copies have empty common intersection while every
/// (h-1)-subfamily intersects. With exactly h copies that is the same as a
/// critical family (removing any single copy makes the intersection
/// non-empty).
struct WitnessCertificate {
    Polyomino polyomino;
    int h = 0;
    std::vector<Placement> copies;
    std::string kind = "critical-family";

    std::vector<Cell> copy_cells(std::size_t i) const {
        return apply(polyomino, copies[i]);
    }
    std::vector<std::vector<Cell>> all_copy_cells() const {
        std::vector<std::vector<Cell>> out;
        out.reserve(copies.size());
        for (std::size_t i = 0; i < copies.size(); ++i) out.push_back(copy_cells(i));
        return out;
    }
};

/// Intersection of sorted cell sets (all of them; empty input yields empty).
std::vector<Cell> intersect_cell_sets(const std::vector<std::vector<Cell>>& sets);

/// True iff every j-element subfamily has a common cell. For j >= the family
/// size this degenerates to the full intersection being non-empty.
bool every_subfamily_intersects(const std::vector<std::vector<Cell>>& sets, int j);

}  // namespace helly
