#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "helly/geometry.hpp"

namespace helly {

/// A finite 4-connected cell set in normalized position: min x = min y = 0,
/// cells stored sorted by (y, x). Immutable after construction.
///
/// Alongside the sorted sequence a packed bit grid over the bounding box is
/// kept, so membership tests and intersection counting stay cheap inside the
/// search code.
class Polyomino {
public:
    /// Translates `cells` into normalized position. Duplicates collapse.
    /// Throws EmptyInputError / NotConnectedError.
    static Polyomino normalize(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    std::int32_t width() const { return width_; }
    std::int32_t height() const { return height_; }

    bool contains(Cell c) const {
        if (c.x < 0 || c.y < 0 || c.x >= width_ || c.y >= height_) return false;
        const std::size_t bit =
            static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(c.x);
        return (grid_[bit >> 6] >> (bit & 63)) & 1u;
    }

    friend bool operator==(const Polyomino& a, const Polyomino& b) {
        return a.cells_ == b.cells_;
    }
    /// Lexicographic on the sorted cell sequence; total order on shapes.
    friend bool operator<(const Polyomino& a, const Polyomino& b) {
        return a.cells_ < b.cells_;
    }

private:
    Polyomino() = default;
    void finish(std::vector<Cell> sorted_normalized);

    std::vector<Cell> cells_;
    std::int32_t width_ = 0;
    std::int32_t height_ = 0;
    std::vector<std::uint64_t> grid_;
};

/// True iff every cell is reachable from the first one by 4-adjacent steps.
/// Throws EmptyInputError.
bool is_connected(std::span<const Cell> cells);

/// Cell set of the given copy, sorted by (y, x). Cardinality equals p.size().
std::vector<Cell> apply(const Polyomino& p, const Placement& pl);

/// The lexicographically smallest normalized image among the 8 symmetries.
/// Idempotent; equal for any two copies of the same free shape.
Polyomino canonicalize(const Polyomino& p);

/// |p| = width * height of the bounding box.
bool is_rectangle(const Polyomino& p);

/// True iff every grid point inside the convex hull of the cells (boundary
/// included) belongs to p. Exact integer arithmetic only.
bool is_convex_lattice(const Polyomino& p);

/// Rows top to bottom, '#' for cells, '.' for the rest of the bounding box,
/// each row newline-terminated.
std::string render_ascii(const Polyomino& p);

}  // namespace helly
