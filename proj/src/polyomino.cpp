#include "helly/polyomino.hpp"

#include <algorithm>
#include <limits>

#include "helly/errors.hpp"

namespace helly {

namespace {

struct Bounds {
    std::int32_t min_x, min_y, max_x, max_y;
};

Bounds bounds_of(std::span<const Cell> cells) {
    Bounds b{std::numeric_limits<std::int32_t>::max(),
             std::numeric_limits<std::int32_t>::max(),
             std::numeric_limits<std::int32_t>::min(),
             std::numeric_limits<std::int32_t>::min()};
    for (const Cell& c : cells) {
        b.min_x = std::min(b.min_x, c.x);
        b.min_y = std::min(b.min_y, c.y);
        b.max_x = std::max(b.max_x, c.x);
        b.max_y = std::max(b.max_y, c.y);
    }
    return b;
}

}  // namespace

void Polyomino::finish(std::vector<Cell> sorted_normalized) {
    cells_ = std::move(sorted_normalized);
    const Bounds b = bounds_of(cells_);
    width_ = b.max_x + 1;
    height_ = b.max_y + 1;
    const std::size_t bits =
        static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
    grid_.assign((bits + 63) / 64, 0);
    for (const Cell& c : cells_) {
        const std::size_t bit =
            static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(c.x);
        grid_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
    }
}

Polyomino Polyomino::normalize(std::vector<Cell> cells) {
    if (cells.empty()) throw EmptyInputError{};
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    if (!is_connected(cells)) throw NotConnectedError{};
    const Bounds b = bounds_of(cells);
    for (Cell& c : cells) {
        c.x -= b.min_x;
        c.y -= b.min_y;
    }
    Polyomino p;
    p.finish(std::move(cells));
    return p;
}

bool is_connected(std::span<const Cell> cells) {
    if (cells.empty()) throw EmptyInputError{};
    if (cells.size() == 1) return true;

    const Bounds b = bounds_of(cells);
    const std::int64_t w = std::int64_t{b.max_x} - b.min_x + 1;
    const std::int64_t h = std::int64_t{b.max_y} - b.min_y + 1;
    // A connected n-cell set fits in an n x n box, so a huge box means the
    // answer is already no. Avoids allocating a grid sized by outliers.
    const auto n = static_cast<std::int64_t>(cells.size());
    if (w > n || h > n) return false;

    std::vector<std::uint8_t> occupied(static_cast<std::size_t>(w * h), 0);
    auto at = [&](std::int32_t x, std::int32_t y) -> std::uint8_t& {
        return occupied[static_cast<std::size_t>(
            (std::int64_t{y} - b.min_y) * w + (std::int64_t{x} - b.min_x))];
    };
    for (const Cell& c : cells) at(c.x, c.y) = 1;

    std::vector<Cell> stack{cells[0]};
    at(cells[0].x, cells[0].y) = 2;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        const Cell nbrs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
        for (const Cell& nb : nbrs) {
            if (nb.x < b.min_x || nb.x > b.max_x || nb.y < b.min_y || nb.y > b.max_y) continue;
            if (at(nb.x, nb.y) == 1) {
                at(nb.x, nb.y) = 2;
                ++reached;
                stack.push_back(nb);
            }
        }
    }
    return reached == cells.size();
}

std::vector<Cell> apply(const Polyomino& p, const Placement& pl) {
    std::vector<Cell> out;
    out.reserve(p.size());
    for (const Cell& c : p.cells()) out.push_back(place_cell(pl, c));
    std::sort(out.begin(), out.end());
    return out;
}

Polyomino canonicalize(const Polyomino& p) {
    std::vector<Cell> best;
    for (std::uint8_t t = 0; t < kTransformCount; ++t) {
        std::vector<Cell> img;
        img.reserve(p.size());
        for (const Cell& c : p.cells()) img.push_back(transform_cell(Transform{t}, c));
        const Bounds b = bounds_of(img);
        for (Cell& c : img) {
            c.x -= b.min_x;
            c.y -= b.min_y;
        }
        std::sort(img.begin(), img.end());
        if (t == 0 || img < best) best = std::move(img);
    }
    return Polyomino::normalize(std::move(best));
}

bool is_rectangle(const Polyomino& p) {
    return static_cast<std::int64_t>(p.size()) ==
           std::int64_t{p.width()} * std::int64_t{p.height()};
}

namespace {

std::int64_t cross(Cell o, Cell a, Cell b) {
    return std::int64_t{a.x - o.x} * std::int64_t{b.y - o.y} -
           std::int64_t{a.y - o.y} * std::int64_t{b.x - o.x};
}

// Monotone chain; returns the hull counterclockwise without collinear
// interior vertices. Input must be sorted by (x, y). Degenerate inputs
// (point, segment) come back with 1 or 2 vertices.
std::vector<Cell> convex_hull(std::vector<Cell> pts) {
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Cell> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace

bool is_convex_lattice(const Polyomino& p) {
    std::vector<Cell> pts(p.cells().begin(), p.cells().end());
    std::sort(pts.begin(), pts.end(), [](const Cell& a, const Cell& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    const std::vector<Cell> hull = convex_hull(std::move(pts));

    // Normalized shape: the bounding box contains the hull.
    for (std::int32_t y = 0; y < p.height(); ++y) {
        for (std::int32_t x = 0; x < p.width(); ++x) {
            const Cell q{x, y};
            if (p.contains(q)) continue;
            bool inside = true;
            if (hull.size() == 1) {
                inside = (q == hull[0]);
            } else if (hull.size() == 2) {
                inside = cross(hull[0], hull[1], q) == 0;
            } else {
                for (std::size_t i = 0; i < hull.size() && inside; ++i) {
                    const Cell& a = hull[i];
                    const Cell& b = hull[(i + 1) % hull.size()];
                    if (cross(a, b, q) < 0) inside = false;
                }
            }
            if (inside) return false;
        }
    }
    return true;
}

std::string render_ascii(const Polyomino& p) {
    std::string out;
    out.reserve(static_cast<std::size_t>((p.width() + 1)) *
                static_cast<std::size_t>(p.height()));
    for (std::int32_t y = p.height() - 1; y >= 0; --y) {
        for (std::int32_t x = 0; x < p.width(); ++x) {
            out += p.contains({x, y}) ? '#' : '.';
        }
        out += '\n';
    }
    return out;
}

}  // namespace helly
