#include "helly/structures.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "helly/errors.hpp"

namespace helly {

namespace {

// Placement sending p onto the normalized image of transform t.
Placement normalized_image_placement(const Polyomino& p, Transform t) {
    std::int32_t min_x = std::numeric_limits<std::int32_t>::max();
    std::int32_t min_y = std::numeric_limits<std::int32_t>::max();
    for (const Cell& c : p.cells()) {
        const Cell m = transform_cell(t, c);
        min_x = std::min(min_x, m.x);
        min_y = std::min(min_y, m.y);
    }
    return Placement{t, -min_x, -min_y};
}

Polyomino transformed_copy(const Polyomino& p, Transform t) {
    return Polyomino::normalize(apply(p, Placement{t, 0, 0}));
}

// max_x_by_row[y] = largest x with (x, y) in the shape, suffix-maximized from
// the top so empty-quadrant checks are O(1).
std::vector<std::int32_t> suffix_max_x(const Polyomino& q) {
    std::vector<std::int32_t> max_x(static_cast<std::size_t>(q.height()),
                                    std::numeric_limits<std::int32_t>::min());
    for (const Cell& c : q.cells()) {
        max_x[static_cast<std::size_t>(c.y)] = std::max(max_x[static_cast<std::size_t>(c.y)], c.x);
    }
    for (std::int32_t y = q.height() - 2; y >= 0; --y) {
        max_x[static_cast<std::size_t>(y)] =
            std::max(max_x[static_cast<std::size_t>(y)], max_x[static_cast<std::size_t>(y) + 1]);
    }
    return max_x;
}

int box_count(const Polyomino& q, std::int32_t bx, std::int32_t by) {
    int count = 0;
    count += q.contains({bx, by});
    count += q.contains({bx + 1, by});
    count += q.contains({bx, by + 1});
    count += q.contains({bx + 1, by + 1});
    return count;
}

// Quarter-turn counterclockwise about the center of the 2x2 box whose
// lower-left cell is (bx, by); maps the box onto itself.
Placement box_rotation(std::int32_t bx, std::int32_t by) {
    // (x, y) -> (bx + by + 1 - y, by - bx + x)
    return Placement{Transform{1}, bx + by + 1, by - bx};
}

bool certificate_is_valid(const WitnessCertificate& cert) {
    const auto sets = cert.all_copy_cells();
    if (!intersect_cell_sets(sets).empty()) return false;
    return every_subfamily_intersects(sets, cert.h - 1);
}

}  // namespace

std::optional<QuadrantEvidence> find_small_empty_quadrant(const Polyomino& p) {
    for (std::uint8_t t = 0; t < kTransformCount; ++t) {
        const Polyomino q = transformed_copy(p, Transform{t});
        const std::vector<std::int32_t> smax = suffix_max_x(q);
        for (std::int32_t y1 = 1; y1 < q.height(); ++y1) {
            // Nothing at all may sit right of x1 above row y1.
            const bool rows_above = y1 + 1 < q.height();
            for (std::int32_t x1 = -1; x1 < q.width(); ++x1) {
                if (rows_above && smax[static_cast<std::size_t>(y1) + 1] >= x1) continue;
                if (box_count(q, x1, y1 - 1) >= 3) {
                    return QuadrantEvidence{QuadrantKind::Small, Transform{t}, x1, y1, 0, 0};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<QuadrantEvidence> find_big_empty_quadrant(const Polyomino& p) {
    for (std::uint8_t t = 0; t < kTransformCount; ++t) {
        const Polyomino q = transformed_copy(p, Transform{t});
        const std::vector<std::int32_t> smax = suffix_max_x(q);
        for (std::int32_t y1 = 0; y1 < q.height(); ++y1) {
            for (std::int32_t x1 = 0; x1 < q.width(); ++x1) {
                if (!q.contains({x1, y1})) continue;
                const bool rows_above = y1 + 1 < q.height();
                if (rows_above && smax[static_cast<std::size_t>(y1) + 1] > x1) continue;
                std::int32_t x2 = 0;
                bool have_x2 = false;
                for (std::int32_t x = x1 + 1; x < q.width() && !have_x2; ++x) {
                    if (q.contains({x, y1})) {
                        x2 = x;
                        have_x2 = true;
                    }
                }
                if (!have_x2) continue;
                std::int32_t y2 = 0;
                bool have_y2 = false;
                for (std::int32_t y = y1 + 1; y < q.height() && !have_y2; ++y) {
                    if (q.contains({x1, y})) {
                        y2 = y;
                        have_y2 = true;
                    }
                }
                if (!have_y2) continue;
                return QuadrantEvidence{QuadrantKind::Big, Transform{t}, x1, y1, x2, y2};
            }
        }
    }
    return std::nullopt;
}

std::optional<BoxTriple> find_2x2_triple(const Polyomino& p) {
    for (std::uint8_t t = 0; t < kTransformCount; ++t) {
        const Polyomino q = transformed_copy(p, Transform{t});
        for (std::int32_t by = -1; by < q.height(); ++by) {
            for (std::int32_t bx = -1; bx < q.width(); ++bx) {
                if (box_count(q, bx, by) == 3) {
                    return BoxTriple{Transform{t}, Cell{bx, by}};
                }
            }
        }
    }
    return std::nullopt;
}

WitnessCertificate witness_from_big_quadrant(const Polyomino& p, const QuadrantEvidence& ev) {
    if (ev.kind != QuadrantKind::Big) {
        throw ConstructionFailedError("evidence kind is not Big");
    }
    const Placement onto_copy = normalized_image_placement(p, ev.transform);
    const std::int32_t sx = ev.x1 + ev.x2;
    const std::int32_t sy = ev.y1 + ev.y2;
    // Flips across the box axes: x -> sx - x is reflect (t=4) shifted,
    // y -> sy - y is reflect-then-half-turn (t=6) shifted.
    const Placement flips[4] = {
        Placement{Transform{0}, 0, 0},
        Placement{Transform{4}, sx, 0},
        Placement{Transform{6}, 0, sy},
        Placement{Transform{2}, sx, sy},
    };

    WitnessCertificate cert;
    cert.polyomino = p;
    cert.h = 4;
    for (const Placement& flip : flips) cert.copies.push_back(compose(flip, onto_copy));
    if (!certificate_is_valid(cert)) {
        throw ConstructionFailedError("big-quadrant witness failed self-verification");
    }
    return cert;
}

WitnessCertificate witness_from_small_quadrant(const Polyomino& p, const QuadrantEvidence& ev) {
    if (ev.kind != QuadrantKind::Small) {
        throw ConstructionFailedError("evidence kind is not Small");
    }
    if (is_rectangle(p)) throw IsRectangleError{};

    const Placement onto_copy = normalized_image_placement(p, ev.transform);
    const Polyomino copy = transformed_copy(p, ev.transform);
    const std::int32_t bx = ev.x1;
    const std::int32_t by = ev.y1 - 1;
    const int in_box = box_count(copy, bx, by);
    if (in_box < 3) {
        throw ConstructionFailedError("small-quadrant box meets the copy in fewer than 3 cells");
    }

    WitnessCertificate cert;
    cert.polyomino = p;
    cert.h = 4;

    const Placement rot = box_rotation(bx, by);
    Placement spin{Transform{0}, 0, 0};
    for (int k = 0; k < 4; ++k) {
        cert.copies.push_back(compose(spin, onto_copy));
        spin = compose(rot, spin);
    }

    if (in_box == 4) {
        // The box is filled, so the four rotations alone never vacate it.
        // Slide a 3-cell box of the same copy onto it and add that copy's
        // four rotations as well.
        std::optional<Cell> three_corner;
        for (std::int32_t y = -1; y < copy.height() && !three_corner; ++y) {
            for (std::int32_t x = -1; x < copy.width() && !three_corner; ++x) {
                if (box_count(copy, x, y) == 3) three_corner = Cell{x, y};
            }
        }
        if (!three_corner) {
            throw ConstructionFailedError("no 2x2 box meets the copy in exactly 3 cells");
        }
        const Placement slide{Transform{0}, bx - three_corner->x, by - three_corner->y};
        const Placement onto_box = compose(slide, onto_copy);
        spin = Placement{Transform{0}, 0, 0};
        for (int k = 0; k < 4; ++k) {
            cert.copies.push_back(compose(spin, onto_box));
            spin = compose(rot, spin);
        }
    }

    if (!certificate_is_valid(cert)) {
        throw ConstructionFailedError("small-quadrant witness failed self-verification");
    }
    return cert;
}

Polyomino make_fq(int q) {
    if (q < 2) throw SizeOutOfRangeError("fq family requires q >= 2");
    const std::int32_t half = q / 2;
    std::vector<Cell> cells;
    for (std::int32_t x = -half; x <= -1; ++x) cells.push_back({x, 0});
    for (std::int32_t x = 1; x <= q; ++x) cells.push_back({x, 0});
    for (std::int32_t x = -1; x <= 1; ++x) cells.push_back({x, 1});
    return Polyomino::normalize(std::move(cells));
}

WitnessCertificate fq_witness(int q) {
    if (q < 4) throw SizeOutOfRangeError("fq witness requires q >= 4");
    const Polyomino fq = make_fq(q);
    const std::int32_t span = (3 * q) / 2;  // rightmost cell of the normalized shape

    WitnessCertificate cert;
    cert.polyomino = fq;
    cert.h = q + 1;
    // Translates with the leftmost cell at (i, 0), then half-turned copies
    // with the leftmost cell at (i, 0); all share the common row y = 0.
    const int a_count = (q + 1) / 2;
    for (std::int32_t i = 0; i < a_count; ++i) {
        cert.copies.push_back(Placement{Transform{0}, i, 0});
    }
    for (std::int32_t i = 0; i <= q / 2; ++i) {
        cert.copies.push_back(Placement{Transform{2}, i + span, 0});
    }

    const auto sets = cert.all_copy_cells();
    if (!intersect_cell_sets(sets).empty() ||
        !every_subfamily_intersects(sets, q)) {
        throw ConstructionFailedError("fq witness failed self-verification");
    }
    return cert;
}

}  // namespace helly
