#include "helly/geometry.hpp"

#include <array>
#include <stdexcept>

namespace helly {

namespace {

// A symmetry is determined by the images of the two basis vectors.
struct Basis {
    Cell e1, e2;
    friend bool operator==(const Basis&, const Basis&) = default;
};

Basis basis_of(Transform t) {
    return {transform_cell(t, {1, 0}), transform_cell(t, {0, 1})};
}

std::uint8_t identify(const Basis& b) {
    for (std::uint8_t i = 0; i < kTransformCount; ++i) {
        if (basis_of(Transform{i}) == b) return i;
    }
    throw std::logic_error("basis does not match any square symmetry");
}

using ComposeTable = std::array<std::array<std::uint8_t, kTransformCount>, kTransformCount>;

ComposeTable build_compose_table() {
    ComposeTable table{};
    for (std::uint8_t a = 0; a < kTransformCount; ++a) {
        for (std::uint8_t b = 0; b < kTransformCount; ++b) {
            const Basis composed{
                transform_cell(Transform{a}, transform_cell(Transform{b}, {1, 0})),
                transform_cell(Transform{a}, transform_cell(Transform{b}, {0, 1}))};
            table[a][b] = identify(composed);
        }
    }
    return table;
}

const ComposeTable& compose_table() {
    static const ComposeTable table = build_compose_table();
    return table;
}

}  // namespace

Transform compose(Transform outer, Transform inner) {
    return Transform{compose_table()[outer.index & 7][inner.index & 7]};
}

Transform inverse(Transform t) {
    for (std::uint8_t i = 0; i < kTransformCount; ++i) {
        if (compose(Transform{i}, t) == Transform{0}) return Transform{i};
    }
    throw std::logic_error("square symmetry without inverse");
}

Placement compose(const Placement& outer, const Placement& inner) {
    // outer(inner(c)) = L_o(L_i(c) + d_i) + d_o
    const Cell moved = transform_cell(outer.t, Cell{inner.dx, inner.dy});
    return Placement{compose(outer.t, inner.t), moved.x + outer.dx, moved.y + outer.dy};
}

}  // namespace helly
