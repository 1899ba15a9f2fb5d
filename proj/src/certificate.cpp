#include "helly/certificate.hpp"

#include <algorithm>
#include <iterator>

namespace helly {

namespace {

std::vector<Cell> intersect_two(const std::vector<Cell>& a, const std::vector<Cell>& b) {
    std::vector<Cell> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Extends a partial combination (with non-empty running intersection) by
// `remaining` further members drawn from sets[first..]. Returns false as soon
// as some extendable partial intersection becomes empty, since any completion
// of it is an empty j-subfamily.
bool combinations_intersect(const std::vector<std::vector<Cell>>& sets,
                            std::size_t first, std::size_t remaining,
                            const std::vector<Cell>& running) {
    if (remaining == 0) return true;
    for (std::size_t i = first; i + remaining <= sets.size(); ++i) {
        const std::vector<Cell> next = intersect_two(running, sets[i]);
        if (next.empty()) return false;
        if (!combinations_intersect(sets, i + 1, remaining - 1, next)) return false;
    }
    return true;
}

}  // namespace

std::vector<Cell> intersect_cell_sets(const std::vector<std::vector<Cell>>& sets) {
    if (sets.empty()) return {};
    std::vector<Cell> running = sets.front();
    for (std::size_t i = 1; i < sets.size() && !running.empty(); ++i) {
        running = intersect_two(running, sets[i]);
    }
    return running;
}

bool every_subfamily_intersects(const std::vector<std::vector<Cell>>& sets, int j) {
    if (j <= 0) return true;
    const auto want = static_cast<std::size_t>(j);
    if (want >= sets.size()) return !intersect_cell_sets(sets).empty();
    for (std::size_t i = 0; i + want <= sets.size(); ++i) {
        if (sets[i].empty()) return false;
        if (!combinations_intersect(sets, i + 1, want - 1, sets[i])) return false;
    }
    return true;
}

}  // namespace helly
