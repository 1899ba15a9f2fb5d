#include "helly/enumerate.hpp"

#include <algorithm>

#include "helly/errors.hpp"

namespace helly {

// The growth search explores connected supersets of {(0,0)} inside the half
// plane {y > 0} ∪ {y = 0, x >= 0}. Any fixed polyomino has exactly one
// translate whose (y,x)-minimal cell is the origin, and that translate lies
// in the half plane, so each translation class is produced exactly once.
//
// At every level the first untried cell is consumed and the branch explores
// all shapes containing it; the cell then stays blocked for the sibling
// branches, which is what prevents duplicates. A cell's "reached" mark is
// released by the frame that created it, once that frame is fully explored.

EnumerationCursor::EnumerationCursor(int max_size) : max_size_(max_size) {
    if (max_size < 1 || max_size > kMaxEnumerationSize) {
        throw SizeOutOfRangeError("enumeration size must be in [1, " +
                                  std::to_string(kMaxEnumerationSize) + "]");
    }
    // x ranges over [-(max-1), max-1] plus one probe column on each side,
    // y over [0, max-1] plus one probe row below/above.
    grid_w_ = 2 * max_size_ + 3;
    grid_h_ = max_size_ + 2;
    seen_grid_.assign(static_cast<std::size_t>(grid_w_) * grid_h_, 0);
    shape_.reserve(static_cast<std::size_t>(max_size_));
}

bool EnumerationCursor::seen(Cell c) const {
    return seen_grid_[static_cast<std::size_t>(c.y + 1) * grid_w_ +
                      static_cast<std::size_t>(c.x + max_size_ + 1)] != 0;
}

void EnumerationCursor::mark(Cell c) {
    seen_grid_[static_cast<std::size_t>(c.y + 1) * grid_w_ +
               static_cast<std::size_t>(c.x + max_size_ + 1)] = 1;
}

void EnumerationCursor::unmark(Cell c) {
    seen_grid_[static_cast<std::size_t>(c.y + 1) * grid_w_ +
               static_cast<std::size_t>(c.x + max_size_ + 1)] = 0;
}

void EnumerationCursor::push_frame(Cell v, std::vector<Cell> inherited) {
    shape_.push_back(v);
    Frame frame;
    frame.ext = std::move(inherited);
    if (static_cast<int>(shape_.size()) < max_size_) {
        const Cell nbrs[4] = {
            {v.x + 1, v.y}, {v.x - 1, v.y}, {v.x, v.y + 1}, {v.x, v.y - 1}};
        for (const Cell& nb : nbrs) {
            const bool in_half_plane = nb.y > 0 || (nb.y == 0 && nb.x >= 0);
            if (!in_half_plane || seen(nb)) continue;
            mark(nb);
            frame.marked.push_back(nb);
            frame.ext.push_back(nb);
        }
    }
    stack_.push_back(std::move(frame));
}

Polyomino EnumerationCursor::current_shape() const {
    std::vector<Cell> cells = shape_;
    std::int32_t min_x = 0;
    for (const Cell& c : cells) min_x = std::min(min_x, c.x);
    for (Cell& c : cells) c.x -= min_x;
    return Polyomino::normalize(std::move(cells));
}

std::optional<Polyomino> EnumerationCursor::next() {
    if (!started_) {
        started_ = true;
        const Cell root{0, 0};
        mark(root);
        push_frame(root, {});
        return current_shape();
    }
    while (!stack_.empty()) {
        Frame& top = stack_.back();
        if (top.next < top.ext.size()) {
            const Cell v = top.ext[top.next++];
            std::vector<Cell> inherited(top.ext.begin() +
                                            static_cast<std::ptrdiff_t>(top.next),
                                        top.ext.end());
            push_frame(v, std::move(inherited));
            return current_shape();
        }
        for (const Cell& c : stack_.back().marked) unmark(c);
        stack_.pop_back();
        shape_.pop_back();
    }
    return std::nullopt;
}

void enumerate_fixed(int n, const std::function<void(const Polyomino&)>& fn) {
    EnumerationCursor cursor(n);
    while (auto p = cursor.next()) {
        if (static_cast<int>(p->size()) == n) fn(*p);
    }
}

void enumerate_free(int n, const std::function<void(const Polyomino&)>& fn) {
    enumerate_fixed(n, [&](const Polyomino& p) {
        if (canonicalize(p) == p) fn(p);
    });
}

std::vector<Polyomino> enumerate_fixed(int n) {
    std::vector<Polyomino> out;
    enumerate_fixed(n, [&](const Polyomino& p) { out.push_back(p); });
    return out;
}

std::vector<Polyomino> enumerate_free(int n) {
    std::vector<Polyomino> out;
    enumerate_free(n, [&](const Polyomino& p) { out.push_back(p); });
    return out;
}

std::vector<std::pair<int, std::uint64_t>> count_by_size(int max_n) {
    if (max_n < 1 || max_n > kMaxEnumerationSize) {
        throw SizeOutOfRangeError("enumeration size must be in [1, " +
                                  std::to_string(kMaxEnumerationSize) + "]");
    }
    std::vector<std::pair<int, std::uint64_t>> counts;
    counts.reserve(static_cast<std::size_t>(max_n));
    for (int n = 1; n <= max_n; ++n) counts.emplace_back(n, 0);
    EnumerationCursor cursor(max_n);
    while (auto p = cursor.next()) {
        if (canonicalize(*p) == *p) ++counts[p->size() - 1].second;
    }
    return counts;
}

}  // namespace helly
