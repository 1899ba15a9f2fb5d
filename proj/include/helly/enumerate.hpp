#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "helly/polyomino.hpp"

namespace helly {

/// Hard cap on enumeration size; guards against accidental blowups.
inline constexpr int kMaxEnumerationSize = 16;

/// Depth-first growth over the half plane {y > 0} ∪ {y = 0, x >= 0} rooted
/// at the origin. Yields every fixed (translation-class) polyomino of size
/// <= max_size exactly once, in a deterministic order, keeping only
/// O(max_size^2) state per active branch. Single consumer.
class EnumerationCursor {
public:
    /// Throws SizeOutOfRangeError unless 1 <= max_size <= kMaxEnumerationSize.
    explicit EnumerationCursor(int max_size);

    /// Next fixed polyomino, or nullopt when exhausted.
    std::optional<Polyomino> next();

    int max_size() const { return max_size_; }

private:
    struct Frame {
        std::vector<Cell> ext;       // candidates still to try at this level
        std::size_t next = 0;
        std::vector<Cell> marked;    // cells this frame marked as reached
    };

    bool seen(Cell c) const;
    void mark(Cell c);
    void unmark(Cell c);
    void push_frame(Cell v, std::vector<Cell> inherited);
    Polyomino current_shape() const;

    int max_size_;
    bool started_ = false;
    std::vector<Cell> shape_;
    std::vector<Frame> stack_;
    std::vector<std::uint8_t> seen_grid_;
    std::int32_t grid_w_ = 0;
    std::int32_t grid_h_ = 0;
};

/// Every fixed polyomino of exactly n cells, once each.
void enumerate_fixed(int n, const std::function<void(const Polyomino&)>& fn);

/// One representative (the canonical form) per free class of size n,
/// obtained by keeping exactly the self-canonical fixed shapes.
void enumerate_free(int n, const std::function<void(const Polyomino&)>& fn);

std::vector<Polyomino> enumerate_fixed(int n);
std::vector<Polyomino> enumerate_free(int n);

/// (n, number of free polyominoes of size n) for n = 1..max_n.
std::vector<std::pair<int, std::uint64_t>> count_by_size(int max_n);

}  // namespace helly
