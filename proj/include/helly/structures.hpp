#pragma once

#include <cstdint>
#include <optional>

#include "helly/certificate.hpp"
#include "helly/geometry.hpp"
#include "helly/polyomino.hpp"

namespace helly {

enum class QuadrantKind { Small, Big };

/// A copy P' = normalized image of p under `transform` exhibiting one of the
/// two empty-quadrant configurations, with the witnessing coordinates.
///
/// Small: |P' ∩ ([x1,x1+1] x [y1-1,y1])| >= 3 and P' has no cell with
///        x >= x1 and y > y1.
/// Big:   y1 < y2, x1 < x2, the three cells (x1,y2), (x1,y1), (x2,y1) lie in
///        P', and P' has no cell with x > x1 and y > y1.
struct QuadrantEvidence {
    QuadrantKind kind;
    Transform transform;
    std::int32_t x1 = 0;
    std::int32_t y1 = 0;
    std::int32_t x2 = 0;  // Big only
    std::int32_t y2 = 0;  // Big only
};

/// Scans transforms in ascending index order, then (y1, x1) lexicographically,
/// and returns the first match.
std::optional<QuadrantEvidence> find_small_empty_quadrant(const Polyomino& p);
std::optional<QuadrantEvidence> find_big_empty_quadrant(const Polyomino& p);

/// A 2x2 box meeting a copy of p in exactly 3 cells; `corner` is the box's
/// lower-left cell in the frame of the transformed, normalized copy. Returns
/// nullopt exactly for rectangles.
struct BoxTriple {
    Transform transform;
    Cell corner;
};
std::optional<BoxTriple> find_2x2_triple(const Polyomino& p);

/// Four copies obtained by flipping the evidence copy across the two box
/// axes; every three of them share a cell, all four do not. Self-verified;
/// throws ConstructionFailedError when the evidence is not valid for p.
WitnessCertificate witness_from_big_quadrant(const Polyomino& p, const QuadrantEvidence& ev);

/// Rotation construction around the shared 2x2 box: 4 copies when the box
/// meets the evidence copy in 3 cells, 8 copies when it meets it in 4. The
/// result is a 3-witness with h = 4. Throws IsRectangleError for rectangles,
/// ConstructionFailedError when self-verification fails.
WitnessCertificate witness_from_small_quadrant(const Polyomino& p, const QuadrantEvidence& ev);

/// The bridge-shaped family: two horizontal arms of combined length
/// floor(3q/2) with a one-cell gap, plus a 3-cell row bridging the gap from
/// above. |make_fq(q)| = floor(3q/2) + 3. Requires q >= 2.
Polyomino make_fq(int q);

/// The q+1 copies (translates and 180-degree rotations sliding along the
/// common row) forming a verified critical family of size q+1 for make_fq(q).
/// Requires q >= 4.
WitnessCertificate fq_witness(int q);

}  // namespace helly
