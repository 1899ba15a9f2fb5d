#pragma once

#include <optional>
#include <vector>

#include "helly/certificate.hpp"
#include "helly/geometry.hpp"
#include "helly/polyomino.hpp"

namespace helly {

/// All copies that could take part in a size-`level` critical family with the
/// identity placement of `base`: in such a family any two members share at
/// least level-2 cells, so every member shares at least max(1, level-2) cells
/// with the base. Deduplicated by cell set; copies[0] is the identity.
struct CandidateUniverse {
    Polyomino base;
    int level = 0;
    std::vector<Placement> copies;
};

/// Copies ordered by (transform index, dy, dx) after the identity placement.
CandidateUniverse candidate_copies(const Polyomino& p, int h);

/// True iff the sets have an empty common intersection while the remaining
/// sets after removing any single member still share a cell. `h` is the level
/// being certified; families smaller than h certify nothing and yield false.
bool is_critical_family(const std::vector<std::vector<Cell>>& copies, int h);

/// A verified critical family of exactly h copies containing the identity
/// placement, or nullopt when none exists. Such a family certifies that the
/// Helly number is at least h. Throws LevelOutOfRangeError unless
/// 2 <= h <= |p| + 1.
std::optional<WitnessCertificate> find_critical_family(const Polyomino& p, int h);

enum class HellyShortcut { Rectangle, StructureLowerBound, Search };
const char* to_string(HellyShortcut s);

struct HellyResult {
    Polyomino polyomino;
    int helly_number = 0;
    WitnessCertificate certificate;
    HellyShortcut shortcut = HellyShortcut::Search;
};

/// The exact Helly number with a certificate for the lower bound.
///
/// Rectangles are 2 with a pair of disjoint copies as certificate. Everything
/// else is at least 4 (an empty-quadrant witness always exists and there is
/// no shape of Helly number 3), and at most |p|+1, since every copy has |p|
/// cells. Within [4, |p|+1] the answer is the largest h admitting a critical
/// family of exactly h copies: one of exactly that size exists at the Helly
/// number itself (a minimal witness is critical), and none exists above it.
/// The engine therefore probes h downward from |p|+1 and returns on the
/// first success; when every h >= 5 fails the answer is 4 and the quadrant
/// construction supplies the certificate.
HellyResult helly_number(const Polyomino& p);

/// Recomputes every copy's cells and checks the certificate invariants from
/// scratch: empty total intersection, every (h-1)-subfamily intersecting,
/// and the derived size bounds (each copy has at least h-1 cells and any two
/// copies share at least h-2). Malformed placements yield false.
bool verify_certificate(const WitnessCertificate& cert);

}  // namespace helly
