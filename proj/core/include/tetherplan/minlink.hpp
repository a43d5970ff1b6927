#pragma once

#include <string>
#include <vector>

#include "tetherplan/minslope.hpp"

namespace tetherplan {

struct PathPoint {
    Rat t;
    Rat y;
    bool operator==(const PathPoint& o) const { return t == o.t && y == o.y; }
};

// A follower path: piecewise linear over [t0, tn] with every segment of
// slope +beta or -beta, strictly alternating (one horizontal segment when
// beta == 0). `turns` are the interior direction changes.
struct BetaPath {
    Rat beta;
    PathPoint start;
    std::vector<PathPoint> turns;
    PathPoint end;

    std::size_t links() const { return turns.size() + 1; }
    std::vector<PathPoint> points() const;
    // Per-segment slope signs (+1/-1), derived from geometry; empty when
    // beta == 0.
    std::vector<int> sign_sequence() const;
    // Exact height at time t (must lie within the path span).
    Rat y_at(const Rat& t) const;
};

struct PathMetrics {
    std::size_t links = 0;
    std::size_t turns = 0;
    Rat length_squared;          // (tn - t0)^2 * (1 + beta^2), exact
    std::string length_decimal;  // 12 fractional digits
};

// Greedy minimum-link construction at the solved slope: anchored on the
// witness pair, extended to both time boundaries, each segment advanced as
// far as the backward-feasibility envelopes allow. When beta* == 0 returns
// the horizontal line through the midpoint of the feasible band.
BetaPath build_min_link_path(const Corridor& corridor,
                             const SlopeSolution& solution);

// Rebuilds a feasible path of steeper slope `beta` >= path.beta by zig-zagging
// through the projections of reflex vertices on each original segment.
// Throws SlopeOutOfRange when beta < path.beta or beta > alpha.
BetaPath steepen_path(const Corridor& corridor, const BetaPath& path,
                      const Rat& beta);

PathMetrics path_metrics(const BetaPath& path);

// Closed-region containment of one segment (shared by visibility and path
// verification).
bool segment_inside(const Corridor& corridor, const PathPoint& a,
                    const PathPoint& b);

// Per-segment reflex support (vacuous for beta == 0). Right of the witness
// anchor ascending segments pass through a lower reflex point and descending
// ones through an upper reflex point; left of it the construction is
// time-mirrored, so the sides swap. The segment carrying the anchor must
// contain both witness points.
bool path_supports_ok(const Corridor& corridor, const BetaPath& path,
                      const std::optional<PairSlope>& witness);

bool path_through_point(const BetaPath& path, const Rat& t, const Rat& y);

// Decimal rendering of sqrt(squared) with `digits` fractional digits.
std::string sqrt_decimal(const Rat& squared, int digits);

}  // namespace tetherplan
