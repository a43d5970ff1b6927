#pragma once

#include "tetherplan/corridor.hpp"
#include "tetherplan/rational.hpp"

namespace tetherplan {

// An overlapping reflex pair together with the absolute slope of the
// segment joining it. The minimum feasible slope of a corridor is the
// maximum of these over all overlapping pairs.
struct PairSlope {
    ReflexPoint lower;
    ReflexPoint upper;
    Rat slope;

    bool operator==(const PairSlope& o) const {
        return lower == o.lower && upper == o.upper && slope == o.slope;
    }
};

// u strictly below l. Time order of the two points is unrestricted.
// Throws ChainMismatch when the arguments sit on the wrong chains.
bool pair_overlaps(const ReflexPoint& l, const ReflexPoint& u);

// |dy| / |dt| of the joining segment. Throws VerticalPair when l.t == u.t.
Rat pair_slope(const ReflexPoint& l, const ReflexPoint& u);

// Whether the closed segment joining the pair stays inside the closed
// corridor region (touching the boundary is allowed).
bool pair_visible(const Corridor& corridor, const ReflexPoint& l,
                  const ReflexPoint& u);

// Whether some path with segment slopes in {+beta, -beta} (a horizontal
// line when beta == 0) spans the whole corridor. Forward propagation of the
// reachable height interval; exact because every bound is piecewise linear
// between corridor vertices. Throws SlopeOutOfRange unless 0 <= beta <= alpha.
bool feasible_slope(const Corridor& corridor, const Rat& beta);

}  // namespace tetherplan
