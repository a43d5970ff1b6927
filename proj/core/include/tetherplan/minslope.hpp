#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tetherplan/predicates.hpp"

namespace tetherplan {

enum class SweepDirection { forward, backward };

// Maximum Convex Chain: a convex subchain of lower reflex points grown from
// an anchor until an edge would cross the upper chain. `u_table` records,
// per covered lower reflex point, the upper reflex point with the lowest
// signed connecting slope seen during growth (the blocking witness).
//
// Indices refer to positions in corridor.lower_reflex. `vertices` are in
// growth order: increasing t for forward chains, decreasing t for backward
// ones (backward chains are built on the time-mirrored corridor and
// un-mirrored on output).
struct Mcc {
    std::size_t anchor_index = 0;
    std::size_t end_index = 0;
    std::vector<ReflexPoint> vertices;
    std::map<std::size_t, ReflexPoint> u_table;
    SweepDirection direction = SweepDirection::forward;
};

struct SlopeSolution {
    enum class Method { bruteforce, linear };

    Rat beta_star;
    std::optional<PairSlope> witness;  // present iff beta_star > 0
    Method method = Method::linear;
};

// Quadratic reference: scans every (lower, upper) reflex pair, keeps the
// largest overlapping slope. Ties broken by smallest (lower.t, upper.t).
SlopeSolution min_slope_bruteforce(const Corridor& corridor);

// Graham-scan variant with backward stack pops and U-table maintenance.
// Chains partition the lower reflex points scanned left to right (in the
// given direction); growth stops when the tentative hull edge would pass
// strictly above a recorded upper reflex point.
std::vector<Mcc> build_mccs(const Corridor& corridor, SweepDirection direction);

// Sweeps the chain in growth order; for each vertex picks the upper reflex
// point with the steepest overlapping slope inside the chain's covered span
// (one corridor vertex past the chain end) and returns the first visible
// such pair, if any.
std::optional<PairSlope> mcc_min_slope(const Corridor& corridor, const Mcc& mcc);

// Linear-time solve: the maximum candidate over forward and backward chains,
// with the witness canonicalized to the lexicographically smallest maximal
// pair so it matches min_slope_bruteforce exactly.
SlopeSolution min_slope_linear(const Corridor& corridor);

}  // namespace tetherplan
