#pragma once

#include "tetherplan/minlink.hpp"

namespace tetherplan {

// One layer of the min-link search: the set of heights reachable at time t
// using `link_budget` segments, the current one running with `sign`.
struct ReachState {
    std::size_t link_budget = 0;
    int sign = +1;
    Rat t;
    std::vector<std::pair<Rat, Rat>> intervals;  // disjoint, sorted, closed
};

// Exact containment check: at every merged breakpoint of corridor vertices
// and path turns the path height lies within [lower(t), upper(t)].
// Throws SpanMismatch when the path does not cover [t0, tn].
bool check_feasible(const Corridor& corridor, const BetaPath& path);

// The same constraint evaluated in the original leader/follower frame:
// |h_leader(t) - h_follower(t)| <= vertical budget at every breakpoint.
bool check_distance(const Instance& instance, const BetaPath& path);

// Threshold search over candidate slopes: collects {0} and every
// overlapping pair slope, and returns the least candidate that
// feasible_slope accepts. Independent of both solver code paths.
Rat min_slope_oracle(const Corridor& corridor);

// Exact minimum number of links over all paths with slopes {+beta, -beta},
// by breadth-first search over link budgets with interval propagation
// across strips. Intended for small corridors (n <= 50).
// Throws InfeasibleSlope when the slope cannot traverse the corridor and
// CapExceeded if the search passes 2n+2 links (a solver bug, not an input
// condition).
std::size_t min_link_oracle(const Corridor& corridor, const Rat& beta);

}  // namespace tetherplan
