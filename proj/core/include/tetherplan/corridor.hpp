#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tetherplan/instance.hpp"
#include "tetherplan/rational.hpp"

namespace tetherplan {

enum class ChainSide { lower, upper };

// A boundary vertex whose interior angle exceeds 180 degrees: a peak of the
// lower chain or a valley of the upper chain. Chain endpoints count when
// they are one-sided extrema toward the interior.
struct ReflexPoint {
    ChainSide chain = ChainSide::lower;
    std::size_t vertex_index = 0;
    Rat t;
    Rat y;

    bool operator==(const ReflexPoint& o) const {
        return chain == o.chain && vertex_index == o.vertex_index && t == o.t &&
               y == o.y;
    }
};

// The follower's feasible band: the leader path translated down and up by
// the vertical budget. Both chains share the leader's vertex times, so
// upper(t) - lower(t) == 2L everywhere.
class Corridor {
public:
    std::vector<Rat> times;
    std::vector<Rat> lower_y;
    std::vector<Rat> upper_y;
    Rat alpha;
    Rat budget;  // L

    std::vector<ReflexPoint> lower_reflex;  // peaks of the lower chain
    std::vector<ReflexPoint> upper_reflex;  // valleys of the upper chain

    std::size_t size() const { return times.size(); }
    const Rat& t0() const { return times.front(); }
    const Rat& tn() const { return times.back(); }

    // Index of the strip [times[i], times[i+1]] containing t.
    std::size_t strip_of(const Rat& t) const;
    Rat lower_at(const Rat& t) const;
    Rat upper_at(const Rat& t) const;

    // Scaled-integer mirror of the geometry, set when every coordinate fits
    // comfortably in int64 after clearing denominators; hot predicates use
    // it so int128 intermediates cannot overflow.
    bool has_scaled = false;
    std::int64_t t_scale = 1;
    std::int64_t y_scale = 1;
    std::vector<std::int64_t> st;   // times * t_scale
    std::vector<std::int64_t> sly;  // lower heights * y_scale
    std::vector<std::int64_t> suy;  // upper heights * y_scale
};

// Validates the instance and constructs its corridor with classified reflex
// points (ordered by time).
Corridor build_corridor(const Instance& instance);

// Reflex classification alone: (lower peaks, upper valleys).
std::pair<std::vector<ReflexPoint>, std::vector<ReflexPoint>> reflex_points(
    const Corridor& corridor);

}  // namespace tetherplan
