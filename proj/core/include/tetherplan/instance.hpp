#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tetherplan/rational.hpp"

namespace tetherplan {

// One vertex of the leader's space-time zig-zag: at time t the leader is at
// position h on the motion line.
struct TurnPoint {
    Rat t;
    Rat h;
    bool operator==(const TurnPoint& o) const { return t == o.t && h == o.h; }
};

// A leader trajectory plus the vertical clearance available to the follower.
//
// Invariants (enforced by validate / build_corridor):
//   - times strictly increasing, at least one segment
//   - every segment moves at speed exactly alpha: |dh| == alpha * dt
//   - segment slopes strictly alternate sign
struct Instance {
    Rat alpha;                          // leader speed, > 0
    Rat vertical_budget;                // clearance L after projection, > 0
    std::optional<Rat> tether_length;   // original inputs when provided
    std::optional<Rat> line_separation;
    std::vector<TurnPoint> turns;

    std::size_t segments() const { return turns.empty() ? 0 : turns.size() - 1; }
    void validate() const;  // throws NonMonotoneTime / SpeedMismatch / ...

    bool operator==(const Instance& o) const {
        return alpha == o.alpha && vertical_budget == o.vertical_budget &&
               turns == o.turns;
    }
};

// JSON wire format, numbers as exact strings:
//   {"alpha":"1","vertical_budget":"1","turns":[["0","0"],["3","3"],["6","0"]]}
// "tether_length" + "line_separation" may replace "vertical_budget"; the
// budget is then sqrt(tether^2 - separation^2) and must come out rational.
Instance parse_instance(const std::string& json_text);
std::string serialize_instance(const Instance& inst);

}  // namespace tetherplan
