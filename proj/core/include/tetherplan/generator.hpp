#pragma once

#include <cstdint>
#include <utility>

#include "tetherplan/instance.hpp"

namespace tetherplan {

struct GenConfig {
    std::size_t n_segments = 1;
    Rat alpha{1};
    Rat vertical_budget{1};
    std::uint64_t seed = 0;
    std::pair<Rat, Rat> duration_range{Rat(1), Rat(8)};
};

// Deterministic in the seed: alternating +-alpha segments with integer
// durations drawn from duration_range, first sign from the seed, starting
// at (0, 0). The output always passes instance validation.
Instance gen_instance(const GenConfig& config);

}  // namespace tetherplan
