#pragma once

#include <optional>
#include <string>

#include "tetherplan/minlink.hpp"

namespace tetherplan {

// Deterministic SVG rendering of the corridor band, both chains, reflex
// markers, the convex-chain overlays, and (optionally) a solution path.
// Identical inputs produce identical bytes.
std::string render_svg(const Instance& inst,
                       const std::optional<BetaPath>& path);

}  // namespace tetherplan
