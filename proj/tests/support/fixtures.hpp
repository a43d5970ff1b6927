#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tetherplan/corridor.hpp"
#include "tetherplan/instance.hpp"

namespace tetherplan::fixtures {

Instance make(const std::string& alpha, const std::string& budget,
              const std::vector<std::pair<std::string, std::string>>& turns);

// Small instances used across the suites.
Instance tent();  // alpha 1, L 1, (0,0) (3,3) (6,0)
Instance flat();  // alpha 1, L 2, same turns as tent
Instance w();     // alpha 1, L 1, (0,0) (3,3) (5,1) (8,4) (10,2)
Instance cap();   // alpha 1, L 1, (0,3) (3,0) (6,3)
Instance rise();  // alpha 1, L 3/2, (0,0) (4,4) (6,2) (9,5)

ReflexPoint lower_at(const Corridor& c, const std::string& t);
ReflexPoint upper_at(const Corridor& c, const std::string& t);

}  // namespace tetherplan::fixtures
