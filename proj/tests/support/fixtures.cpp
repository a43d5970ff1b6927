#include "fixtures.hpp"

#include <stdexcept>

namespace tetherplan::fixtures {

Instance make(const std::string& alpha, const std::string& budget,
              const std::vector<std::pair<std::string, std::string>>& turns) {
    Instance inst;
    inst.alpha = Rat::parse(alpha);
    inst.vertical_budget = Rat::parse(budget);
    for (const auto& [t, h] : turns)
        inst.turns.push_back({Rat::parse(t), Rat::parse(h)});
    return inst;
}

Instance tent() { return make("1", "1", {{"0", "0"}, {"3", "3"}, {"6", "0"}}); }
Instance flat() { return make("1", "2", {{"0", "0"}, {"3", "3"}, {"6", "0"}}); }
Instance w() {
    return make("1", "1",
                {{"0", "0"}, {"3", "3"}, {"5", "1"}, {"8", "4"}, {"10", "2"}});
}
Instance cap() { return make("1", "1", {{"0", "3"}, {"3", "0"}, {"6", "3"}}); }
Instance rise() {
    return make("1", "3/2", {{"0", "0"}, {"4", "4"}, {"6", "2"}, {"9", "5"}});
}

namespace {

ReflexPoint find_at(const std::vector<ReflexPoint>& list, const Rat& t) {
    for (const ReflexPoint& r : list)
        if (r.t == t) return r;
    throw std::runtime_error("no reflex point at t=" + t.to_string());
}

}  // namespace

ReflexPoint lower_at(const Corridor& c, const std::string& t) {
    return find_at(c.lower_reflex, Rat::parse(t));
}

ReflexPoint upper_at(const Corridor& c, const std::string& t) {
    return find_at(c.upper_reflex, Rat::parse(t));
}

}  // namespace tetherplan::fixtures
