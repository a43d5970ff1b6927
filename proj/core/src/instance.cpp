#include "tetherplan/instance.hpp"

#include <nlohmann/json.hpp>

#include "tetherplan/errors.hpp"

namespace tetherplan {

using ordered_json = nlohmann::ordered_json;

void Instance::validate() const {
    if (alpha.sign() <= 0) throw InvalidConfig("alpha must be > 0");
    if (vertical_budget.sign() <= 0)
        throw InvalidConfig("vertical budget must be > 0");
    if (turns.size() < 2)
        throw InvalidConfig("instance needs at least one segment");

    int prev_sign = 0;
    for (std::size_t i = 0; i + 1 < turns.size(); ++i) {
        Rat dt = turns[i + 1].t - turns[i].t;
        if (dt.sign() <= 0)
            throw NonMonotoneTime("times must be strictly increasing at index " +
                                  std::to_string(i + 1));
        Rat dh = turns[i + 1].h - turns[i].h;
        if (dh.abs() != alpha * dt)
            throw SpeedMismatch("segment " + std::to_string(i) +
                                " does not move at speed alpha");
        int s = dh.sign();
        if (s == prev_sign)
            throw NonAlternating("segments " + std::to_string(i - 1) + " and " +
                                 std::to_string(i) + " share a slope sign");
        prev_sign = s;
    }
}

namespace {

Rat rat_from_json(const nlohmann::json& v, const std::string& field) {
    if (v.is_string()) return Rat::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<std::int64_t>());
    if (v.is_number_unsigned()) {
        auto u = v.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            return Rat::parse(std::to_string(u));
        return Rat(static_cast<std::int64_t>(u));
    }
    throw ParseError("field '" + field +
                     "' must be an exact number string or integer");
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid instance JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("instance JSON must be an object");

    Instance inst;
    if (!j.contains("alpha")) throw ParseError("missing field 'alpha'");
    inst.alpha = rat_from_json(j["alpha"], "alpha");

    bool has_budget = j.contains("vertical_budget");
    bool has_tether = j.contains("tether_length") || j.contains("line_separation");
    if (has_tether) {
        if (!j.contains("tether_length") || !j.contains("line_separation"))
            throw ParseError("tether_length and line_separation must be given together");
        inst.tether_length = rat_from_json(j["tether_length"], "tether_length");
        inst.line_separation =
            rat_from_json(j["line_separation"], "line_separation");
        BudgetValue b = effective_budget(*inst.tether_length, *inst.line_separation);
        if (has_budget) {
            inst.vertical_budget = rat_from_json(j["vertical_budget"], "vertical_budget");
            if (b.compare(inst.vertical_budget) != 0)
                throw ParseError("vertical_budget disagrees with tether geometry");
        } else {
            if (!b.is_rational())
                throw IrrationalBudget(
                    "tether geometry gives an irrational vertical budget; "
                    "supply vertical_budget explicitly as a rational");
            inst.vertical_budget = *b.root;
        }
    } else if (has_budget) {
        inst.vertical_budget = rat_from_json(j["vertical_budget"], "vertical_budget");
    } else {
        throw ParseError("missing vertical_budget (or tether_length + line_separation)");
    }

    if (!j.contains("turns") || !j["turns"].is_array())
        throw ParseError("missing or invalid 'turns' array");
    for (const auto& tp : j["turns"]) {
        if (!tp.is_array() || tp.size() != 2)
            throw ParseError("each turn must be a [time, position] pair");
        inst.turns.push_back({rat_from_json(tp[0], "turns[].t"),
                              rat_from_json(tp[1], "turns[].h")});
    }

    inst.validate();
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    ordered_json j;
    j["alpha"] = inst.alpha.to_string();
    if (inst.tether_length && inst.line_separation) {
        j["tether_length"] = inst.tether_length->to_string();
        j["line_separation"] = inst.line_separation->to_string();
    }
    j["vertical_budget"] = inst.vertical_budget.to_string();
    ordered_json turns = ordered_json::array();
    for (const auto& tp : inst.turns)
        turns.push_back({tp.t.to_string(), tp.h.to_string()});
    j["turns"] = std::move(turns);
    return j.dump() + "\n";
}

}  // namespace tetherplan
