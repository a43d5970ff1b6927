#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tetherplan/minlink.hpp"
#include "tetherplan/oracle.hpp"

namespace tetherplan {

// A solved instance ready for serialization. Every record emitted by
// solve_instance has already passed feasibility and distance checks.
struct SolutionRecord {
    Rat beta_star;
    std::string beta_decimal;
    std::string method;  // "linear" | "bruteforce"
    std::optional<PairSlope> witness;
    BetaPath path;
    std::size_t links = 0;
    std::size_t turns = 0;
    Rat length_squared;
    std::string length_decimal;
    std::string instance_digest;
};

// FNV-1a 64 over the canonical instance serialization, as 16 hex digits.
std::string digest_instance(const Instance& inst);

// Full pipeline: corridor, slope solve, greedy path, metrics, then the
// mandatory self-verification (feasibility, distance, supports, anchors).
SolutionRecord solve_instance(const Instance& inst,
                              SlopeSolution::Method method);

std::string serialize_solution(const SolutionRecord& rec);
SolutionRecord parse_solution(const std::string& json_text);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

// Re-checks a stored record against its instance: digest, structural
// consistency, metrics law, feasibility both ways, supports and anchors,
// and (opt-in, small instances) oracle equality of slope and link count.
VerifyReport verify_solution(const Instance& inst, const SolutionRecord& rec,
                             bool with_oracle);

}  // namespace tetherplan
