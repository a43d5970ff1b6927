#include "tetherplan/solution.hpp"

#include <nlohmann/json.hpp>

#include "tetherplan/errors.hpp"
#include "tetherplan/predicates.hpp"

namespace tetherplan {

using ordered_json = nlohmann::ordered_json;

std::string digest_instance(const Instance& inst) {
    std::string bytes = serialize_instance(inst);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

SolutionRecord solve_instance(const Instance& inst,
                              SlopeSolution::Method method) {
    Corridor c = build_corridor(inst);
    SlopeSolution sol = method == SlopeSolution::Method::linear
                            ? min_slope_linear(c)
                            : min_slope_bruteforce(c);
    BetaPath path = build_min_link_path(c, sol);

    // self-verification is mandatory before a record leaves the solver
    if (!check_feasible(c, path))
        throw VerifyError("solver produced a path outside the corridor");
    if (!check_distance(inst, path))
        throw VerifyError("solver produced a path violating the distance bound");
    if (!path_supports_ok(c, path, sol.witness))
        throw VerifyError("solver produced an unsupported path segment");
    if (sol.witness) {
        const auto& w = *sol.witness;
        if (!path_through_point(path, w.lower.t, w.lower.y) ||
            !path_through_point(path, w.upper.t, w.upper.y))
            throw VerifyError("solver path misses a witness anchor");
    }

    PathMetrics pm = path_metrics(path);
    SolutionRecord rec;
    rec.beta_star = sol.beta_star;
    rec.beta_decimal = sol.beta_star.to_decimal(12);
    rec.method = method == SlopeSolution::Method::linear ? "linear" : "bruteforce";
    rec.witness = sol.witness;
    rec.path = std::move(path);
    rec.links = pm.links;
    rec.turns = pm.turns;
    rec.length_squared = pm.length_squared;
    rec.length_decimal = pm.length_decimal;
    rec.instance_digest = digest_instance(inst);
    return rec;
}

namespace {

ordered_json point_json(const Rat& t, const Rat& y) {
    return ordered_json::array({t.to_string(), y.to_string()});
}

std::pair<Rat, Rat> point_from(const nlohmann::json& v) {
    if (!v.is_array() || v.size() != 2)
        throw ParseError("coordinate pair must be a two-element array");
    auto get = [](const nlohmann::json& x) {
        if (x.is_string()) return Rat::parse(x.get<std::string>());
        if (x.is_number_integer()) return Rat(x.get<std::int64_t>());
        throw ParseError("coordinates must be exact number strings");
    };
    return {get(v[0]), get(v[1])};
}

}  // namespace

std::string serialize_solution(const SolutionRecord& rec) {
    ordered_json j;
    j["beta_star"] = rec.beta_star.to_string();
    j["beta_star_decimal"] = rec.beta_decimal;
    j["method"] = rec.method;
    if (rec.witness) {
        ordered_json w;
        w["lower"] = point_json(rec.witness->lower.t, rec.witness->lower.y);
        w["upper"] = point_json(rec.witness->upper.t, rec.witness->upper.y);
        j["witness"] = std::move(w);
    }
    ordered_json p;
    p["start"] = point_json(rec.path.start.t, rec.path.start.y);
    ordered_json turns = ordered_json::array();
    for (const PathPoint& tp : rec.path.turns)
        turns.push_back(point_json(tp.t, tp.y));
    p["turns"] = std::move(turns);
    p["end"] = point_json(rec.path.end.t, rec.path.end.y);
    j["path"] = std::move(p);
    j["links"] = rec.links;
    j["turns"] = rec.turns;
    j["length_squared"] = rec.length_squared.to_string();
    j["length_decimal"] = rec.length_decimal;
    j["instance_digest"] = rec.instance_digest;
    return j.dump() + "\n";
}

SolutionRecord parse_solution(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid solution JSON: ") + e.what());
    }
    SolutionRecord rec;
    try {
        rec.beta_star = Rat::parse(j.at("beta_star").get<std::string>());
        rec.beta_decimal = j.value("beta_star_decimal", "");
        rec.method = j.at("method").get<std::string>();
        if (j.contains("witness")) {
            auto [lt, ly] = point_from(j["witness"].at("lower"));
            auto [ut, uy] = point_from(j["witness"].at("upper"));
            PairSlope w;
            w.lower = ReflexPoint{ChainSide::lower, 0, lt, ly};
            w.upper = ReflexPoint{ChainSide::upper, 0, ut, uy};
            w.slope = rec.beta_star;
            rec.witness = w;
        }
        const auto& p = j.at("path");
        auto [st, sy] = point_from(p.at("start"));
        rec.path.start = {st, sy};
        for (const auto& tp : p.at("turns")) {
            auto [tt, ty] = point_from(tp);
            rec.path.turns.push_back({tt, ty});
        }
        auto [et, ey] = point_from(p.at("end"));
        rec.path.end = {et, ey};
        rec.path.beta = rec.beta_star;
        rec.links = j.at("links").get<std::size_t>();
        rec.turns = j.at("turns").get<std::size_t>();
        rec.length_squared = Rat::parse(j.at("length_squared").get<std::string>());
        rec.length_decimal = j.value("length_decimal", "");
        rec.instance_digest = j.value("instance_digest", "");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("solution record incomplete: ") + e.what());
    }
    return rec;
}

VerifyReport verify_solution(const Instance& inst, const SolutionRecord& rec,
                             bool with_oracle) {
    VerifyReport rep;

    if (!rec.instance_digest.empty() &&
        rec.instance_digest != digest_instance(inst))
        rep.fail("instance digest mismatch");

    Corridor c;
    try {
        c = build_corridor(inst);
    } catch (const Error& e) {
        rep.fail(std::string("instance invalid: ") + e.what());
        return rep;
    }

    if (rec.beta_star.sign() < 0 || !(rec.beta_star < c.alpha))
        rep.fail("beta_star outside [0, alpha)");

    if (rec.links != rec.path.links())
        rep.fail("links field disagrees with the stored path");
    if (rec.turns + 1 != rec.links) rep.fail("turns != links - 1");

    Rat span = rec.path.end.t - rec.path.start.t;
    if (rec.length_squared !=
        span * span * (Rat(1) + rec.beta_star * rec.beta_star))
        rep.fail("length law violated: length^2 != span^2 (1 + beta^2)");

    // slope grid and alternation of the stored path
    {
        auto pts = rec.path.points();
        int prev = 0;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            Rat dy = pts[i + 1].y - pts[i].y;
            Rat dt = pts[i + 1].t - pts[i].t;
            if (dt.sign() <= 0) {
                rep.fail("path times not strictly increasing");
                break;
            }
            if (dy.abs() != rec.beta_star * dt) {
                rep.fail("path segment off the +-beta slope grid");
                break;
            }
            int s = dy.sign();
            if (rec.beta_star.sign() > 0 && (s == 0 || s == prev)) {
                rep.fail("path segments do not alternate");
                break;
            }
            prev = s;
        }
    }

    try {
        if (!check_feasible(c, rec.path)) rep.fail("path leaves the corridor");
    } catch (const Error& e) {
        rep.fail(std::string("feasibility check: ") + e.what());
    }
    try {
        if (!check_distance(inst, rec.path))
            rep.fail("path violates the distance bound");
    } catch (const Error& e) {
        rep.fail(std::string("distance check: ") + e.what());
    }
    if (!path_supports_ok(c, rec.path, rec.witness))
        rep.fail("a path segment lacks a reflex support");

    if (rec.beta_star.sign() > 0) {
        if (!rec.witness) {
            rep.fail("positive slope but no witness pair");
        } else {
            const auto& w = *rec.witness;
            if (!(w.upper.y < w.lower.y)) rep.fail("witness pair does not overlap");
            if (!path_through_point(rec.path, w.lower.t, w.lower.y) ||
                !path_through_point(rec.path, w.upper.t, w.upper.y))
                rep.fail("path misses a witness anchor point");
        }
    }

    if (with_oracle) {
        Rat oracle_beta = min_slope_oracle(c);
        if (oracle_beta != rec.beta_star)
            rep.fail("oracle minimum slope differs: " + oracle_beta.to_string() +
                     " vs " + rec.beta_star.to_string());
        std::size_t oracle_links = min_link_oracle(c, rec.beta_star);
        if (oracle_links != rec.links)
            rep.fail("oracle minimum links differ: " +
                     std::to_string(oracle_links) + " vs " +
                     std::to_string(rec.links));
    }
    return rep;
}

}  // namespace tetherplan
