#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "tetherplan/errors.hpp"
#include "tetherplan/generator.hpp"
#include "tetherplan/oracle.hpp"

using namespace tetherplan;
namespace fx = tetherplan::fixtures;

namespace {

BetaPath make_path(const Rat& beta, std::vector<PathPoint> pts) {
    BetaPath p;
    p.beta = beta;
    p.start = pts.front();
    p.end = pts.back();
    p.turns.assign(pts.begin() + 1, pts.end() - 1);
    return p;
}

BetaPath shift(const BetaPath& p, const Rat& dy) {
    BetaPath s = p;
    s.start.y += dy;
    s.end.y += dy;
    for (PathPoint& tp : s.turns) tp.y += dy;
    return s;
}

}  // namespace

TEST_CASE("feasibility checking at merged breakpoints") {
    Corridor tent = build_corridor(fx::tent());
    BetaPath good =
        make_path(Rat(1, 3), {{Rat(0), Rat(1)}, {Rat(3), Rat(2)}, {Rat(6), Rat(1)}});
    CHECK(check_feasible(tent, good));
    CHECK_FALSE(check_feasible(tent, shift(good, Rat(1, 2))));

    Corridor flat = build_corridor(fx::flat());
    BetaPath high = make_path(Rat(0), {{Rat(0), Rat(3)}, {Rat(6), Rat(3)}});
    CHECK_FALSE(check_feasible(flat, high));

    BetaPath short_path =
        make_path(Rat(1, 3), {{Rat(0), Rat(1)}, {Rat(3), Rat(2)}});
    CHECK_THROWS_AS(check_feasible(tent, short_path), SpanMismatch);
}

TEST_CASE("distance checking in the leader frame") {
    Instance tent = fx::tent();
    BetaPath good =
        make_path(Rat(1, 3), {{Rat(0), Rat(1)}, {Rat(3), Rat(2)}, {Rat(6), Rat(1)}});
    CHECK(check_distance(tent, good));
    CHECK_FALSE(check_distance(tent, shift(good, Rat(1, 2))));

    // the leader's own trajectory keeps zero separation
    BetaPath same =
        make_path(Rat(1), {{Rat(0), Rat(0)}, {Rat(3), Rat(3)}, {Rat(6), Rat(0)}});
    CHECK(check_distance(tent, same));
}

TEST_CASE("feasibility and distance agree on translated leader paths") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        GenConfig cfg;
        cfg.n_segments = 1 + seed % 23;
        cfg.vertical_budget = Rat(1 + static_cast<std::int64_t>(seed % 3), 2);
        cfg.seed = seed * 31 + 7;
        Instance inst = gen_instance(cfg);
        Corridor c = build_corridor(inst);

        std::vector<PathPoint> pts;
        for (const TurnPoint& tp : inst.turns) pts.push_back({tp.t, tp.h});
        BetaPath leader = make_path(inst.alpha, pts);

        for (std::int64_t k = -4; k <= 4; ++k) {
            BetaPath shifted = shift(leader, Rat(k, 2));
            bool expect = Rat(k, 2).abs() <= inst.vertical_budget;
            CHECK(check_feasible(c, shifted) == expect);
            CHECK(check_distance(inst, shifted) == expect);
        }
    }
}

TEST_CASE("minimum-slope oracle on the fixtures") {
    CHECK(min_slope_oracle(build_corridor(fx::tent())) == Rat(1, 3));
    CHECK(min_slope_oracle(build_corridor(fx::cap())) == Rat(1, 3));
    CHECK(min_slope_oracle(build_corridor(fx::flat())) == Rat(0));
    CHECK(min_slope_oracle(build_corridor(fx::w())) == Rat(1, 3));
    CHECK(min_slope_oracle(build_corridor(fx::rise())) == Rat(1, 4));
}

TEST_CASE("minimum-link oracle on the fixtures") {
    CHECK(min_link_oracle(build_corridor(fx::tent()), Rat(1, 3)) == 2);
    CHECK(min_link_oracle(build_corridor(fx::w()), Rat(1, 3)) == 4);
    CHECK(min_link_oracle(build_corridor(fx::flat()), Rat(0)) == 1);
    CHECK(min_link_oracle(build_corridor(fx::cap()), Rat(1, 3)) == 2);
    CHECK(min_link_oracle(build_corridor(fx::rise()), Rat(1, 4)) == 1);

    CHECK_THROWS_AS(min_link_oracle(build_corridor(fx::tent()), Rat(1, 4)),
                    InfeasibleSlope);
}

TEST_CASE("more slope never costs links") {
    Corridor w = build_corridor(fx::w());
    std::size_t prev = min_link_oracle(w, Rat(1, 3));
    for (const Rat& beta : {Rat(2, 5), Rat(1, 2), Rat(2, 3), Rat(9, 10)}) {
        std::size_t cur = min_link_oracle(w, beta);
        CHECK(cur <= prev);
        prev = cur;
    }
}
