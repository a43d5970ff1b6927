#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "tetherplan/generator.hpp"
#include "tetherplan/minslope.hpp"
#include "tetherplan/oracle.hpp"

using namespace tetherplan;
namespace fx = tetherplan::fixtures;

namespace {

// direct geometric re-check of the chain invariants
void check_mcc_invariants(const Corridor& c, const Mcc& mcc) {
    const auto& v = mcc.vertices;
    REQUIRE(!v.empty());
    bool fwd = mcc.direction == SweepDirection::forward;
    auto ot = [&](const Rat& t) { return fwd ? t : -t; };

    // growth order is monotone in oriented time
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        CHECK(ot(v[i].t) < ot(v[i + 1].t));

    // strict convexity: oriented edge slopes strictly decrease
    for (std::size_t i = 0; i + 2 < v.size(); ++i) {
        Rat s1 = (v[i + 1].y - v[i].y) / (ot(v[i + 1].t) - ot(v[i].t));
        Rat s2 = (v[i + 2].y - v[i + 1].y) / (ot(v[i + 2].t) - ot(v[i + 1].t));
        CHECK(s1 > s2);
    }

    // vertices lie on or above the anchor->end segment
    if (v.size() >= 2) {
        const ReflexPoint& a = v.front();
        const ReflexPoint& b = v.back();
        for (const ReflexPoint& m : v) {
            Rat lhs = (m.y - a.y) * (ot(b.t) - ot(a.t));
            Rat rhs = (b.y - a.y) * (ot(m.t) - ot(a.t));
            CHECK(lhs >= rhs);
        }
    }

    // the polyline never passes strictly above an upper reflex point
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        Rat lo = min(v[i].t, v[i + 1].t), hi = max(v[i].t, v[i + 1].t);
        Rat dt = hi - lo;
        const ReflexPoint& a = v[i].t <= v[i + 1].t ? v[i] : v[i + 1];
        const ReflexPoint& b = v[i].t <= v[i + 1].t ? v[i + 1] : v[i];
        for (const ReflexPoint& u : c.upper_reflex) {
            if (u.t <= lo || u.t >= hi) continue;
            Rat edge = a.y * dt + (b.y - a.y) * (u.t - lo);
            CHECK(edge <= u.y * dt);
        }
    }
}

}  // namespace

TEST_CASE("brute force on the fixtures") {
    SUBCASE("tent: tie broken toward the earlier upper point") {
        SlopeSolution s = min_slope_bruteforce(build_corridor(fx::tent()));
        CHECK(s.beta_star == Rat(1, 3));
        REQUIRE(s.witness);
        CHECK(s.witness->lower.t == Rat(3));
        CHECK(s.witness->lower.y == Rat(2));
        CHECK(s.witness->upper.t == Rat(0));
        CHECK(s.witness->upper.y == Rat(1));
    }
    SUBCASE("flat: no overlap, slope zero, no witness") {
        SlopeSolution s = min_slope_bruteforce(build_corridor(fx::flat()));
        CHECK(s.beta_star == Rat(0));
        CHECK(!s.witness);
    }
    SUBCASE("w: two maximal pairs, lexicographic witness") {
        SlopeSolution s = min_slope_bruteforce(build_corridor(fx::w()));
        CHECK(s.beta_star == Rat(1, 3));
        REQUIRE(s.witness);
        CHECK(s.witness->lower.t == Rat(3));
        CHECK(s.witness->upper.t == Rat(0));
    }
}

TEST_CASE("convex chains of the w corridor split at the blocking valley") {
    Corridor c = build_corridor(fx::w());
    auto mccs = build_mccs(c, SweepDirection::forward);
    REQUIRE(mccs.size() == 2);

    REQUIRE(mccs[0].vertices.size() == 1);
    CHECK(mccs[0].vertices[0].t == Rat(3));
    CHECK(mccs[0].vertices[0].y == Rat(2));
    REQUIRE(mccs[1].vertices.size() == 1);
    CHECK(mccs[1].vertices[0].t == Rat(8));
    CHECK(mccs[1].vertices[0].y == Rat(3));

    // the chain from (3,2) records the valley (5,2) as its lowest-slope
    // upper point, which is what blocked the edge to (8,3)
    REQUIRE(mccs[0].u_table.size() == 1);
    const ReflexPoint& blocker = mccs[0].u_table.begin()->second;
    CHECK(blocker.t == Rat(5));
    CHECK(blocker.y == Rat(2));

    for (const Mcc& m : mccs) check_mcc_invariants(c, m);
}

TEST_CASE("convex chain of the rising corridor clears the upper valley") {
    Corridor c = build_corridor(fx::rise());
    auto mccs = build_mccs(c, SweepDirection::forward);
    REQUIRE(mccs.size() == 1);
    REQUIRE(mccs[0].vertices.size() == 2);
    CHECK(mccs[0].vertices[0].t == Rat(4));
    CHECK(mccs[0].vertices[0].y == Rat(5, 2));
    CHECK(mccs[0].vertices[1].t == Rat(9));
    CHECK(mccs[0].vertices[1].y == Rat(7, 2));
    check_mcc_invariants(c, mccs[0]);

    SUBCASE("backward chain lists vertices in growth order") {
        auto back = build_mccs(c, SweepDirection::backward);
        REQUIRE(back.size() == 1);
        REQUIRE(back[0].vertices.size() == 2);
        CHECK(back[0].vertices[0].t == Rat(9));
        CHECK(back[0].vertices[1].t == Rat(4));
        check_mcc_invariants(c, back[0]);
    }
}

TEST_CASE("per-chain sweep finds the first visible steepest pair") {
    SUBCASE("tent, forward singleton chain") {
        Corridor c = build_corridor(fx::tent());
        auto mccs = build_mccs(c, SweepDirection::forward);
        REQUIRE(mccs.size() == 1);
        auto ps = mcc_min_slope(c, mccs[0]);
        REQUIRE(ps);
        CHECK(ps->lower.t == Rat(3));
        CHECK(ps->upper.t == Rat(6));  // forward span holds only (6,1)
        CHECK(ps->slope == Rat(1, 3));
    }
    SUBCASE("rise, backward chain skips the non-visible anchor pair") {
        Corridor c = build_corridor(fx::rise());
        auto mccs = build_mccs(c, SweepDirection::backward);
        REQUIRE(mccs.size() == 1);
        auto ps = mcc_min_slope(c, mccs[0]);
        REQUIRE(ps);
        CHECK(ps->lower.t == Rat(4));
        CHECK(ps->lower.y == Rat(5, 2));
        CHECK(ps->upper.t == Rat(0));
        CHECK(ps->upper.y == Rat(3, 2));
        CHECK(ps->slope == Rat(1, 4));
    }
    SUBCASE("flat: no overlapping pairs anywhere") {
        Corridor c = build_corridor(fx::flat());
        for (auto dir : {SweepDirection::forward, SweepDirection::backward})
            for (const Mcc& m : build_mccs(c, dir))
                CHECK(!mcc_min_slope(c, m));
    }
}

TEST_CASE("linear solver on the fixtures") {
    CHECK(min_slope_linear(build_corridor(fx::tent())).beta_star == Rat(1, 3));
    CHECK(min_slope_linear(build_corridor(fx::flat())).beta_star == Rat(0));
    CHECK(min_slope_linear(build_corridor(fx::rise())).beta_star == Rat(1, 4));

    SlopeSolution cap = min_slope_linear(build_corridor(fx::cap()));
    CHECK(cap.beta_star == Rat(1, 3));
    REQUIRE(cap.witness);
    CHECK(cap.witness->lower.t == Rat(0));
    CHECK(cap.witness->lower.y == Rat(2));
    CHECK(cap.witness->upper.t == Rat(3));
    CHECK(cap.witness->upper.y == Rat(1));
}

TEST_CASE("linear equals brute force equals the funnel oracle") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        GenConfig cfg;
        cfg.n_segments = 1 + seed % 60;
        cfg.alpha = Rat(1 + static_cast<std::int64_t>(seed % 4), 1 + seed % 2);
        cfg.vertical_budget =
            Rat(1 + static_cast<std::int64_t>(seed % 7), 1 + seed % 3);
        cfg.seed = seed * 1048583 + 11;
        Corridor c = build_corridor(gen_instance(cfg));

        SlopeSolution lin = min_slope_linear(c);
        SlopeSolution bf = min_slope_bruteforce(c);
        CHECK(lin.beta_star == bf.beta_star);
        CHECK(min_slope_oracle(c) == lin.beta_star);

        // shared tie-break: identical witness
        CHECK(lin.witness.has_value() == bf.witness.has_value());
        if (lin.witness && bf.witness) {
            CHECK(lin.witness->lower == bf.witness->lower);
            CHECK(lin.witness->upper == bf.witness->upper);
        }

        // bound and witness validity
        CHECK(lin.beta_star.sign() >= 0);
        CHECK(lin.beta_star < c.alpha);
        if (lin.witness) {
            CHECK(pair_overlaps(lin.witness->lower, lin.witness->upper));
            CHECK(pair_visible(c, lin.witness->lower, lin.witness->upper));
        }

        for (auto dir : {SweepDirection::forward, SweepDirection::backward})
            for (const Mcc& m : build_mccs(c, dir)) check_mcc_invariants(c, m);
    }
}

TEST_CASE("the solved slope is a feasibility threshold") {
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
        GenConfig cfg;
        cfg.n_segments = 2 + seed % 30;
        cfg.vertical_budget = Rat(1 + static_cast<std::int64_t>(seed % 5), 2);
        cfg.seed = seed;
        Corridor c = build_corridor(gen_instance(cfg));
        SlopeSolution sol = min_slope_linear(c);
        CHECK(feasible_slope(c, sol.beta_star));
        if (sol.beta_star.sign() > 0) {
            // the biggest candidate strictly below beta* is infeasible, and
            // so is everything between (midpoint probe)
            Rat below(-1);
            for (const ReflexPoint& l : c.lower_reflex)
                for (const ReflexPoint& u : c.upper_reflex)
                    if (u.y < l.y) {
                        Rat s = pair_slope(l, u);
                        if (s < sol.beta_star && s > below) below = s;
                    }
            if (below.sign() < 0) below = Rat(0);
            CHECK_FALSE(feasible_slope(c, below));
            CHECK_FALSE(
                feasible_slope(c, (below + sol.beta_star) / Rat(2)));
        }
    }
}
