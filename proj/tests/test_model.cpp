#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "tetherplan/errors.hpp"
#include "tetherplan/generator.hpp"

using namespace tetherplan;
namespace fx = tetherplan::fixtures;

TEST_CASE("instance validation rejects bad trajectories") {
    CHECK_THROWS_AS(
        fx::make("1", "1", {{"0", "0"}, {"3", "2"}}).validate(),
        SpeedMismatch);
    CHECK_THROWS_AS(
        fx::make("1", "1", {{"0", "0"}, {"2", "2"}, {"4", "4"}}).validate(),
        NonAlternating);
    CHECK_THROWS_AS(
        fx::make("1", "1", {{"0", "0"}, {"0", "0"}}).validate(),
        NonMonotoneTime);
    CHECK_THROWS_AS(
        fx::make("1", "1", {{"3", "0"}, {"1", "2"}}).validate(),
        NonMonotoneTime);
    CHECK_THROWS_AS(fx::make("1", "1", {{"0", "0"}}).validate(), InvalidConfig);
    CHECK_THROWS_AS(fx::make("0", "1", {{"0", "0"}, {"1", "0"}}).validate(),
                    InvalidConfig);
}

TEST_CASE("corridor is the vertical translation by the budget") {
    Corridor c = build_corridor(fx::tent());
    REQUIRE(c.size() == 3);
    CHECK(c.lower_y == std::vector<Rat>{Rat(-1), Rat(2), Rat(-1)});
    CHECK(c.upper_y == std::vector<Rat>{Rat(1), Rat(4), Rat(1)});
    CHECK(c.budget == Rat(1));
}

TEST_CASE("corridor width is exactly twice the budget at every vertex") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        GenConfig cfg;
        cfg.n_segments = 1 + seed % 37;
        cfg.alpha = Rat(3, 2);
        cfg.vertical_budget = Rat(5, 4);
        cfg.seed = seed;
        Corridor c = build_corridor(gen_instance(cfg));
        for (std::size_t i = 0; i < c.size(); ++i)
            CHECK(c.upper_y[i] - c.lower_y[i] == Rat(2) * c.budget);
    }
}

TEST_CASE("reflex classification") {
    SUBCASE("tent: interior peak, two endpoint valleys") {
        Corridor c = build_corridor(fx::tent());
        REQUIRE(c.lower_reflex.size() == 1);
        CHECK(c.lower_reflex[0].t == Rat(3));
        CHECK(c.lower_reflex[0].y == Rat(2));
        REQUIRE(c.upper_reflex.size() == 2);
        CHECK(c.upper_reflex[0].t == Rat(0));
        CHECK(c.upper_reflex[0].y == Rat(1));
        CHECK(c.upper_reflex[1].t == Rat(6));
        CHECK(c.upper_reflex[1].y == Rat(1));
    }
    SUBCASE("w-shaped corridor") {
        Corridor c = build_corridor(fx::w());
        REQUIRE(c.lower_reflex.size() == 2);
        CHECK(c.lower_reflex[0].t == Rat(3));
        CHECK(c.lower_reflex[0].y == Rat(2));
        CHECK(c.lower_reflex[1].t == Rat(8));
        CHECK(c.lower_reflex[1].y == Rat(3));
        REQUIRE(c.upper_reflex.size() == 3);
        CHECK(c.upper_reflex[0].t == Rat(0));
        CHECK(c.upper_reflex[1].t == Rat(5));
        CHECK(c.upper_reflex[1].y == Rat(2));
        CHECK(c.upper_reflex[2].t == Rat(10));
        CHECK(c.upper_reflex[2].y == Rat(3));
    }
    SUBCASE("cap: endpoint one-sided maxima become lower reflex points") {
        Corridor c = build_corridor(fx::cap());
        REQUIRE(c.lower_reflex.size() == 2);
        CHECK(c.lower_reflex[0].t == Rat(0));
        CHECK(c.lower_reflex[0].y == Rat(2));
        CHECK(c.lower_reflex[1].t == Rat(6));
        CHECK(c.lower_reflex[1].y == Rat(2));
        REQUIRE(c.upper_reflex.size() == 1);
        CHECK(c.upper_reflex[0].t == Rat(3));
        CHECK(c.upper_reflex[0].y == Rat(1));
    }
}

TEST_CASE("every interior vertex is a local extremum of its chain") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        GenConfig cfg;
        cfg.n_segments = 2 + seed % 31;
        cfg.seed = seed;
        Corridor c = build_corridor(gen_instance(cfg));
        std::size_t extrema = 0;
        for (std::size_t i = 1; i + 1 < c.size(); ++i) {
            bool peak = c.lower_y[i] > c.lower_y[i - 1] &&
                        c.lower_y[i] > c.lower_y[i + 1];
            bool valley = c.lower_y[i] < c.lower_y[i - 1] &&
                          c.lower_y[i] < c.lower_y[i + 1];
            if (peak || valley) ++extrema;
        }
        CHECK(extrema == c.size() - 2);
    }
}

TEST_CASE("instance JSON round-trips byte-exactly") {
    const std::string wire =
        R"({"alpha":"1","vertical_budget":"1",)"
        R"("turns":[["0","0"],["3","3"],["6","0"]]})"
        "\n";
    Instance inst = parse_instance(wire);
    CHECK(serialize_instance(inst) == wire);
    CHECK(inst == fx::tent());

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        GenConfig cfg;
        cfg.n_segments = 1 + seed;
        cfg.alpha = Rat(2, 3);
        cfg.vertical_budget = Rat(7, 5);
        cfg.seed = seed;
        Instance gen = gen_instance(cfg);
        std::string bytes = serialize_instance(gen);
        CHECK(serialize_instance(parse_instance(bytes)) == bytes);
    }
}

TEST_CASE("instance JSON accepts tether geometry in place of a budget") {
    Instance inst = parse_instance(
        R"({"alpha":"1","tether_length":"5","line_separation":"3",)"
        R"("turns":[["0","0"],["3","3"],["6","0"]]})");
    CHECK(inst.vertical_budget == Rat(4));

    CHECK_THROWS_AS(
        parse_instance(
            R"({"alpha":"1","tether_length":"2","line_separation":"1",)"
            R"("turns":[["0","0"],["3","3"],["6","0"]]})"),
        IrrationalBudget);
    CHECK_THROWS_AS(
        parse_instance(
            R"({"alpha":"1","tether_length":"1","line_separation":"2",)"
            R"("turns":[["0","0"],["3","3"],["6","0"]]})"),
        TetherTooShort);
}

TEST_CASE("instance JSON parse errors") {
    CHECK_THROWS_AS(parse_instance("not json"), ParseError);
    CHECK_THROWS_AS(parse_instance("{}"), ParseError);
    CHECK_THROWS_AS(
        parse_instance(R"({"alpha":"1","vertical_budget":"1","turns":[["0"]]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_instance(
            R"({"alpha":1.5,"vertical_budget":"1","turns":[["0","0"],["1","1"]]})"),
        ParseError);
}

TEST_CASE("scaled fast lane activates for integer-friendly corridors") {
    CHECK(build_corridor(fx::tent()).has_scaled);
    CHECK(build_corridor(fx::rise()).has_scaled);
    // giant coordinates fall back to the exact lane
    Instance big = fx::make("1", "1",
                            {{"0", "0"}, {"36893488147419103232", "36893488147419103232"}});
    CHECK_FALSE(build_corridor(big).has_scaled);
}
