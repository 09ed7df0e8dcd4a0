#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace lexplus;

TEST_CASE("two-variable profiles") {
    DegreeSequence cubes({3, 3}, 2);
    CHECK(two_var_profile(pure_powers_ideal(cubes), cubes).offsets == std::vector<int>{3, 3, 3});
    CHECK(two_var_profile(parse_ideal("x1^2, x1*x2, x2^3", 2), cubes).offsets ==
          std::vector<int>{2, 1, 1});
    CHECK(two_var_profile(MonomialIdeal::unit(2), cubes).offsets == std::vector<int>{0, 0, 0});

    // reassembly reproduces the ideal
    for (const auto& ideal : oracles::all_two_var_ideals(cubes))
        CHECK(two_var_reassemble(two_var_profile(ideal, cubes), cubes) == ideal);
}

TEST_CASE("two-variable links") {
    DegreeSequence cubes({3, 3}, 2);
    MonomialIdeal sample = parse_ideal("x1^2, x1*x2, x2^3", 2);
    MonomialIdeal linked = two_var_link(sample, cubes);
    CHECK(format_ideal(linked) == "x1^2, x1*x2^2, x2^3");
    CHECK(oracles::colon_agrees_bruteforce(pure_powers_ideal(cubes), sample, 6));

    CHECK(two_var_link(pure_powers_ideal(cubes), cubes).is_unit());  // (a : a) = A

    // closed form = colon, involution, spp preservation: exhaustive
    for (const auto& ideal : oracles::all_two_var_ideals(cubes)) {
        MonomialIdeal closed = two_var_link(ideal, cubes);
        CHECK(closed == ideal_colon(pure_powers_ideal(cubes), ideal));
        CHECK(two_var_link(closed, cubes) == ideal);
        if (two_var_profile(ideal, cubes).is_spp())
            CHECK(two_var_profile(closed, cubes).is_spp());
    }
}

TEST_CASE("general links against the pure powers") {
    DegreeSequence cubes({3, 3}, 2);
    for (const auto& ideal : oracles::all_two_var_ideals(cubes))
        if (ideal.max_gen_degree() <= 4)
            CHECK(link(ideal, cubes) == two_var_link(ideal, cubes));

    CHECK(link(pure_powers_ideal(cubes), cubes).is_unit());

    DegreeSequence squares({2, 2}, 2);
    CHECK(link(MonomialIdeal::maximal(2), squares) == parse_ideal("x1^2, x1*x2, x2^2", 2));

    CHECK_THROWS_AS(link(parse_ideal("x1^2", 2), DegreeSequence({2}, 2)), error);
}

TEST_CASE("Hilbert function duality across the socle degree") {
    DegreeSequence cubes({3, 3}, 2);
    CHECK(duality_check(pure_powers_ideal(cubes), cubes));
    for (const auto& ideal : oracles::all_two_var_ideals(cubes))
        CHECK(duality_check(ideal, cubes));

    DegreeSequence c3({3, 3, 3}, 3);
    CHECK(duality_check(parse_ideal("x1^3, x1^2*x2, x2^3, x3^3", 3), c3));
    CHECK(duality_check(parse_ideal("x1^3, x2^3, x3^3, x1*x2*x3", 3), c3));
}

TEST_CASE("socle type and the generator count of the link") {
    DegreeSequence squares({2, 2}, 2);
    CHECK(socle_type(pure_powers_ideal(squares), squares) == 1);  // Gorenstein
    CHECK(link_mu(pure_powers_ideal(squares), squares) == 1);     // the unit class

    CHECK(socle_type(MonomialIdeal::maximal(2), squares) == 1);
    CHECK(link_mu(MonomialIdeal::maximal(2), squares) == 1);
    CHECK(link(MonomialIdeal::maximal(2), squares) == parse_ideal("x1*x2, x1^2, x2^2", 2));

    DegreeSequence cubes({3, 3}, 2);
    for (const auto& ideal : oracles::all_two_var_ideals(cubes))
        CHECK(link_mu_check(ideal, cubes));

    // almost complete intersections link to Gorenstein quotients
    DegreeSequence c3({3, 3, 3}, 3);
    MonomialIdeal extremal = francisco_ideal(c3, 3);
    CHECK(socle_type(link(extremal, c3), c3) == 1);
    CHECK(link_mu_check(extremal, c3));
}

TEST_CASE("duality and involution on random three-variable ideals") {
    DegreeSequence c3({3, 3, 3}, 3);
    std::mt19937 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        MonomialIdeal ideal = oracles::random_ideal(c3, 4, rng);
        CHECK(link(link(ideal, c3), c3) == ideal);
        CHECK(duality_check(ideal, c3));
        CHECK(link_mu_check(ideal, c3));
    }
}
