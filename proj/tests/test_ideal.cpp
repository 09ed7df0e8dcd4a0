#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace lexplus;

TEST_CASE("generators are minimalized eagerly") {
    MonomialIdeal ideal = parse_ideal("x1^2, x1^3, x1*x2, x1^2*x2^2", 2);
    CHECK(format_ideal(ideal) == "x1^2, x1*x2");
    CHECK(MonomialIdeal::unit(3).is_unit());
    CHECK(MonomialIdeal::zero(3).is_zero());
    CHECK(format_ideal(parse_ideal("x2^2, x1*x2, x1^2", 2)) == "x1^2, x1*x2, x2^2");
}

TEST_CASE("graded pieces of ideals") {
    MonomialIdeal ideal = parse_ideal("x1*x2, x1^2, x2^2, x3^2, x4^2", 4);
    GradedPiece p2 = ideal.piece(2);
    CHECK(p2.dim() == 5);
    CHECK(p2.contains(Monomial({1, 1, 0, 0})));
    CHECK(p2.contains(Monomial({0, 0, 2, 0})));
    CHECK_FALSE(p2.contains(Monomial({1, 0, 1, 0})));

    for (int d = 0; d <= 3; ++d)
        CHECK(MonomialIdeal::unit(3).piece(d).is_full());

    MonomialIdeal cubes = parse_ideal("x1^3, x2^3", 2);
    GradedPiece p4 = cubes.piece(4);
    CHECK(p4.dim() == 4);
    CHECK(p4 == GradedPiece(2, 4, {Monomial({4, 0}), Monomial({3, 1}), Monomial({1, 3}),
                                   Monomial({0, 4})}));
}

TEST_CASE("Hilbert functions of quotients") {
    MonomialIdeal ideal = parse_ideal("x1*x2, x1^2, x2^2, x3^2, x4^2", 4);
    CHECK(hilbert_function(ideal, 4).values == std::vector<long long>{1, 4, 5, 2, 0});

    CHECK(hilbert_function(MonomialIdeal::maximal(3), 2).values == std::vector<long long>{1, 0, 0});

    // count degree-3 monomials outside the ideal by raw enumeration
    MonomialIdeal partial = parse_ideal("x1^2, x1*x2, x1*x3, x2^2, x2*x3", 4);
    std::vector<std::vector<int>> gens;
    for (const auto& g : partial.gens()) gens.push_back(g.exponents());
    long long outside = 0;
    for (const auto& e : oracles::exponent_vectors(4, 3))
        if (!oracles::divides_any(gens, e)) ++outside;
    HilbertFunction h = hilbert_function(partial, 3);
    CHECK(h.values[0] == 1);
    CHECK(h.values[1] == 4);
    CHECK(h.values[2] == 5);
    CHECK(h.values[3] == outside);

    // default window needs Artinian input
    CHECK_THROWS_AS(hilbert_function(partial), error);
}

TEST_CASE("containment is monotone for Hilbert functions") {
    std::mt19937 rng(23);
    DegreeSequence degs({2, 2, 2}, 3);
    for (int trial = 0; trial < 40; ++trial) {
        MonomialIdeal small = oracles::random_ideal(degs, 3, rng);
        MonomialIdeal big = oracles::random_ideal(degs, 3, rng);
        MonomialIdeal join = sum(small, big);  // contains small
        HilbertFunction hs = hilbert_function(small, 5), hj = hilbert_function(join, 5);
        for (int d = 0; d <= 5; ++d) CHECK(hs.at(d) >= hj.at(d));
    }
}

TEST_CASE("ideal colon") {
    MonomialIdeal cubes = parse_ideal("x1^3, x2^3", 2);
    MonomialIdeal inner = parse_ideal("x1^2, x1*x2, x2^3", 2);
    MonomialIdeal quotient = ideal_colon(cubes, inner);
    CHECK(format_ideal(quotient) == "x1^2, x1*x2^2, x2^3");
    CHECK(oracles::colon_agrees_bruteforce(cubes, inner, 6));

    CHECK(ideal_colon(cubes, MonomialIdeal::unit(2)) == cubes);
    CHECK(ideal_colon(cubes, cubes).is_unit());
    CHECK(ideal_colon(cubes, MonomialIdeal::zero(2)).is_unit());
}

TEST_CASE("colon agrees with brute force on an exhaustive two-variable family") {
    auto family = oracles::all_two_var_ideals(DegreeSequence({3, 3}, 2));
    for (const auto& j : family)
        for (const auto& i : family)
            REQUIRE(oracles::colon_agrees_bruteforce(j, i, 5));
}

TEST_CASE("colon agrees with brute force on random three-variable pairs") {
    std::mt19937 rng(5);
    DegreeSequence degs({2, 3, 4}, 3);
    for (int trial = 0; trial < 120; ++trial) {
        MonomialIdeal j = oracles::random_ideal(degs, 4, rng);
        MonomialIdeal i = oracles::random_ideal(degs, 4, rng);
        REQUIRE(oracles::colon_agrees_bruteforce(j, i, 5));
    }
}

TEST_CASE("multiply_piece") {
    GradedPiece single(2, 2, {Monomial({2, 0})});
    CHECK(single.multiply() == GradedPiece(2, 3, {Monomial({3, 0}), Monomial({2, 1})}));
    CHECK(GradedPiece(2, 1).multiply() == GradedPiece(2, 2));
    GradedPiece squares(2, 2, {Monomial({2, 0}), Monomial({0, 2})});
    CHECK(squares.multiply().is_full());

    // pieces of an ideal absorb multiplication
    std::mt19937 rng(31);
    DegreeSequence degs({2, 2}, 3);
    for (int trial = 0; trial < 25; ++trial) {
        MonomialIdeal ideal = oracles::random_ideal(degs, 3, rng);
        for (int d = 0; d <= 4; ++d)
            CHECK(ideal.piece(d + 1).contains_piece(ideal.piece(d).multiply()));
    }
}

TEST_CASE("multiplicity of Artinian quotients") {
    CHECK(multiplicity(parse_ideal("x1^3, x1^2*x2, x2^3, x3^3", 3)) == 21);
    CHECK(multiplicity(MonomialIdeal::maximal(3)) == 1);
    CHECK(multiplicity(parse_ideal("x1^3, x2^3, x3^3", 3)) == 27);
    CHECK_THROWS_WITH(multiplicity(parse_ideal("x1^2, x1*x2", 2)),
                      Catch::Matchers::ContainsSubstring("multiplicity infinite"));

    // complete intersections multiply out
    for (int a1 = 1; a1 <= 3; ++a1)
        for (int a2 = a1; a2 <= 3; ++a2)
            for (int a3 = a2; a3 <= 3; ++a3) {
                DegreeSequence degs({a1, a2, a3}, 3);
                CHECK(multiplicity(pure_powers_ideal(degs)) == a1 * a2 * a3);
            }
}

TEST_CASE("ideal text parsing") {
    CHECK(parse_ideal("", 2).is_zero());
    CHECK(parse_ideal("x1^2,\nx2^2", 2) == parse_ideal("x1^2, x2^2", 2));
    CHECK_THROWS_AS(parse_ideal("x1^2, y2", 2), parse_error);
    try {
        parse_ideal("x1^2, y2", 2);
    } catch (const parse_error& e) {
        CHECK(e.offset() == 6);  // offset into the whole ideal text
    }
    // formatted output reparses to an equal ideal
    std::mt19937 rng(13);
    DegreeSequence degs({2, 2, 2}, 3);
    for (int trial = 0; trial < 30; ++trial) {
        MonomialIdeal ideal = oracles::random_ideal(degs, 3, rng);
        CHECK(parse_ideal(format_ideal(ideal), 3) == ideal);
    }
}
