#include "mzv/regularized.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mzv;

TEST_CASE("admissible indices are fixed points") {
    const RegularizedZeta& z = regularize(Index{2, 3});
    REQUIRE(z.terms().size() == 1);
    REQUIRE(z.terms().begin()->first == std::make_pair(0, Index{2, 3}));
    REQUIRE(z.terms().begin()->second == Rational(1));
    REQUIRE(z.t_degree() == 0);
}

TEST_CASE("depth one non-admissible value is T") {
    const RegularizedZeta& z = regularize(Index{1});
    RegularizedZeta expected;
    expected.add_term(1, Index{}, Rational(1));
    REQUIRE(z == expected);
}

TEST_CASE("the classical weight-three decomposition") {
    // zeta(2,1) = zeta(2) T - zeta(1,2) - zeta(3)
    const RegularizedZeta& z = regularize(Index{2, 1});
    RegularizedZeta expected;
    expected.add_term(1, Index{2}, Rational(1));
    expected.add_term(0, Index{1, 2}, Rational(-1));
    expected.add_term(0, Index{3}, Rational(-1));
    REQUIRE(z == expected);
}

TEST_CASE("repeated trailing ones divide by the stuffle multiplicity") {
    // zeta(1,1) = (T^2 - zeta(2)) / 2
    const RegularizedZeta& z = regularize(Index{1, 1});
    RegularizedZeta expected;
    expected.add_term(2, Index{}, Rational(1, 2));
    expected.add_term(0, Index{2}, Rational(-1, 2));
    REQUIRE(z == expected);
}

TEST_CASE("every regularized key is admissible") {
    for (int w = 1; w <= 7; ++w) {
        for (const Index& k : enumerate_indices(w)) {
            for (const auto& [key, c] : regularize(k).terms()) {
                REQUIRE(key.second.admissible());
                REQUIRE(key.first + key.second.weight() == w);  // T counts weight 1
            }
        }
    }
}

TEST_CASE("text rendering") {
    REQUIRE(regularize(Index{1}).str() == "T");
    REQUIRE(regularize(Index{2, 1}).str() == "ζ(2)T - ζ(3) - ζ(1,2)");
}
