#include "mzv/series.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mzv;

using RS = TruncatedSeries<Rational>;

namespace {
RS one_plus_w(int order) {
    RS f = RS::one(order);
    f.set_coeff(1, Rational(1));
    return f;
}
}  // namespace

TEST_CASE("inverse is a two-sided inverse") {
    RS f = one_plus_w(8);
    f.set_coeff(3, Rational(7, 2));
    REQUIRE(f * f.inverse() == RS::one(8));
    REQUIRE(f.inverse() * f == RS::one(8));
}

TEST_CASE("geometric series inverse") {
    RS f = one_plus_w(6);
    RS g = f.inverse();
    for (int n = 0; n <= 6; ++n) REQUIRE(g.coeff(n) == (n % 2 == 0 ? Rational(1) : Rational(-1)));
}

TEST_CASE("exp and log invert each other") {
    RS f = one_plus_w(9);
    REQUIRE(f.log().exp() == f);

    RS g(9);
    g.set_coeff(1, Rational(1, 3));
    g.set_coeff(2, Rational(-2));
    g.set_coeff(5, Rational(11, 7));
    REQUIRE(g.exp().log() == g);
}

TEST_CASE("exp of W has factorial coefficients") {
    RS w(6);
    w.set_coeff(1, Rational(1));
    RS e = w.exp();
    Rational factorial(1);
    for (int n = 0; n <= 6; ++n) {
        if (n > 0) factorial *= n;
        REQUIRE(e.coeff(n) == Rational(1) / factorial);
    }
}

TEST_CASE("domain errors") {
    RS f(4);  // zero constant term
    REQUIRE_THROWS_AS(f.inverse(), std::domain_error);
    REQUIRE_THROWS_AS(one_plus_w(4).exp(), std::domain_error);
    RS two = RS::one(4) + RS::one(4);
    REQUIRE_THROWS_AS(two.log(), std::domain_error);
}

TEST_CASE("scale_variable multiplies by powers") {
    RS f = one_plus_w(4);
    f.set_coeff(2, Rational(5));
    RS g = f.scale_variable(Rational(1, 2));
    REQUIRE(g.coeff(0) == 1);
    REQUIRE(g.coeff(1) == Rational(1, 2));
    REQUIRE(g.coeff(2) == Rational(5, 4));
}

TEST_CASE("z over sin z has the classical rational coefficients") {
    TruncatedSeries<Rational> f = z_over_sin_z_exact(10);
    REQUIRE(f.coeff(0) == Rational(1));
    REQUIRE(f.coeff(1) == Rational(0));
    REQUIRE(f.coeff(2) == Rational(1, 6));
    REQUIRE(f.coeff(4) == Rational(7, 360));
    REQUIRE(f.coeff(6) == Rational(31, 15120));
    REQUIRE(f.coeff(8) == Rational(127, 604800));
    REQUIRE(f.coeff(10) == Rational(73, 3421440));
}

TEST_CASE("series over the index algebra") {
    using IS = TruncatedSeries<IndexCombination>;
    IS f = IS::one(3);
    f.set_coeff(1, IndexCombination::single(Index{1}));
    IS sq = f * f;
    REQUIRE(sq.coeff(0) == IndexCombination::unit());
    REQUIRE(sq.coeff(1) == IndexCombination::single(Index{1}).scaled(Rational(2)));
    // [1]*[1] = 2[1,1] + [2]
    REQUIRE(sq.coeff(2) ==
            IndexCombination::single(Index{1, 1}).scaled(Rational(2)) + IndexCombination::single(Index{2}));
    REQUIRE(f * f.inverse() == IS::one(3));
}
