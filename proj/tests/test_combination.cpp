#include "mzv/combination.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mzv;

namespace {
IndexCombination sym(const Index& k) { return IndexCombination::single(k); }
}  // namespace

TEST_CASE("harmonic product of depth-one symbols") {
    IndexCombination p = harmonic_product(sym(Index{2}), sym(Index{3}));
    IndexCombination expected = sym(Index{2, 3}) + sym(Index{3, 2}) + sym(Index{5});
    REQUIRE(p == expected);
    REQUIRE(p.str() == "[2,3]+[3,2]+[5]");
}

TEST_CASE("empty index is the unit") {
    Index k{4, 1, 2};
    REQUIRE(harmonic_product(sym(k), IndexCombination::unit()) == sym(k));
    REQUIRE(harmonic_product(IndexCombination::unit(), sym(k)) == sym(k));
}

TEST_CASE("stuffle multiplicity is counted") {
    IndexCombination p = harmonic_product(sym(Index{1}), sym(Index{1}));
    IndexCombination expected = sym(Index{1, 1}).scaled(Rational(2)) + sym(Index{2});
    REQUIRE(p == expected);
}

TEST_CASE("star expansion") {
    REQUIRE(star_expand(Index{}) == IndexCombination::unit());
    REQUIRE(star_expand(Index{2, 3}) == sym(Index{2, 3}) + sym(Index{5}));
    IndexCombination s111 = star_expand(Index{1, 1, 1});
    REQUIRE(s111 == sym(Index{1, 1, 1}) + sym(Index{2, 1}) + sym(Index{1, 2}) + sym(Index{3}));
}

TEST_CASE("deconcatenation coproduct") {
    TensorCombination d = comultiply(sym(Index{2, 3}));
    TensorCombination expected;
    expected.add_term(Index{}, Index{2, 3}, PolyScalar::one());
    expected.add_term(Index{2}, Index{3}, PolyScalar::one());
    expected.add_term(Index{2, 3}, Index{}, PolyScalar::one());
    REQUIRE(d == expected);

    TensorCombination unit_d = comultiply(IndexCombination::unit());
    TensorCombination unit_expected;
    unit_expected.add_term(Index{}, Index{}, PolyScalar::one());
    REQUIRE(unit_d == unit_expected);
}

TEST_CASE("coproduct is multiplicative on [1]*[1]") {
    IndexCombination one = sym(Index{1});
    REQUIRE(comultiply(harmonic_product(one, one)) == tensor_product(comultiply(one), comultiply(one)));
}

TEST_CASE("antipodes on small symbols") {
    REQUIRE(antipode_S(IndexCombination::unit()) == IndexCombination::unit());
    REQUIRE(antipode_tilde(IndexCombination::unit()) == IndexCombination::unit());
    REQUIRE(antipode_S(sym(Index{2})) == -sym(Index{2}));
    REQUIRE(antipode_S(sym(Index{2, 3})) == sym(Index{3, 2}) + sym(Index{5}));
    REQUIRE(antipode_tilde(sym(Index{2, 3})) == sym(Index{2, 3}) + sym(Index{5}));
}

TEST_CASE("telescoping sum collapses") {
    REQUIRE(telescoping_sum(Index{}) == IndexCombination::unit());
    REQUIRE(telescoping_sum(Index{2}).is_zero());
    REQUIRE(telescoping_sum(Index{1, 2}).is_zero());
}

TEST_CASE("polynomial lift of depth one") {
    IndexCombination lift = poly_lift_xy(Index{2});
    IndexCombination expected = sym(Index{2}).scaled(PolyScalar::monomial_xy(2, 0) + PolyScalar::monomial_xy(0, 2));
    REQUIRE(lift == expected);
    REQUIRE(poly_lift_xy(Index{}) == IndexCombination::unit());
}

TEST_CASE("polynomial lift of depth two") {
    // [k1,k2]_{x,y} = [k2,k1] y^(k1+k2) + ([k1,k2]+[k2,k1]+[k1+k2]) x^(k1) y^(k2) + [k1,k2] x^(k1+k2)
    IndexCombination lift = poly_lift_xy(Index{1, 2});
    IndexCombination expected = sym(Index{2, 1}).scaled(PolyScalar::monomial_xy(0, 3)) +
                                (sym(Index{1, 2}) + sym(Index{2, 1}) + sym(Index{3}))
                                    .scaled(PolyScalar::monomial_xy(1, 2)) +
                                sym(Index{1, 2}).scaled(PolyScalar::monomial_xy(3, 0));
    REQUIRE(lift == expected);
}

TEST_CASE("coefficient extraction by A,B degree") {
    IndexCombination u = sym(Index{2}).scaled(PolyScalar::variable(Var::A) * PolyScalar::variable(Var::B, 2)) +
                         sym(Index{3}).scaled(PolyScalar::variable(Var::A));
    REQUIRE(u.coefficient_of_AB(1, 2) == sym(Index{2}));
    REQUIRE(u.coefficient_of_AB(1, 0) == sym(Index{3}));
    REQUIRE(u.coefficient_of_AB(0, 0).is_zero());
}

TEST_CASE("harmonic product preserves the weight grading") {
    for (int i = 0; i <= 6; ++i) {
        for (const Index& u : enumerate_indices(i)) {
            for (int j = 0; i + j <= 6; ++j) {
                for (const Index& v : enumerate_indices(j)) {
                    IndexCombination p = harmonic_product(sym(u), sym(v));
                    for (const auto& [k, c] : p.terms()) {
                        REQUIRE(k.weight() == i + j);
                        REQUIRE(k.depth() <= u.depth() + v.depth());
                        REQUIRE(k.depth() >= std::max(u.depth(), v.depth()));
                    }
                }
            }
        }
    }
}

TEST_CASE("star expansion has 2^(s-1) summands with multiplicity") {
    for (int w = 1; w <= 8; ++w) {
        for (const Index& k : enumerate_indices(w)) {
            IndexCombination star = star_expand(k);
            Rational total(0);
            for (const auto& [idx, c] : star.terms()) {
                REQUIRE(idx.weight() == w);
                total += c.constant_value();
            }
            REQUIRE(total == rational_pow(Rational(2), k.depth() - 1));
        }
    }
}

TEST_CASE("substitution specializes coefficients") {
    IndexCombination lift = poly_lift_xy(Index{2, 1});
    std::array<std::optional<PolyScalar>, 4> at10 = {PolyScalar::one(), PolyScalar{}, std::nullopt, std::nullopt};
    REQUIRE(lift.substituted(at10) == sym(Index{2, 1}));
}
