#include "mzv/antihook.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mzv;

namespace {
IndexCombination sym(const Index& k) { return IndexCombination::single(k); }
}  // namespace

TEST_CASE("empty horizontal row gives plain concatenation") {
    REQUIRE(expand_antihook(AntiHook(Index{1, 3}, Index{}, 2)) == sym(Index{1, 3, 2}));
    REQUIRE(expand_antihook(AntiHook(Index{}, Index{}, 4)) == sym(Index{4}));
}

TEST_CASE("empty vertical row gives the star expansion") {
    REQUIRE(expand_antihook(AntiHook(Index{}, Index{1, 2}, 2)) == star_expand(Index{1, 2, 2}));
    REQUIRE(expand_antihook(AntiHook(Index{}, Index{3}, 2)) == star_expand(Index{3, 2}));
}

TEST_CASE("single hook expands into four terms") {
    IndexCombination h = expand_antihook(AntiHook(Index{2}, Index{3}, 2));
    IndexCombination expected = sym(Index{2, 3, 2}) + sym(Index{3, 2, 2}) + sym(Index{5, 2}) + sym(Index{2, 5});
    REQUIRE(h == expected);
}

TEST_CASE("closed form matches the recursion") {
    REQUIRE(expand_antihook_closed(AntiHook(Index{1, 2}, Index{}, 3)) == sym(Index{1, 2, 3}));
    for (int w = 1; w <= 6; ++w) {
        for (const IndexTriple& t : enumerate_triples(w, 1)) {
            AntiHook h(t.k, t.l, t.corner);
            REQUIRE(expand_antihook(h) == expand_antihook_closed(h));
        }
    }
}

TEST_CASE("two-term compatibility relation") {
    REQUIRE(compatibility_check(Index{2}, Index{3}));
    REQUIRE(compatibility_check(Index{1, 2}, Index{1}));
    REQUIRE_THROWS_AS(compatibility_check(Index{}, Index{1}), std::invalid_argument);
}

TEST_CASE("the overdetermined chain at (1,1,1,2)") {
    // Five equations pin down four unknown symbols; all must expand consistently.
    int k1 = 1, k2 = 1, k3 = 1, k4 = 2;
    auto star_of = [](std::initializer_list<int> parts) { return star_expand(Index(parts)); };

    REQUIRE(expand_antihook(AntiHook(Index{k1, k2, k3}, Index{}, k4)) == sym(Index{k1, k2, k3, k4}));
    REQUIRE(expand_antihook(AntiHook(Index{k1, k2, k3}, Index{}, k4)) +
                expand_antihook(AntiHook(Index{k1, k2}, Index{k4}, k3)) ==
            harmonic_product(sym(Index{k1, k2, k3}), star_of({k4})));
    REQUIRE(expand_antihook(AntiHook(Index{k1, k2}, Index{k4}, k3)) +
                expand_antihook(AntiHook(Index{k1}, Index{k4, k3}, k2)) ==
            harmonic_product(sym(Index{k1, k2}), star_of({k4, k3})));
    REQUIRE(expand_antihook(AntiHook(Index{k1}, Index{k4, k3}, k2)) +
                expand_antihook(AntiHook(Index{}, Index{k4, k3, k2}, k1)) ==
            harmonic_product(sym(Index{k1}), star_of({k4, k3, k2})));
    REQUIRE(expand_antihook(AntiHook(Index{}, Index{k4, k3, k2}, k1)) == star_of({k4, k3, k2, k1}));
}

TEST_CASE("tilde antipode swaps the rows with a sign") {
    REQUIRE(antihook_antipode_check(AntiHook(Index{2}, Index{}, 3)));
    REQUIRE(antihook_antipode_check(AntiHook(Index{}, Index{2}, 3)));
    REQUIRE(antihook_antipode_check(AntiHook(Index{2}, Index{3}, 2)));
    // depth parity: swapping ((k), empty) carries sign (-1)^(1+0+1) = +1
    IndexCombination lhs = antihook_antipode(AntiHook(Index{2}, Index{}, 3));
    REQUIRE(lhs == expand_antihook(AntiHook(Index{}, Index{2}, 3)));
}

TEST_CASE("lemma sides coincide in easy corners") {
    auto [lhs0, rhs0] = lemma_sides(LemmaName::alternating3, Index{1, 2}, 2, Index{});
    REQUIRE(lhs0 == rhs0);
    REQUIRE(rhs0 == sym(Index{1, 2, 2}));

    // k = l = empty: both sides of the key identity are [a](x^a + y^a).
    auto [klhs, krhs] = lemma_sides(LemmaName::key, Index{}, 2, Index{});
    IndexCombination expected = sym(Index{2}).scaled(PolyScalar::monomial_xy(2, 0) + PolyScalar::monomial_xy(0, 2));
    REQUIRE(klhs == expected);
    REQUIRE(krhs == expected);

    auto [k1lhs, k1rhs] = lemma_sides(LemmaName::key, Index{1}, 2, Index{});
    REQUIRE(k1lhs == k1rhs);
    auto [slhs, srhs] = lemma_sides(LemmaName::key_star, Index{1}, 2, Index{1});
    REQUIRE(slhs == srhs);
}

TEST_CASE("lemma name parsing is a closed enumeration") {
    REQUIRE(parse_lemma_name("key_star") == LemmaName::key_star);
    REQUIRE_THROWS_AS(parse_lemma_name("key2"), std::invalid_argument);
}
