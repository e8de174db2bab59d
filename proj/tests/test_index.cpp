#include "mzv/index.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace mzv;

TEST_CASE("parse accepts comma separated parts") {
    Index k = Index::parse("2,3");
    REQUIRE(k.parts() == std::vector<int>{2, 3});
    REQUIRE(k.weight() == 5);
    REQUIRE(k.depth() == 2);
    REQUIRE(Index::parse(" 2 , 3 ") == k);
    REQUIRE(Index::parse("") == Index{});
    REQUIRE(Index::parse("  ") == Index{});
}

TEST_CASE("parse rejects bad components") {
    REQUIRE_THROWS_AS(Index::parse("0,2"), std::invalid_argument);
    REQUIRE_THROWS_AS(Index::parse("-1"), std::invalid_argument);
    REQUIRE_THROWS_AS(Index::parse("2,,3"), std::invalid_argument);
    REQUIRE_THROWS_AS(Index::parse("a"), std::invalid_argument);
    REQUIRE_THROWS_AS(Index::parse("2000000"), std::invalid_argument);
}

TEST_CASE("admissibility") {
    REQUIRE(Index{}.admissible());
    REQUIRE(Index{1, 2}.admissible());
    REQUIRE_FALSE(Index{2, 1}.admissible());
}

TEST_CASE("weight and depth of the empty index") {
    REQUIRE(Index{}.weight() == 0);
    REQUIRE(Index{}.depth() == 0);
}

TEST_CASE("slice, reverse, ones") {
    Index k{1, 2, 3};
    REQUIRE(k.slice(0, 2) == Index{1, 2});
    REQUIRE(k.slice(1, 3) == Index{2, 3});
    for (int i = 0; i <= k.depth(); ++i) REQUIRE(k.slice(i, i) == Index{});
    REQUIRE(k.slice(0, k.depth()) == k);
    REQUIRE(k.reversed() == Index{3, 2, 1});
    REQUIRE(k.reversed().reversed() == k);
    REQUIRE_THROWS_AS(k.slice(2, 1), std::out_of_range);
    REQUIRE_THROWS_AS(k.slice(0, 4), std::out_of_range);
    REQUIRE(Index::ones(3) == Index{1, 1, 1});
    REQUIRE(Index::ones(0) == Index{});
    REQUIRE(Index::ones(4).weight() == 4);
    REQUIRE(Index::ones(4).depth() == 4);
}

TEST_CASE("prefix and suffix recompose") {
    Index k{2, 1, 4, 1};
    for (int i = 0; i <= k.depth(); ++i) REQUIRE(k.prefix(i).concat(k.suffix(i)) == k);
}

TEST_CASE("enumeration of fixed weight") {
    auto w0 = enumerate_indices(0);
    REQUIRE(w0 == std::vector<Index>{Index{}});

    auto w3 = enumerate_indices(3);
    REQUIRE(w3 == std::vector<Index>{Index{1, 1, 1}, Index{1, 2}, Index{2, 1}, Index{3}});

    REQUIRE(enumerate_indices(5).size() == 16);
    for (int w = 1; w <= 9; ++w) {
        auto all = enumerate_indices(w);
        REQUIRE(all.size() == (size_t{1} << (w - 1)));
        std::set<Index> unique(all.begin(), all.end());
        REQUIRE(unique.size() == all.size());
        for (const Index& k : all) REQUIRE(k.weight() == w);
        REQUIRE(std::is_sorted(all.begin(), all.end()));
    }
}

TEST_CASE("triple enumeration respects corner bound") {
    auto triples = enumerate_triples(3);
    REQUIRE(triples.size() == 3);  // (;;3), ((1);;2), (;(1);2)
    for (const auto& t : triples) {
        REQUIRE(t.corner >= 2);
        REQUIRE(t.k.weight() + t.corner + t.l.weight() == 3);
    }
    REQUIRE(enumerate_triples(3, 1).size() == 3 + 5);  // corner 1 adds the weight-2 pairs
}
