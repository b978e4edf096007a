#include <catch2/catch_amalgamated.hpp>

#include "wordgraph/canonical.hpp"
#include "wordgraph/families.hpp"

using namespace wordgraph;

TEST_CASE("half graph") {
    Graph h3 = make_family({Family::half_graph, 3});
    CHECK(h3.order() == 6);
    CHECK(h3.edge_count() == 6);  // pairs with i <= j
    // Both sides independent.
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            CHECK_FALSE(h3.adj_labels(i, j));
            CHECK_FALSE(h3.adj_labels(3 + i, 3 + j));
        }
    CHECK(h3.adj_labels(1, 6));
    CHECK_FALSE(h3.adj_labels(3, 4));
}

TEST_CASE("half split family") {
    Graph hs = make_family({Family::half_split, 4});
    // b side is a clique, a side independent, cross edges i <= j.
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            CHECK_FALSE(hs.adj_labels(i, j));
            CHECK(hs.adj_labels(4 + i, 4 + j));
        }
    CHECK(hs.adj_labels(2, 4 + 3));
    CHECK_FALSE(hs.adj_labels(3, 4 + 2));
    // {a_1, b_1} is a module of the half split graph for every n: a_1 sees
    // every b_j, and b_1 sees no a_i beyond a_1.
    for (int n = 2; n <= 8; ++n) {
        Graph g = make_family({Family::half_split, n});
        CHECK(is_module(g, {1, n + 1}));
        CHECK_FALSE(is_prime(g));
    }
}

TEST_CASE("the extension vertex restores primality") {
    for (int n = 3; n <= 8; ++n) {
        CHECK(is_prime(make_family({Family::half_split_I, n})));
        CHECK(is_prime(make_family({Family::half_split_star, n})));
    }
    Graph hi = make_family({Family::half_split_I, 3});
    CHECK(hi.order() == 7);
    for (int i = 1; i <= 3; ++i) CHECK(hi.adj_labels(0, i));
    Graph hstar = make_family({Family::half_split_star, 3});
    CHECK(hstar.adj_labels(0, 1));
    CHECK_FALSE(hstar.adj_labels(0, 2));
}

TEST_CASE("spiders") {
    Graph thin = make_family({Family::thin_spider, 3});
    CHECK(thin.adj_labels(1, 4));
    CHECK_FALSE(thin.adj_labels(1, 5));
    for (int n = 3; n <= 8; ++n)
        CHECK(isomorphic(complement(make_family({Family::thin_spider, n})),
                         make_family({Family::thick_spider, n})));
}

TEST_CASE("star subdivision and the line graph family") {
    Graph star = make_family({Family::star_subdivision, 3});
    CHECK(star.order() == 7);
    CHECK(star.edge_count() == 6);
    CHECK(star.degree(star.index_of(0)) == 3);

    Graph lk = make_family({Family::line_K2n, 3});
    CHECK(lk.order() == 6);
    CHECK(lk.edge_count() == 3 + 3 + 3);  // two triangles and a matching
}

TEST_CASE("primality sweep rows") {
    auto rows = family_primality_sweep(8);
    CHECK(rows.size() == 8 * 6);
    for (auto& row : rows) {
        bool expected = row.family != Family::half_split;
        REQUIRE(row.prime == expected);
    }
    CHECK_THROWS_AS(family_primality_sweep(12), budget_error);
}

TEST_CASE("family parsing") {
    CHECK(parse_family("thin_spider") == Family::thin_spider);
    CHECK(to_string(Family::line_K2n) == "line_K2n");
    CHECK_THROWS_AS(parse_family("nope"), std::invalid_argument);
    CHECK_THROWS_AS(make_family({Family::half_graph, 0}), std::invalid_argument);
}
