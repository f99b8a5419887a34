#include "doctest.h"

#include "unigraph/density.hpp"
#include "unigraph/generators.hpp"

using namespace unigraph;

TEST_CASE("gen_union_unicyclic") {
    CHECK(gen_union_unicyclic(0, 2, 1).n == 0);

    Graph one = gen_union_unicyclic(80, 1, 7);
    // every component of a functional graph has at most one cycle
    int nc = 0;
    std::vector<int> comp = component_ids(one, &nc);
    std::vector<int> vc(nc, 0), ec(nc, 0);
    for (int v = 0; v < one.n; ++v) ++vc[comp[v]];
    for (auto [u, v] : one.edges) ++ec[comp[u]], (void)v;
    for (int c = 0; c < nc; ++c) CHECK(ec[c] <= vc[c]);

    Graph two = gen_union_unicyclic(200, 2, 9);
    CHECK(density(two).density <= Rational(2));
}

TEST_CASE("gen_lift") {
    Graph tri = from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    Graph lift9 = gen_lift(tri, 9, 3);
    CHECK(lift9.n == 9);
    CHECK(lift9.e() == 9);
    for (int v = 0; v < 9; ++v) CHECK(lift9.degree(v) == 2);
    CHECK(density(lift9).density == Rational(1));

    Graph k4 = from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Graph lift8 = gen_lift(k4, 8, 5);
    CHECK(lift8.n == 8);
    CHECK(lift8.e() == 12);
    for (int v = 0; v < 8; ++v) CHECK(lift8.degree(v) == 3);
    CHECK(density(lift8).density == Rational(3, 2));

    CHECK_THROWS_AS(gen_lift(k4, 10, 1), std::invalid_argument);
}

TEST_CASE("lift density equals base density") {
    Graph tri = from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    Graph k4 = from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    for (int n = 12; n <= 48; n += 12) {
        CHECK(density(gen_lift(tri, n, n)).density == Rational(1));
        CHECK(density(gen_lift(k4, n, n + 1)).density == Rational(3, 2));
    }
}

TEST_CASE("find_balanced") {
    Graph t = find_balanced(1, 1, 5);
    CHECK(t.n == 3);
    CHECK(t.e() == 3);

    Graph k4 = find_balanced(3, 2, 6);
    CHECK(k4.n == 4);
    CHECK(k4.e() == 6);
    CHECK(is_balanced(k4));
    CHECK(Rational(k4.e(), k4.n) == Rational(3, 2));

    Graph k5 = find_balanced(2, 1, 8);
    CHECK(k5.n == 5);
    CHECK(k5.e() == 10);

    CHECK_THROWS(find_balanced(5, 1, 5));  // K11 does not fit in 5 vertices
}

TEST_CASE("gen_bounded_degree") {
    Graph g = gen_bounded_degree(500, 2, 4, 11);
    CHECK(g.max_degree() <= 4);
    CHECK(density(g).density <= Rational(2));

    Graph paths = gen_bounded_degree(100, 1, 2, 13);
    CHECK(paths.max_degree() <= 2);

    CHECK(gen_bounded_degree(0, 2, 4, 1).n == 0);
    CHECK_THROWS_AS(gen_bounded_degree(10, 0, 4, 1), std::invalid_argument);
}
