#include "doctest.h"

#include "unigraph/density.hpp"
#include <functional>
#include "unigraph/prng.hpp"

using namespace unigraph;

namespace {

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return from_edge_list(n, es);
}

Graph clique(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return from_edge_list(n, es);
}

// Independent oracle: plain recursion over all nonempty vertex subsets,
// counting edges from the edge list.
Rational brute_density(const Graph& g) {
    Rational best(0);
    std::vector<int> subset;
    auto count_edges = [&](const std::vector<int>& s) {
        std::vector<char> in(g.n, 0);
        for (int v : s) in[v] = 1;
        std::int64_t e = 0;
        for (auto [u, v] : g.edges) e += in[u] && in[v];
        return e;
    };
    std::function<void(int)> rec = [&](int v) {
        if (v == g.n) {
            if (!subset.empty()) {
                Rational r(count_edges(subset), static_cast<long long>(subset.size()));
                if (r > best) best = r;
            }
            return;
        }
        rec(v + 1);
        subset.push_back(v);
        rec(v + 1);
        subset.pop_back();
    };
    rec(0);
    return best;
}

}  // namespace

TEST_CASE("density examples") {
    DensityReport c5 = density(cycle_graph(5));
    CHECK(c5.density == Rational(1));
    CHECK(c5.witness.size() == 5);

    CHECK(density(clique(4)).density == Rational(3, 2));

    Graph bowtie = from_edge_list(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    CHECK(density(bowtie).density == Rational(6, 5));

    CHECK(density(from_edge_list(2, {{0, 1}})).density == Rational(1, 2));

    Graph edgeless = from_edge_list(3, {});
    DensityReport rep = density(edgeless);
    CHECK(rep.density == Rational(0));
    CHECK(rep.witness.size() == 1);

    CHECK_THROWS_AS(density(from_edge_list(0, {})), std::invalid_argument);
}

TEST_CASE("is_balanced") {
    CHECK(is_balanced(clique(4)));
    Graph tri_plus = from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_FALSE(is_balanced(tri_plus));
    Graph p3 = from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK(is_balanced(p3));
}

TEST_CASE("density oracle equivalence on small graphs, both routes") {
    Rng rng(2024);
    for (int it = 0; it < 80; ++it) {
        int n = 2 + static_cast<int>(rng_below(rng, 9));
        int e = static_cast<int>(rng_below(rng, 2 * n + 1));
        std::vector<std::pair<int, int>> es;
        for (int k = 0; k < e; ++k) {
            int u = static_cast<int>(rng_below(rng, n));
            int v = static_cast<int>(rng_below(rng, n));
            if (u != v) es.emplace_back(u, v);
        }
        Graph g = from_edge_list(n, es);
        Rational expected = brute_density(g);
        DensityReport a = density(g, DensityMethod::exhaustive);
        CHECK(a.density == expected);
        if (g.e() > 0) {
            DensityReport f = density(g, DensityMethod::flow);
            CHECK(f.density == expected);
            // witness achieves the density
            Graph w = induced(g, f.witness);
            CHECK(Rational(w.e(), w.n) == expected);
        }
        Graph wa = induced(g, a.witness);
        if (g.e() > 0) CHECK(Rational(wa.e(), wa.n) == expected);
    }
}

TEST_CASE("density monotone under induced subgraphs") {
    Rng rng(5);
    for (int it = 0; it < 20; ++it) {
        int n = 4 + static_cast<int>(rng_below(rng, 6));
        std::vector<std::pair<int, int>> es;
        for (int k = 0; k < 2 * n; ++k) {
            int u = static_cast<int>(rng_below(rng, n));
            int v = static_cast<int>(rng_below(rng, n));
            if (u != v) es.emplace_back(u, v);
        }
        Graph g = from_edge_list(n, es);
        std::vector<int> sub;
        for (int v = 0; v < n; ++v)
            if (rng_below(rng, 2)) sub.push_back(v);
        if (sub.empty()) continue;
        CHECK(density(induced(g, sub)).density <= density(g).density);
    }
}

TEST_CASE("density flow route on a larger graph") {
    // 40-vertex graph: two K5 blocks joined by a path; densest piece is a K5.
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            es.emplace_back(i, j);
            es.emplace_back(30 + i, 30 + j);
        }
    for (int i = 4; i < 30; ++i) es.emplace_back(i, i + 1);
    Graph g = from_edge_list(40, es);
    DensityReport rep = density(g);
    CHECK(rep.density == Rational(2));
    Graph w = induced(g, rep.witness);
    CHECK(Rational(w.e(), w.n) == Rational(2));
}
