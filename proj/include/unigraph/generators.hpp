#pragma once

// Guest generators: unions of random functional layers (density <= d by
// construction), random lifts of balanced graphs, degree-capped variants, and
// a small exhaustive search for balanced base graphs.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "density.hpp"
#include "graph.hpp"
#include "prng.hpp"

namespace unigraph {

// Union of d functional graphs: every vertex draws one random out-neighbor
// per layer. Any vertex subset U spans at most d|U| edges, so density <= d.
inline Graph gen_union_unicyclic(int n, int d, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("gen_union_unicyclic: d must be >= 1");
    if (n <= 1) return from_edge_list(std::max(n, 0), {});
    Rng rng(seed);
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>(n) * d);
    for (int layer = 0; layer < d; ++layer)
        for (int v = 0; v < n; ++v) {
            int u = static_cast<int>(rng_below(rng, n - 1));
            if (u >= v) ++u;
            es.emplace_back(v, u);
        }
    return from_edge_list(n, es);
}

struct LiftSpec {
    Graph base;
    int n = 0;
    std::vector<std::vector<int>> matchings;  // one permutation of [n/v(F)] per base edge
};

inline LiftSpec make_lift_spec(const Graph& f, int n, std::uint64_t seed) {
    if (f.n < 1) throw std::invalid_argument("gen_lift: empty base graph");
    if (n < 1 || n % f.n != 0)
        throw std::invalid_argument("gen_lift: n must be a positive multiple of v(F)");
    LiftSpec spec;
    spec.base = f;
    spec.n = n;
    int s = n / f.n;
    Rng rng(seed);
    spec.matchings.reserve(f.edges.size());
    for (std::size_t e = 0; e < f.edges.size(); ++e) {
        std::vector<int> perm(s);
        for (int i = 0; i < s; ++i) perm[i] = i;
        rng_shuffle(rng, perm);
        spec.matchings.push_back(std::move(perm));
    }
    return spec;
}

inline Graph lift_graph(const LiftSpec& spec) {
    int s = spec.n / spec.base.n;
    std::vector<std::pair<int, int>> es;
    es.reserve(spec.base.edges.size() * s);
    for (std::size_t e = 0; e < spec.base.edges.size(); ++e) {
        auto [i, j] = spec.base.edges[e];
        for (int x = 0; x < s; ++x) es.emplace_back(i * s + x, j * s + spec.matchings[e][x]);
    }
    return from_edge_list(spec.n, es);
}

// Blow each base vertex into a class of n/v(F) vertices and replace each base
// edge by a random perfect matching between the classes.
inline Graph gen_lift(const Graph& f, int n, std::uint64_t seed) {
    return lift_graph(make_lift_spec(f, n, seed));
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return from_edge_list(n, es);
}

// Smallest balanced graph with e(F)/v(F) = a/b and at most max_v vertices.
// Integer ratios use the K_{2d+1} shortcut; otherwise edge subsets are
// enumerated in increasing vertex count and checked against the exact oracle.
inline Graph find_balanced(int a, int b, int max_v) {
    if (a < b || b < 1) throw std::invalid_argument("find_balanced: need a >= b >= 1");
    if (a % b == 0) {
        int d = a / b;
        if (2 * d + 1 <= max_v) return complete_graph(2 * d + 1);
    }
    for (int v = 1; v <= max_v; ++v) {
        if (static_cast<long long>(a) * v % b != 0) continue;
        long long e = static_cast<long long>(a) * v / b;
        long long max_e = static_cast<long long>(v) * (v - 1) / 2;
        if (e < 1 || e > max_e) continue;
        // enumerate e-subsets of the v-clique edge list
        std::vector<std::pair<int, int>> all;
        for (int i = 0; i < v; ++i)
            for (int j = i + 1; j < v; ++j) all.emplace_back(i, j);
        std::vector<int> pick(e);
        for (long long i = 0; i < e; ++i) pick[i] = static_cast<int>(i);
        long long budget = 5'000'000;
        while (true) {
            if (--budget < 0)
                throw std::runtime_error("find_balanced: enumeration budget exceeded at v = " +
                                         std::to_string(v));
            std::vector<std::pair<int, int>> es;
            es.reserve(e);
            for (int p : pick) es.push_back(all[p]);
            Graph g = from_edge_list(v, es);
            int nc = 0;
            component_ids(g, &nc);
            if (nc == 1 && is_balanced(g)) return g;
            // next combination
            int i = static_cast<int>(e) - 1;
            while (i >= 0 && pick[i] == static_cast<int>(all.size()) - static_cast<int>(e) + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < static_cast<int>(e); ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw std::runtime_error("find_balanced: no balanced graph with ratio " + std::to_string(a) +
                             "/" + std::to_string(b) + " within " + std::to_string(max_v) +
                             " vertices");
}

// Degree-capped variant of gen_union_unicyclic: draws that would push either
// endpoint above D are resampled a few times, then skipped. Density stays
// <= d; the degree bound holds by construction.
inline Graph gen_bounded_degree(int n, int d, int degree_cap, std::uint64_t seed) {
    if (d < 1 || degree_cap < 2)
        throw std::invalid_argument("gen_bounded_degree: need d >= 1 and D >= 2");
    if (n <= 1) return from_edge_list(std::max(n, 0), {});
    Rng rng(seed);
    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> es;
    std::set<std::pair<int, int>> present;
    for (int layer = 0; layer < d; ++layer)
        for (int v = 0; v < n; ++v) {
            if (deg[v] >= degree_cap) continue;
            for (int tries = 0; tries < 20; ++tries) {
                int u = static_cast<int>(rng_below(rng, n - 1));
                if (u >= v) ++u;
                if (deg[u] >= degree_cap) continue;
                auto key = std::minmax(u, v);
                if (present.count({key.first, key.second})) continue;
                present.insert({key.first, key.second});
                es.emplace_back(v, u);
                ++deg[v];
                ++deg[u];
                break;
            }
        }
    return from_edge_list(n, es);
}

}  // namespace unigraph
