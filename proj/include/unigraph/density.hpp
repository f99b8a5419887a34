#pragma once

// Exact subgraph density m(H) = max over nonempty H' of e(H')/v(H'), with a
// witness subset. Two routes: exhaustive subset search for small graphs, and
// a Stern-Brocot mediant walk over a max-flow feasibility oracle for large
// ones. Both return the exact rational, never an approximation.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "maxflow.hpp"
#include "rational.hpp"

namespace unigraph {

struct DensityReport {
    Rational density;
    std::vector<int> witness;
};

enum class DensityMethod { automatic, exhaustive, flow };

namespace detail {

inline DensityReport density_exhaustive(const Graph& h) {
    int n = h.n;
    std::vector<std::uint32_t> adj_mask(n, 0);
    for (auto [u, v] : h.edges) {
        adj_mask[u] |= 1u << v;
        adj_mask[v] |= 1u << u;
    }
    // best = e/v maximal; compare by cross-multiplication.
    std::int64_t best_e = 0, best_v = 1;
    std::uint32_t best_mask = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::int64_t ec = 0;
        for (std::uint32_t m = mask; m;) {
            int u = __builtin_ctz(m);
            m &= m - 1;
            ec += __builtin_popcount(adj_mask[u] & mask);
        }
        ec /= 2;
        std::int64_t vc = __builtin_popcount(mask);
        if (ec * best_v > best_e * vc) {
            best_e = ec;
            best_v = vc;
            best_mask = mask;
        }
    }
    DensityReport rep;
    rep.density = Rational(best_e, best_v);
    for (int u = 0; u < n; ++u)
        if (best_mask >> u & 1) rep.witness.push_back(u);
    return rep;
}

// True iff some nonempty S has e(S)/|S| > p/q, via min cut: with source caps
// q*deg(v), sink caps 2p and edge caps q both ways, the cut for s-side S has
// value 2qM - 2(q*e(S) - p*|S|).
inline bool denser_than(const Graph& h, std::int64_t p, std::int64_t q,
                        std::vector<int>* witness = nullptr) {
    int n = h.n;
    std::int64_t m = h.e();
    MaxFlow mf(n + 2);
    int s = n, t = n + 1;
    for (int v = 0; v < n; ++v) {
        mf.add_edge(s, v, q * h.degree(v));
        mf.add_edge(v, t, 2 * p);
    }
    for (auto [u, v] : h.edges) {
        mf.add_edge(u, v, q);
        mf.add_edge(v, u, q);
    }
    std::int64_t cut = mf.run(s, t);
    bool feasible = cut < 2 * q * m;
    if (feasible && witness) {
        auto side = mf.min_cut_side(s);
        witness->clear();
        for (int v = 0; v < n; ++v)
            if (side[v]) witness->push_back(v);
    }
    return feasible;
}

inline DensityReport density_flow(const Graph& h) {
    const std::int64_t n = h.n;
    // Stern-Brocot walk: maintain neighbor fractions L = a/b < m(H) <= R = c/d
    // (bc - ad = 1; R = 1/0 until the first left move). Since m(H) has
    // denominator <= n, once b + d > n no fraction strictly inside (L, R) can
    // be the answer, so m(H) = R. Runs in one direction are galloped, keeping
    // the number of max-flow calls polylogarithmic.
    std::int64_t a = 0, b = 1, c = 1, d = 0;
    auto oracle = [&](std::int64_t p, std::int64_t q) { return denser_than(h, p, q); };
    auto in_budget = [&](std::int64_t k) {
        return d > 0 ? b + k * d <= 4 * n : a + k * c <= n;  // density <= n always
    };
    while (b + d <= n) {
        if (oracle(a + c, b + d)) {
            std::int64_t k = 1;
            while (in_budget(2 * k) && oracle(a + 2 * k * c, b + 2 * k * d)) k *= 2;
            std::int64_t lo = k, hi = 2 * k;  // lo good; hi bad or out of budget
            while (lo + 1 < hi) {
                std::int64_t mid = lo + (hi - lo) / 2;
                if (in_budget(mid) && oracle(a + mid * c, b + mid * d))
                    lo = mid;
                else
                    hi = mid;
            }
            a += lo * c;
            b += lo * d;
        } else {
            c += a;
            d += b;
        }
    }
    Rational dens(c, d);
    // Witness: maximizing S at guess g just below m(H) is a densest subset.
    std::vector<int> witness;
    BigInt z = 2 * BigInt(static_cast<long>(n)) * static_cast<long>(n);
    BigInt pw = BigInt(static_cast<long>(c)) * z - 1;
    BigInt qw = BigInt(static_cast<long>(d)) * z;
    bool ok = denser_than(h, pw.get_si(), qw.get_si(), &witness);
    if (!ok || witness.empty()) throw std::logic_error("density_flow: witness extraction failed");
    return {dens, witness};
}

}  // namespace detail

inline DensityReport density(const Graph& h, DensityMethod method = DensityMethod::automatic) {
    if (h.n < 1) throw std::invalid_argument("density: empty vertex set");
    if (h.e() == 0) return {Rational(0), {0}};
    if (method == DensityMethod::exhaustive ||
        (method == DensityMethod::automatic && h.n <= 20)) {
        if (h.n > 25) throw std::invalid_argument("density: exhaustive method limited to 25 vertices");
        return detail::density_exhaustive(h);
    }
    return detail::density_flow(h);
}

inline bool is_balanced(const Graph& f) {
    if (f.n < 1) throw std::invalid_argument("is_balanced: empty vertex set");
    return density(f).density == Rational(f.e(), f.n);
}

}  // namespace unigraph
