#pragma once

// Certified (m, t, lambda)-graphs at desk scale: random t-regular generation
// (configuration model with swap repair) followed by a spectral check via
// power iteration. Accepted graphs satisfy lambda_hat + tol <= 3*sqrt(t).

#include <cmath>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "prng.hpp"

namespace unigraph {

struct CertifiedExpander {
    Graph graph;
    int t = 0;
    double lambda_bound = 0.0;
    double tol = 0.0;
    std::uint64_t seed = 0;
};

inline Graph random_regular(int m, int t, std::uint64_t seed) {
    if (t < 1 || t >= m) throw std::invalid_argument("random_regular: need 1 <= t < m");
    if (static_cast<long long>(m) * t % 2 != 0)
        throw std::invalid_argument("random_regular: m*t must be even");
    Rng rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(m) * t);
    for (int v = 0; v < m; ++v)
        for (int i = 0; i < t; ++i) stubs[static_cast<std::size_t>(v) * t + i] = v;

    auto pair_up = [&](std::vector<std::pair<int, int>>& edges) {
        rng_shuffle(rng, stubs);
        edges.clear();
        std::set<std::pair<int, int>> seen;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b) return false;
            if (a > b) std::swap(a, b);
            if (!seen.insert({a, b}).second) return false;
            edges.emplace_back(a, b);
        }
        return true;
    };

    std::vector<std::pair<int, int>> edges;
    for (int attempt = 0; attempt < 50; ++attempt)
        if (pair_up(edges)) return from_edge_list(m, edges);

    // Swap repair: keep the last pairing and rewire loops/duplicates.
    edges.clear();
    rng_shuffle(rng, stubs);
    for (std::size_t i = 0; i < stubs.size(); i += 2) edges.emplace_back(stubs[i], stubs[i + 1]);
    auto key = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::int64_t>(a) * m + b;
    };
    std::multiset<std::int64_t> keys;
    for (auto [a, b] : edges) keys.insert(key(a, b));
    auto bad = [&](std::size_t i) {
        auto [a, b] = edges[i];
        return a == b || keys.count(key(a, b)) > 1;
    };
    std::size_t guard = 200 * edges.size() + 1000;
    while (guard-- > 0) {
        std::size_t bi = edges.size();
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (bad(i)) {
                bi = i;
                break;
            }
        if (bi == edges.size()) {
            std::vector<std::pair<int, int>> out(edges.begin(), edges.end());
            return from_edge_list(m, out);
        }
        std::size_t oj = rng_below(rng, edges.size());
        if (oj == bi) continue;
        auto [a, b] = edges[bi];
        auto [c, d] = edges[oj];
        // propose (a,d),(c,b)
        if (a == d || c == b) continue;
        std::int64_t k1 = key(a, d), k2 = key(c, b);
        if (keys.count(k1) > 0 || keys.count(k2) > 0 || k1 == k2) continue;
        keys.erase(keys.find(key(a, b)));
        keys.erase(keys.find(key(c, d)));
        keys.insert(k1);
        keys.insert(k2);
        edges[bi] = {a, d};
        edges[oj] = {c, b};
    }
    throw std::runtime_error("random_regular: swap repair did not converge");
}

namespace detail {

// Power iteration of `apply` restricted to the orthogonal complement of the
// all-ones vector; returns the signed Rayleigh quotient at the final iterate.
template <typename ApplyFn>
double deflated_power_iteration(int n, ApplyFn&& apply, double tol, int max_iters) {
    std::vector<double> x(n), y(n);
    Rng rng(0x5eed5eedULL);
    for (int i = 0; i < n; ++i) x[i] = (rng() % 2 ? 1.0 : -1.0) + 1e-3 * static_cast<double>(rng() % 97);
    auto deflate = [&](std::vector<double>& v) {
        double mean = 0;
        for (double a : v) mean += a;
        mean /= n;
        for (double& a : v) a -= mean;
    };
    auto norm = [&](const std::vector<double>& v) {
        double s = 0;
        for (double a : v) s += a * a;
        return std::sqrt(s);
    };
    deflate(x);
    double nx = norm(x);
    if (nx == 0) return 0.0;
    for (double& a : x) a /= nx;
    double rho = 0.0, prev = 1e300;
    int stable = 0;
    for (int it = 0; it < max_iters; ++it) {
        apply(x, y);
        deflate(y);
        rho = 0;
        for (int i = 0; i < n; ++i) rho += x[i] * y[i];
        double ny = norm(y);
        if (ny < 1e-14) return 0.0;
        for (int i = 0; i < n; ++i) x[i] = y[i] / ny;
        if (std::fabs(rho - prev) <= tol * 0.1 * std::max(1.0, std::fabs(rho))) {
            if (++stable >= 5) break;
        } else {
            stable = 0;
        }
        prev = rho;
    }
    return rho;
}

}  // namespace detail

// Second-largest absolute adjacency eigenvalue, estimated to tolerance tol.
// The A^2 pass catches the most-negative eigenvalue even when +/- pairs make
// the plain pass oscillate.
inline double second_eigenvalue(const Graph& g, double tol = 1e-6) {
    if (g.n == 0) throw std::invalid_argument("second_eigenvalue: empty graph");
    int t = g.degree(0);
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != t) throw std::invalid_argument("second_eigenvalue: graph not regular");
    if (g.n == 1 || t == 0) return 0.0;
    auto apply_a = [&](const std::vector<double>& x, std::vector<double>& y) {
        std::fill(y.begin(), y.end(), 0.0);
        for (int v = 0; v < g.n; ++v) {
            double s = 0;
            for (int w : g.adj[v]) s += x[w];
            y[v] = s;
        }
    };
    std::vector<double> tmp(g.n);
    auto apply_a2 = [&](const std::vector<double>& x, std::vector<double>& y) {
        apply_a(x, tmp);
        apply_a(tmp, y);
    };
    int iters = std::max(1500, 60 * static_cast<int>(std::log2(std::max(2, g.n))));
    double r1 = detail::deflated_power_iteration(g.n, apply_a, tol, iters);
    double r2 = detail::deflated_power_iteration(g.n, apply_a2, tol, iters);
    return std::max(std::fabs(r1), std::sqrt(std::max(0.0, r2)));
}

inline CertifiedExpander make_expander(int m, int t, std::uint64_t seed, int retries,
                                       double tol = 1e-6) {
    if (retries < 1) throw std::invalid_argument("make_expander: retries must be >= 1");
    const double threshold = 3.0 * std::sqrt(static_cast<double>(t));
    double best = 1e300;
    for (int attempt = 0; attempt < retries; ++attempt) {
        std::uint64_t s = child_seed(seed, static_cast<std::uint64_t>(attempt));
        Graph g = random_regular(m, t, s);
        double lam = second_eigenvalue(g, tol);
        if (lam + tol <= threshold) return {std::move(g), t, lam, tol, seed};
        best = std::min(best, lam);
    }
    std::ostringstream os;
    os << "make_expander: no candidate within " << retries
       << " retries passed lambda <= 3*sqrt(t) = " << threshold << "; best lambda_hat = " << best;
    throw std::runtime_error(os.str());
}

// ---- expander cache file ----------------------------------------------------
// Graph text format followed by "lambda <value> tol <value> seed <value>".

inline void write_expander(std::ostream& os, const CertifiedExpander& ce) {
    write_graph(os, ce.graph);
    os.precision(17);
    os << "lambda " << ce.lambda_bound << " tol " << ce.tol << " seed " << ce.seed << "\n";
}

inline void write_expander_file(const std::string& path, const CertifiedExpander& ce) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for write: " + path);
    write_expander(f, ce);
}

inline CertifiedExpander read_expander(std::istream& is) {
    CertifiedExpander ce;
    ce.graph = read_graph(is);
    std::string word;
    if (!(is >> word) || word != "lambda") throw std::runtime_error("expander cache: missing trailer");
    is >> ce.lambda_bound;
    if (!(is >> word) || word != "tol") throw std::runtime_error("expander cache: bad trailer");
    is >> ce.tol;
    if (!(is >> word) || word != "seed") throw std::runtime_error("expander cache: bad trailer");
    is >> ce.seed;
    ce.t = ce.graph.n > 0 ? ce.graph.degree(0) : 0;
    return ce;
}

inline CertifiedExpander read_expander_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    return read_expander(f);
}

}  // namespace unigraph
