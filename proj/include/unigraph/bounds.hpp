#pragma once

// Independent embedding verifier and the lower-bound calculator: the verifier
// trusts nothing but the host edge rule; the bound side evaluates the lift
// counting argument (closed-form threshold and the log-scale inequality).

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "density.hpp"
#include "embed.hpp"
#include "graph.hpp"
#include "rational.hpp"
#include "universal.hpp"

namespace unigraph {

struct BoundReport {
    std::int64_t n = 0;
    Rational m_f;
    double bound = 0.0;
    bool bound_exact = false;  // true when n^{1/a} is integral
    double counting_lhs_log = std::numeric_limits<double>::quiet_NaN();
    double counting_rhs_log = std::numeric_limits<double>::quiet_NaN();
    bool counting_checked = false;
    bool counting_sufficient = false;
};

// True iff emb is injective and every guest edge lands on a host edge. Host
// adjacency is evaluated from the edge rule, never from embedder state.
inline bool verify_embedding(const Graph& h, const UniversalHost& host, const Embedding& emb) {
    if (static_cast<int>(emb.image.size()) != h.n)
        throw std::invalid_argument("verify_embedding: embedding does not cover the guest vertex set");
    const std::int64_t nv = host.vertex_count();
    std::unordered_set<std::int64_t> used;
    used.reserve(emb.image.size() * 2);
    for (std::int64_t id : emb.image) {
        if (id < 0 || id >= nv) throw std::out_of_range("verify_embedding: host id out of range");
        if (!used.insert(id).second) return false;  // injectivity
    }
    for (auto [u, v] : h.edges)
        if (!host_adjacent(host, emb.image[u], emb.image[v])) return false;
    return true;
}

// Closed-form edge threshold n^{2 - 1/m(F)} / (9 v(F)) for a balanced F.
inline BoundReport lower_bound(const Graph& f, std::int64_t n) {
    if (f.n < 1 || f.e() < 1) throw std::invalid_argument("lower_bound: base graph needs edges");
    if (n < 1 || n % f.n != 0)
        throw std::invalid_argument("lower_bound: n must be a positive multiple of v(F)");
    if (!is_balanced(f))
        throw std::invalid_argument("lower_bound: base graph is not balanced");
    BoundReport rep;
    rep.n = n;
    rep.m_f = Rational(f.e(), f.n);
    // exponent 2 - 1/m = (2a - b)/a with m = a/b in lowest terms
    long a = rep.m_f.num().get_si();
    long b = rep.m_f.den().get_si();
    long long root = iroot(n, static_cast<int>(a));
    BigInt rpow = bigint_pow(BigInt(static_cast<long>(root)), static_cast<unsigned long>(a));
    double denom = 9.0 * static_cast<double>(f.n);
    if (rpow == n) {
        rep.bound_exact = true;
        BigInt p = bigint_pow(BigInt(static_cast<long>(root)), static_cast<unsigned long>(2 * a - b));
        rep.bound = p.get_d() / denom;
    } else {
        rep.bound = std::pow(static_cast<double>(n),
                             static_cast<double>(2 * a - b) / static_cast<double>(a)) / denom;
    }
    return rep;
}

// Log-scale comparison of binom(M, n e/v) * n! against (n / (3 v))^{n e / v}:
// if the left side does not exceed the right, M edges cannot host all lifts.
inline BoundReport check_counting_inequality(const Graph& f, std::int64_t n, std::int64_t m_edges) {
    BoundReport rep = lower_bound(f, n);
    rep.counting_checked = true;
    const double k = static_cast<double>(n) * static_cast<double>(f.e()) / f.n;
    if (m_edges < static_cast<std::int64_t>(k)) {
        rep.counting_lhs_log = -std::numeric_limits<double>::infinity();
    } else {
        rep.counting_lhs_log = std::lgamma(static_cast<double>(m_edges) + 1.0) -
                               std::lgamma(k + 1.0) -
                               std::lgamma(static_cast<double>(m_edges) - k + 1.0) +
                               std::lgamma(static_cast<double>(n) + 1.0);
    }
    rep.counting_rhs_log = k * std::log(static_cast<double>(n) / (3.0 * f.n));
    rep.counting_sufficient = rep.counting_lhs_log > rep.counting_rhs_log;
    return rep;
}

}  // namespace unigraph
