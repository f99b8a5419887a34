#pragma once

// The three universal host graphs. Hosts are held as implicit-adjacency views
// (the edge rule is evaluated on demand from the decoded coordinates), with
// optional materialization for small instances. Families:
//   unbounded: agreement product on [m]^d, (3m+3)-blowup, apex set joined to all
//   integer:   expander product on [m]^d (coordinate relation: equal or within
//              distance 2 in G), apex set, no blowup
//   rational:  [m]^a product requiring >= b related coordinates, small blowup,
//              no apex set

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "expander.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace unigraph {

enum class Family { unbounded, integer, rational };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::unbounded: return "unbounded";
        case Family::integer: return "integer";
        case Family::rational: return "rational";
    }
    return "?";
}

inline Family family_from_name(const std::string& s) {
    if (s == "unbounded") return Family::unbounded;
    if (s == "integer") return Family::integer;
    if (s == "rational") return Family::rational;
    throw std::invalid_argument("unknown family: " + s);
}

struct ConstructionParams {
    double c_integer = 4.0;      // m = ceil(C * n^{1/d}) in the integer family
    double c_rational = 2.0;     // blowup = ceil(2^{C * sqrt(log2 n)}) in the rational family
    int t_override = 0;          // 0 = family default policy
    double v_plus_per_t = 6.0;   // apex budget: ceil(v_plus_per_t * t * d * n / m)
    std::uint64_t seed = 1;
    int expander_retries = 30;
};

struct ProductVertex {
    bool apex = false;
    std::int64_t apex_index = 0;
    std::vector<int> coords;
    int slot = 0;
};

struct UniversalHost {
    Family family = Family::unbounded;
    std::int64_t n = 0;
    int d = 0;          // unbounded/integer
    int a = 0, b = 0;   // rational
    int degree_bound = 0;  // D the host was built for (0 = unconstrained)
    int dim = 0;        // number of coordinates
    std::int64_t m = 0;
    int blowup_size = 1;
    std::int64_t apex_size = 0;
    int t = 0;
    ConstructionParams params;
    CertifiedExpander expander;              // unused for the unbounded family
    std::vector<std::vector<char>> near2;    // coordinate relation: equal or dist <= 2 in G

    std::int64_t core_count() const {
        std::int64_t c = blowup_size;
        for (int i = 0; i < dim; ++i) c *= m;
        return c;
    }
    std::int64_t vertex_count() const { return core_count() + apex_size; }
};

// ---- codec ------------------------------------------------------------------

inline std::int64_t encode(const ProductVertex& pv, const UniversalHost& host) {
    if (pv.apex) {
        if (pv.apex_index < 0 || pv.apex_index >= host.apex_size)
            throw std::out_of_range("encode: apex index out of range");
        return host.core_count() + pv.apex_index;
    }
    if (static_cast<int>(pv.coords.size()) != host.dim)
        throw std::invalid_argument("encode: wrong coordinate count");
    std::int64_t id = 0;
    for (int c : pv.coords) {
        if (c < 0 || c >= host.m) throw std::out_of_range("encode: coordinate out of range");
        id = id * host.m + c;
    }
    if (pv.slot < 0 || pv.slot >= host.blowup_size) throw std::out_of_range("encode: slot out of range");
    return id * host.blowup_size + pv.slot;
}

inline ProductVertex decode(std::int64_t id, const UniversalHost& host) {
    if (id < 0 || id >= host.vertex_count()) throw std::out_of_range("decode: id out of range");
    ProductVertex pv;
    std::int64_t core = host.core_count();
    if (id >= core) {
        pv.apex = true;
        pv.apex_index = id - core;
        return pv;
    }
    pv.slot = static_cast<int>(id % host.blowup_size);
    std::int64_t rest = id / host.blowup_size;
    pv.coords.assign(host.dim, 0);
    for (int i = host.dim - 1; i >= 0; --i) {
        pv.coords[i] = static_cast<int>(rest % host.m);
        rest /= host.m;
    }
    return pv;
}

// ---- edge rule ----------------------------------------------------------------

namespace detail {

inline std::vector<std::vector<char>> distance2_relation(const Graph& g) {
    std::vector<std::vector<char>> rel(g.n, std::vector<char>(g.n, 0));
    for (int v = 0; v < g.n; ++v) {
        rel[v][v] = 1;
        for (int w : g.adj[v]) {
            rel[v][w] = 1;
            for (int x : g.adj[w]) rel[v][x] = 1;
        }
    }
    return rel;
}

}  // namespace detail

// Host edge relation between two distinct decoded vertices.
inline bool host_adjacent_pv(const UniversalHost& host, const ProductVertex& x,
                             const ProductVertex& y) {
    if (x.apex || y.apex) {
        if (x.apex && y.apex) return x.apex_index != y.apex_index;
        return true;  // apex vertices join everything
    }
    if (x.coords == y.coords) return x.slot != y.slot;  // blowup class clique
    switch (host.family) {
        case Family::unbounded:
            for (int i = 0; i < host.dim; ++i)
                if (x.coords[i] == y.coords[i]) return true;
            return false;
        case Family::integer:
            for (int i = 0; i < host.dim; ++i)
                if (host.near2[x.coords[i]][y.coords[i]]) return true;
            return false;
        case Family::rational: {
            int good = 0;
            for (int i = 0; i < host.dim; ++i)
                if (host.near2[x.coords[i]][y.coords[i]]) ++good;
            return good >= host.b;
        }
    }
    return false;
}

inline bool host_adjacent(const UniversalHost& host, std::int64_t u, std::int64_t v) {
    if (u == v) return false;
    return host_adjacent_pv(host, decode(u, host), decode(v, host));
}

// ---- builders -----------------------------------------------------------------

inline int default_integer_t(int degree_bound) {
    int t = degree_bound + 2;
    return t % 2 == 0 ? t : t + 1;
}

inline std::int64_t pow2_at_least(std::int64_t x) {
    std::int64_t p = 1;
    while (p < x) p *= 2;
    return p;
}

inline UniversalHost build_unbounded(std::int64_t n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("build_unbounded: need n >= 1, d >= 1");
    UniversalHost host;
    host.family = Family::unbounded;
    host.n = n;
    host.d = d;
    host.dim = d;
    host.m = pow2_at_least(iroot_ceil(n, d + 1));
    if (host.m < 4)
        throw std::invalid_argument("build_unbounded: n too small (resulting m < 4)");
    host.blowup_size = static_cast<int>(3 * host.m + 3);
    host.apex_size = (2 * static_cast<std::int64_t>(d) * n + host.m - 1) / host.m;
    return host;
}

inline UniversalHost build_integer(std::int64_t n, int d, int degree_bound,
                                   const ConstructionParams& params = {}) {
    if (n < 1 || d < 1 || degree_bound < 1)
        throw std::invalid_argument("build_integer: need n, d, D >= 1");
    UniversalHost host;
    host.family = Family::integer;
    host.n = n;
    host.d = d;
    host.dim = d;
    host.degree_bound = degree_bound;
    host.params = params;
    host.t = params.t_override > 0 ? params.t_override : default_integer_t(degree_bound);
    long double root = powl(static_cast<long double>(n), 1.0L / d);
    std::int64_t m = static_cast<std::int64_t>(ceill(params.c_integer * root));
    if (m <= host.t) m = host.t + 1;
    if (m * host.t % 2 != 0) ++m;
    host.m = m;
    host.blowup_size = 1;
    host.apex_size = static_cast<std::int64_t>(
        std::ceil(params.v_plus_per_t * host.t * d * static_cast<double>(n) / static_cast<double>(m)));
    if (m > 8000) throw std::invalid_argument("build_integer: alphabet too large for desk scale");
    host.expander = make_expander(static_cast<int>(m), host.t, params.seed, params.expander_retries);
    host.near2 = detail::distance2_relation(host.expander.graph);
    return host;
}

inline UniversalHost build_rational(std::int64_t n, int a, int b, int degree_bound,
                                    const ConstructionParams& params = {}) {
    if (a < b || b < 1) throw std::invalid_argument("build_rational: need a >= b >= 1");
    if (n < 2 || degree_bound < 1) throw std::invalid_argument("build_rational: need n >= 2, D >= 1");
    UniversalHost host;
    host.family = Family::rational;
    host.n = n;
    host.a = a;
    host.b = b;
    host.dim = a;
    host.degree_bound = degree_bound;
    host.params = params;
    std::int64_t m = iroot_ceil(n, a);
    double sqrt_log = std::sqrt(std::log2(static_cast<double>(n)));
    std::int64_t t = 1;
    while (2 * t <= static_cast<std::int64_t>(std::pow(2.0, std::ceil(sqrt_log)))) t *= 2;
    // The walk degree must leave room in the alphabet: cap the policy value by
    // m/4 (rounded down to a power of two, never below 2). An explicit
    // override is taken as-is apart from the t < m requirement.
    std::int64_t cap = 2;
    while (cap * 2 <= m / 4) cap *= 2;
    if (t > cap) t = cap;
    if (params.t_override > 0) t = params.t_override;
    if (t >= m) throw std::invalid_argument("build_rational: t >= m (n too small for the t policy)");
    if (m * t % 2 != 0) ++m;
    if (m > 8000) throw std::invalid_argument("build_rational: alphabet too large for desk scale");
    host.m = m;
    host.t = static_cast<int>(t);
    host.blowup_size = static_cast<int>(
        std::ceil(std::pow(2.0, params.c_rational * sqrt_log)));
    host.apex_size = 0;
    host.expander = make_expander(static_cast<int>(m), host.t, params.seed, params.expander_retries);
    host.near2 = detail::distance2_relation(host.expander.graph);
    return host;
}

// ---- exact edge count -----------------------------------------------------------

inline BigInt edge_count(const UniversalHost& host) {
    const BigInt m(static_cast<long>(host.m));
    const BigInt B(host.blowup_size);
    const BigInt P(static_cast<long>(host.apex_size));
    const int dim = host.dim;
    BigInt v_core = bigint_pow(m, dim);
    BigInt e_core;  // edges of the product graph Gamma
    switch (host.family) {
        case Family::unbounded: {
            BigInt disagree = bigint_pow(m * (m - 1), dim);
            e_core = (bigint_pow(m, 2 * dim) - disagree - v_core) / 2;
            break;
        }
        case Family::integer:
        case Family::rational: {
            BigInt related(0);  // ordered related coordinate pairs, equality included
            for (const auto& row : host.near2)
                for (char c : row) related += c;
            BigInt unrelated = m * m - related;
            if (host.family == Family::integer) {
                e_core = (bigint_pow(m, 2 * dim) - bigint_pow(unrelated, dim) - v_core) / 2;
            } else {
                BigInt total(0);
                for (int j = host.b; j <= dim; ++j) {
                    BigInt binom;
                    mpz_bin_uiui(binom.get_mpz_t(), dim, j);
                    total += binom * bigint_pow(related, j) * bigint_pow(unrelated, dim - j);
                }
                e_core = (total - v_core) / 2;
            }
            break;
        }
    }
    BigInt edges = v_core * B * (B - 1) / 2   // blowup class cliques
                 + e_core * B * B             // cross edges per Gamma edge
                 + P * (P - 1) / 2            // apex clique
                 + P * (v_core * B);          // apex to core
    return edges;
}

// Explicit Graph for small hosts; guarded by an edge budget.
inline Graph materialize(const UniversalHost& host, std::int64_t edge_limit = 20'000'000) {
    BigInt ec = edge_count(host);
    if (ec > edge_limit)
        throw std::runtime_error("materialize: host has " + ec.get_str() +
                                 " edges, above the materialization limit");
    std::int64_t nv = host.vertex_count();
    if (nv > 20000) throw std::runtime_error("materialize: too many vertices");
    std::vector<std::pair<int, int>> es;
    std::vector<ProductVertex> dec(nv);
    for (std::int64_t i = 0; i < nv; ++i) dec[i] = decode(i, host);
    for (std::int64_t u = 0; u < nv; ++u)
        for (std::int64_t v = u + 1; v < nv; ++v)
            if (host_adjacent_pv(host, dec[u], dec[v]))
                es.emplace_back(static_cast<int>(u), static_cast<int>(v));
    return from_edge_list(static_cast<int>(nv), es);
}

// ---- descriptor file (JSON) -------------------------------------------------------

inline nlohmann::json host_to_json(const UniversalHost& host) {
    nlohmann::json j;
    j["family"] = family_name(host.family);
    j["n"] = host.n;
    if (host.family == Family::rational) {
        j["a"] = host.a;
        j["b"] = host.b;
    } else {
        j["d"] = host.d;
    }
    j["degree_bound"] = host.degree_bound;
    j["m"] = host.m;
    j["dim"] = host.dim;
    j["blowup_size"] = host.blowup_size;
    j["apex_size"] = host.apex_size;
    j["t"] = host.t;
    j["params"] = {{"c_integer", host.params.c_integer},
                   {"c_rational", host.params.c_rational},
                   {"t_override", host.params.t_override},
                   {"v_plus_per_t", host.params.v_plus_per_t},
                   {"seed", host.params.seed},
                   {"expander_retries", host.params.expander_retries}};
    if (host.family != Family::unbounded) {
        std::vector<std::vector<int>> es;
        es.reserve(host.expander.graph.edges.size());
        for (auto [u, v] : host.expander.graph.edges) es.push_back({u, v});
        j["expander"] = {{"n", host.expander.graph.n},
                         {"t", host.expander.t},
                         {"lambda", host.expander.lambda_bound},
                         {"tol", host.expander.tol},
                         {"seed", host.expander.seed},
                         {"edges", es}};
    }
    return j;
}

inline UniversalHost host_from_json(const nlohmann::json& j) {
    UniversalHost host;
    host.family = family_from_name(j.at("family").get<std::string>());
    host.n = j.at("n").get<std::int64_t>();
    if (host.family == Family::rational) {
        host.a = j.at("a").get<int>();
        host.b = j.at("b").get<int>();
    } else {
        host.d = j.at("d").get<int>();
    }
    host.degree_bound = j.at("degree_bound").get<int>();
    host.m = j.at("m").get<std::int64_t>();
    host.dim = j.at("dim").get<int>();
    host.blowup_size = j.at("blowup_size").get<int>();
    host.apex_size = j.at("apex_size").get<std::int64_t>();
    host.t = j.at("t").get<int>();
    const auto& p = j.at("params");
    host.params.c_integer = p.at("c_integer").get<double>();
    host.params.c_rational = p.at("c_rational").get<double>();
    host.params.t_override = p.at("t_override").get<int>();
    host.params.v_plus_per_t = p.at("v_plus_per_t").get<double>();
    host.params.seed = p.at("seed").get<std::uint64_t>();
    host.params.expander_retries = p.at("expander_retries").get<int>();
    if (j.contains("expander")) {
        const auto& ex = j.at("expander");
        std::vector<std::pair<int, int>> es;
        for (const auto& e : ex.at("edges")) es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        host.expander.graph = from_edge_list(ex.at("n").get<int>(), es);
        host.expander.t = ex.at("t").get<int>();
        host.expander.lambda_bound = ex.at("lambda").get<double>();
        host.expander.tol = ex.at("tol").get<double>();
        host.expander.seed = ex.at("seed").get<std::uint64_t>();
        host.near2 = detail::distance2_relation(host.expander.graph);
    }
    return host;
}

inline void write_host_file(const std::string& path, const UniversalHost& host) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for write: " + path);
    f << host_to_json(host).dump(1) << "\n";
}

inline UniversalHost read_host_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    nlohmann::json j;
    f >> j;
    return host_from_json(j);
}

// FNV-1a over file bytes; ties embeddings to the exact host descriptor.
inline std::string file_content_hash(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::uint64_t h = 1469598103934665603ULL;
    char c;
    while (f.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace unigraph
