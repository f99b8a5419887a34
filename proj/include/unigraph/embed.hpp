#pragma once

// The three embedding engines, one per host family, plus the shared
// primitives: randomized tree homomorphisms, constrained tree embedding into
// an expander, and the final blowup-slot assignment. Every engine returns an
// injective vertex map that the independent verifier can check against the
// host edge rule alone.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "density.hpp"
#include "discrepancy.hpp"
#include "graph.hpp"
#include "matroid.hpp"
#include "prng.hpp"
#include "tree_ops.hpp"
#include "universal.hpp"

namespace unigraph {

struct Embedding {
    std::vector<std::int64_t> image;  // host vertex id per guest vertex
};

struct EmbedOptions {
    std::uint64_t seed = 1;
    int attempts = 8;    // whole-pipeline restarts (integer family)
    int retry_cap = 50;  // per-phase redraws (rational family)
    double beta = 0.5;   // filtration / load parameter for tree embedding
    double eps = 0.35;   // availability slack accepted by tree embedding
};

// Slot assignment per bucket; rejects any bucket above capacity.
inline std::vector<std::vector<int>> finalize_blowup_assignment(
    const std::vector<std::vector<int>>& buckets, int capacity) {
    std::vector<std::vector<int>> slots(buckets.size());
    for (std::size_t b = 0; b < buckets.size(); ++b) {
        if (static_cast<int>(buckets[b].size()) > capacity) {
            std::ostringstream os;
            os << "finalize_blowup_assignment: bucket " << b << " holds " << buckets[b].size()
               << " vertices, capacity " << capacity;
            throw std::runtime_error(os.str());
        }
        slots[b].resize(buckets[b].size());
        for (std::size_t j = 0; j < buckets[b].size(); ++j) slots[b][j] = static_cast<int>(j);
    }
    return slots;
}

namespace detail {

struct TreeOrder {
    std::vector<int> order;   // BFS order, root first
    std::vector<int> parent;  // -1 for root
};

inline TreeOrder tree_bfs_order(const Graph& t, int root) {
    TreeOrder to;
    to.parent.assign(t.n, -2);
    to.order.reserve(t.n);
    to.parent[root] = -1;
    to.order.push_back(root);
    for (std::size_t i = 0; i < to.order.size(); ++i) {
        int u = to.order[i];
        for (int w : t.adj[u])
            if (to.parent[w] == -2) {
                to.parent[w] = u;
                to.order.push_back(w);
            }
    }
    return to;
}

// Component subgraph with back-mapping to the original vertex ids.
struct SubgraphMap {
    Graph graph;
    std::vector<int> to_orig;
};

inline SubgraphMap component_subgraph(const Graph& g, const std::vector<int>& verts) {
    SubgraphMap sm;
    sm.to_orig = verts;
    std::unordered_map<int, int> inv;
    inv.reserve(verts.size() * 2);
    for (std::size_t i = 0; i < verts.size(); ++i) inv[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (int u : verts)
        for (int w : g.adj[u])
            if (u < w && inv.count(w)) es.emplace_back(inv[u], inv[w]);
    sm.graph = from_edge_list(static_cast<int>(verts.size()), es);
    return sm;
}

inline std::vector<std::vector<int>> alive_components(const Graph& part,
                                                      const std::vector<char>& removed) {
    std::vector<int> comp(part.n, -1);
    std::vector<std::vector<int>> lists;
    std::vector<int> stack;
    for (int s = 0; s < part.n; ++s) {
        if (removed[s] || comp[s] >= 0) continue;
        int c = static_cast<int>(lists.size());
        lists.push_back({});
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            lists[c].push_back(u);
            for (int w : part.adj[u])
                if (!removed[w] && comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
    }
    return lists;
}

inline std::vector<Graph> guest_parts(const Graph& h, int b, int want) {
    std::vector<Graph> parts;
    Rational dens = density(h).density;
    if (dens >= Rational(1)) {
        Decomposition dec = decompose(h, b);
        parts = decomposition_parts(dec, h.n);
    } else {
        // Density below 1 means every component is a tree: the graph itself is
        // already a valid part, and the b copies go to b distinct parts.
        for (int i = 0; i < b; ++i) parts.push_back(h);
    }
    if (static_cast<int>(parts.size()) > want)
        throw std::invalid_argument("guest has more decomposition parts than host coordinates");
    while (static_cast<int>(parts.size()) < want) parts.push_back(from_edge_list(h.n, {}));
    return parts;
}

}  // namespace detail

// ---- Theorem-1-style embedder (unbounded degree) ------------------------------

inline Embedding embed_unbounded(const Graph& h, const UniversalHost& host) {
    if (host.family != Family::unbounded)
        throw std::invalid_argument("embed_unbounded: host family mismatch");
    if (h.n > host.n) throw std::invalid_argument("embed_unbounded: guest larger than host");
    if (h.n == 0) return {};
    if (density(h).density > Rational(host.d))
        throw std::invalid_argument("embed_unbounded: guest density above host bound");
    const int m = static_cast<int>(host.m);
    const int d = host.d;

    std::vector<Graph> parts = detail::guest_parts(h, 1, d);

    // Cleanup: break cycles in components of size >= m, then split the forests
    // so every surviving component fits one coordinate class.
    const int r_split = static_cast<int>((host.n + host.m - 1) / host.m);
    CleanupPlan plan = plan_cleanup(parts, m, r_split);
    std::vector<char> removed(h.n, 0);
    for (int v : plan.removed) removed[v] = 1;
    if (static_cast<std::int64_t>(plan.removed.size()) > host.apex_size)
        throw std::runtime_error("embed_unbounded: apex overflow (" +
                                 std::to_string(plan.removed.size()) + " removed, " +
                                 std::to_string(host.apex_size) + " apex slots)");

    // Phase i assigns coordinate i to every surviving vertex, one value per
    // connected component of part i, by discrepancy splitting of the
    // component count vectors over the current prefix classes.
    std::vector<std::int64_t> pid(h.n, 0);  // prefix id, base m
    std::int64_t prefix_space = 1;
    for (int i = 0; i < d; ++i) {
        const auto& comps = plan.residual_parts[i];
        VectorFamily fam;
        fam.dim = static_cast<int>(prefix_space);
        fam.vectors.reserve(comps.size());
        for (const auto& verts : comps) {
            if (static_cast<int>(verts.size()) > m)
                throw std::logic_error("embed_unbounded: component larger than m after cleanup");
            std::vector<Rational> vec(fam.dim, Rational(0));
            for (int u : verts) vec[pid[u]] += Rational(1, m);
            fam.vectors.push_back(std::move(vec));
        }
        SplitResult split = partition_pow2(fam, m);
        std::vector<int> label(comps.size(), -1);
        for (int p = 0; p < m; ++p)
            for (int ci : split.parts[p]) label[ci] = p;
        for (std::size_t ci = 0; ci < comps.size(); ++ci)
            for (int u : comps[ci]) pid[u] = pid[u] * m + label[ci];
        prefix_space *= m;

        // Phase bucket bound: |S_v| <= n/m^i + 2m + 3.
        std::unordered_map<std::int64_t, int> cnt;
        for (int v = 0; v < h.n; ++v)
            if (!removed[v]) ++cnt[pid[v]];
        double cap = static_cast<double>(host.n);
        for (int j = 0; j <= i; ++j) cap /= m;
        std::int64_t cap_int = static_cast<std::int64_t>(std::floor(cap)) + 2 * m + 3;
        for (auto& [key, c] : cnt)
            if (c > cap_int)
                throw std::logic_error("embed_unbounded: phase bucket bound violated (bucket " +
                                       std::to_string(key) + " holds " + std::to_string(c) + " > " +
                                       std::to_string(cap_int) + ")");
    }

    // Finalize: inject each bucket into its blowup class, removed set into V+.
    std::unordered_map<std::int64_t, std::vector<int>> buckets;
    for (int v = 0; v < h.n; ++v)
        if (!removed[v]) buckets[pid[v]].push_back(v);
    Embedding emb;
    emb.image.assign(h.n, -1);
    for (auto& [key, verts] : buckets) {
        if (static_cast<int>(verts.size()) > host.blowup_size)
            throw std::runtime_error("embed_unbounded: blowup class overflow at bucket " +
                                     std::to_string(key));
        ProductVertex pv;
        pv.coords.assign(d, 0);
        std::int64_t rest = key;
        for (int i = d - 1; i >= 0; --i) {
            pv.coords[i] = static_cast<int>(rest % m);
            rest /= m;
        }
        for (std::size_t j = 0; j < verts.size(); ++j) {
            pv.slot = static_cast<int>(j);
            emb.image[verts[j]] = encode(pv, host);
        }
    }
    for (std::size_t j = 0; j < plan.removed.size(); ++j) {
        ProductVertex pv;
        pv.apex = true;
        pv.apex_index = static_cast<std::int64_t>(j);
        emb.image[plan.removed[j]] = encode(pv, host);
    }
    return emb;
}

// ---- randomized tree homomorphism ----------------------------------------------

inline std::vector<int> random_tree_hom(const Graph& t, int root, int start, const Graph& g,
                                        std::uint64_t seed) {
    int nc = 0;
    component_ids(t, &nc);
    if (nc != 1 || t.e() != t.n - 1)
        throw std::invalid_argument("random_tree_hom: input is not a tree");
    if (root < 0 || root >= t.n) throw std::invalid_argument("random_tree_hom: bad root");
    if (start < 0 || start >= g.n) throw std::invalid_argument("random_tree_hom: bad start");
    Rng rng(seed);
    detail::TreeOrder to = detail::tree_bfs_order(t, root);
    std::vector<int> img(t.n, -1);
    img[root] = start;
    for (std::size_t i = 1; i < to.order.size(); ++i) {
        int v = to.order[i];
        const auto& nb = g.adj[img[to.parent[v]]];
        if (nb.empty()) throw std::invalid_argument("random_tree_hom: image vertex has no neighbors");
        img[v] = nb[rng_below(rng, nb.size())];
    }
    return img;
}

// ---- constrained tree embedding into an expander --------------------------------

// Injective embedding of T into G with phi(v) in S_v. Realized operationally:
// a reverse filtration keeps only images whose neighborhoods stay rich enough
// for the children, then a greedy pass places vertices in BFS order, falling
// back to alternating-path augmentation over still-movable occupants.
inline std::vector<int> embed_tree_constrained(const Graph& t, const CertifiedExpander& g,
                                               const std::vector<std::vector<char>>& allowed,
                                               double eps, double beta = 0.5,
                                               std::uint64_t seed = 0) {
    const int m = g.graph.n;
    if (t.n == 0) return {};
    int nc = 0;
    component_ids(t, &nc);
    if (nc != 1 || t.e() != t.n - 1)
        throw std::invalid_argument("embed_tree_constrained: input is not a tree");
    if (static_cast<int>(allowed.size()) != t.n)
        throw std::invalid_argument("embed_tree_constrained: one allowed-set per tree vertex required");
    if (3 * static_cast<std::int64_t>(g.t) * t.n > m)
        throw std::invalid_argument("embed_tree_constrained: tree larger than m/(3t)");
    std::int64_t min_allowed = static_cast<std::int64_t>(std::ceil((1.0 - eps) * m));
    for (int v = 0; v < t.n; ++v) {
        std::int64_t c = 0;
        for (char a : allowed[v]) c += a;
        if (c < min_allowed)
            throw std::invalid_argument("embed_tree_constrained: allowed set of vertex " +
                                        std::to_string(v) + " smaller than (1-eps)m");
    }

    detail::TreeOrder to = detail::tree_bfs_order(t, 0);
    std::vector<std::vector<int>> children(t.n);
    for (int v : to.order)
        if (to.parent[v] >= 0) children[to.parent[v]].push_back(v);

    // Reverse filtration: A_v keeps images with >= (1-beta)t neighbors in
    // every child's A set.
    const int need = static_cast<int>(std::ceil((1.0 - beta) * g.t));
    std::vector<std::vector<char>> a_set(t.n);
    for (auto it = to.order.rbegin(); it != to.order.rend(); ++it) {
        int v = *it;
        a_set[v] = allowed[v];
        if (!children[v].empty()) {
            for (int x = 0; x < m; ++x) {
                if (!a_set[v][x]) continue;
                for (int c : children[v]) {
                    int good = 0;
                    for (int w : g.graph.adj[x]) good += a_set[c][w];
                    if (good < need) {
                        a_set[v][x] = 0;
                        break;
                    }
                }
            }
        }
        bool any = false;
        for (char c : a_set[v]) any |= c;
        if (!any) {
            std::ostringstream os;
            os << "embed_tree_constrained: filtration emptied at tree vertex " << v
               << " (t = " << g.t << ", beta = " << beta << ")";
            throw std::runtime_error(os.str());
        }
    }

    Rng rng(seed);
    std::vector<int> img(t.n, -1);
    std::vector<int> occupant(m, -1);
    std::vector<int> placed_children(t.n, 0);
    std::vector<int> load(m, 0);  // children anchored at a host vertex
    const int load_cap = std::max(1, static_cast<int>(std::floor(2.0 * beta * g.t)));

    auto place = [&](int v, int x) {
        img[v] = x;
        occupant[x] = v;
        if (to.parent[v] >= 0) {
            ++placed_children[to.parent[v]];
            ++load[img[to.parent[v]]];
        }
    };

    // root
    {
        std::vector<int> cand;
        for (int x = 0; x < m; ++x)
            if (a_set[0][x]) cand.push_back(x);
        place(0, cand[rng_below(rng, cand.size())]);
    }

    for (std::size_t oi = 1; oi < to.order.size(); ++oi) {
        int v = to.order[oi];
        int p_img = img[to.parent[v]];
        auto try_direct = [&](int vertex, int anchor) -> int {
            const auto& nb = g.graph.adj[anchor];
            std::size_t off = rng_below(rng, nb.size());
            for (std::size_t k = 0; k < nb.size(); ++k) {
                int w = nb[(k + off) % nb.size()];
                if (occupant[w] < 0 && a_set[vertex][w]) return w;
            }
            return -1;
        };
        if (load[p_img] < load_cap) {
            int w = try_direct(v, p_img);
            if (w >= 0) {
                place(v, w);
                continue;
            }
        }
        // Alternating augmentation: free one of the wanted slots by moving a
        // still-childless occupant to another neighbor of its own parent image.
        struct Node {
            int host;  // host vertex we want to free
            int from;  // index in bfs array of the mover that vacates it (-1 root of search)
        };
        std::vector<Node> bfs;
        std::vector<char> seen(m, 0);
        auto push_wanted = [&](int vertex, int anchor) {
            for (int w : g.graph.adj[anchor])
                if (!seen[w] && a_set[vertex][w] && occupant[w] >= 0) {
                    seen[w] = 1;
                    bfs.push_back({w, -1});
                }
        };
        // nodes reachable for v directly
        push_wanted(v, p_img);
        int found_free = -1, found_at = -1;
        for (std::size_t qi = 0; qi < bfs.size() && found_free < 0; ++qi) {
            int w = bfs[qi].host;
            int u = occupant[w];
            // u may move only while none of its children are placed; the tree
            // root and v's own parent stay put (their images anchor others).
            if (u == 0 || u == to.parent[v] || placed_children[u] > 0) continue;
            int anchor = img[to.parent[u]];
            std::size_t off = rng_below(rng, g.graph.adj[anchor].size());
            const auto& nb = g.graph.adj[anchor];
            for (std::size_t k = 0; k < nb.size(); ++k) {
                int w2 = nb[(k + off) % nb.size()];
                if (!a_set[u][w2]) continue;
                if (occupant[w2] < 0) {
                    found_free = w2;
                    found_at = static_cast<int>(qi);
                    break;
                }
                if (!seen[w2]) {
                    seen[w2] = 1;
                    bfs.push_back({w2, static_cast<int>(qi)});
                }
            }
        }
        if (found_free < 0 || load[p_img] >= load_cap) {
            std::ostringstream os;
            os << "embed_tree_constrained: stuck placing tree vertex " << v
               << " (parent image " << p_img << ", load " << load[p_img] << "/" << load_cap << ")";
            throw std::runtime_error(os.str());
        }
        // Apply the chain backwards: each mover hops to the slot freed after it.
        int free_slot = found_free;
        int at = found_at;
        while (at >= 0) {
            int w = bfs[at].host;
            int u = occupant[w];
            occupant[free_slot] = u;
            img[u] = free_slot;
            occupant[w] = -1;
            free_slot = w;
            at = bfs[at].from;
        }
        place(v, free_slot);
    }
    return img;
}

// ---- Theorem-3-style embedder (integer density, bounded degree) -----------------

inline Embedding embed_integer(const Graph& h, const UniversalHost& host,
                               const EmbedOptions& opts = {}) {
    if (host.family != Family::integer)
        throw std::invalid_argument("embed_integer: host family mismatch");
    if (h.n > host.n) throw std::invalid_argument("embed_integer: guest larger than host");
    if (h.n == 0) return {};
    if (density(h).density > Rational(host.d))
        throw std::invalid_argument("embed_integer: guest density above host bound");
    if (host.degree_bound > 0 && h.max_degree() > host.degree_bound)
        throw std::invalid_argument("embed_integer: guest degree above host bound");
    const int m = static_cast<int>(host.m);
    const int d = host.d;
    const int cap_tree = std::max(2, m / (3 * host.t));

    std::vector<Graph> parts = detail::guest_parts(h, 1, d);

    // Here every surviving component must fit the constrained tree embedder,
    // so cycles are broken at the tree-size cap rather than at m.
    const int r_split = (h.n + cap_tree - 1) / cap_tree;
    CleanupPlan plan = plan_cleanup(parts, cap_tree, r_split);
    std::vector<char> removed(h.n, 0);
    for (int v : plan.removed) removed[v] = 1;
    if (static_cast<std::int64_t>(plan.removed.size()) > host.apex_size)
        throw std::runtime_error("embed_integer: apex overflow (" +
                                 std::to_string(plan.removed.size()) + " removed, " +
                                 std::to_string(host.apex_size) + " apex slots)");

    // Trees per part, fixed across attempts.
    std::vector<std::vector<detail::SubgraphMap>> trees(d);
    for (int i = 0; i < d; ++i) {
        for (const auto& verts : plan.residual_parts[i]) {
            detail::SubgraphMap sm = detail::component_subgraph(parts[i], verts);
            sm.graph = unicyclic_to_tree(sm.graph);
            if (sm.graph.n > cap_tree)
                throw std::logic_error("embed_integer: component above the tree size cap");
            trees[i].push_back(std::move(sm));
        }
    }

    std::string last_error = "no attempts made";
    for (int attempt = 0; attempt < opts.attempts; ++attempt) {
        std::uint64_t aseed = child_seed(opts.seed ^ host.params.seed, attempt);
        try {
            std::vector<std::int64_t> pid(h.n, 0);
            for (int i = 0; i < d; ++i) {
                const std::int64_t cap_bucket = static_cast<std::int64_t>(
                    std::floor(std::pow(static_cast<double>(host.n),
                                        static_cast<double>(d - i - 1) / d) + 1e-9));
                std::unordered_map<std::int64_t, int> cnt;  // (prefix, coord) occupancy
                std::uint64_t tree_idx = 0;
                for (const auto& sm : trees[i]) {
                    std::vector<std::vector<char>> allowed(sm.graph.n,
                                                           std::vector<char>(m, 1));
                    for (int lv = 0; lv < sm.graph.n; ++lv) {
                        std::int64_t base = pid[sm.to_orig[lv]] * m;
                        for (int x = 0; x < m; ++x) {
                            auto it = cnt.find(base + x);
                            if (it != cnt.end() && it->second >= cap_bucket) allowed[lv][x] = 0;
                        }
                    }
                    std::vector<int> img = embed_tree_constrained(
                        sm.graph, host.expander, allowed, opts.eps, opts.beta,
                        child_seed(aseed, (static_cast<std::uint64_t>(i) << 32) | tree_idx));
                    for (int lv = 0; lv < sm.graph.n; ++lv) {
                        int orig = sm.to_orig[lv];
                        std::int64_t key = pid[orig] * m + img[lv];
                        int c = ++cnt[key];
                        if (c > cap_bucket)
                            throw std::logic_error("embed_integer: phase bucket bound violated");
                        pid[orig] = key;
                    }
                    ++tree_idx;
                }
            }
            // Buckets are singletons at phase d, so the core map is injective.
            Embedding emb;
            emb.image.assign(h.n, -1);
            std::unordered_map<std::int64_t, int> used;
            for (int v = 0; v < h.n; ++v) {
                if (removed[v]) continue;
                if (++used[pid[v]] > 1) throw std::logic_error("embed_integer: final bucket not singleton");
                ProductVertex pv;
                pv.coords.assign(d, 0);
                std::int64_t rest = pid[v];
                for (int i = d - 1; i >= 0; --i) {
                    pv.coords[i] = static_cast<int>(rest % m);
                    rest /= m;
                }
                pv.slot = 0;
                emb.image[v] = encode(pv, host);
            }
            for (std::size_t j = 0; j < plan.removed.size(); ++j) {
                ProductVertex pv;
                pv.apex = true;
                pv.apex_index = static_cast<std::int64_t>(j);
                emb.image[plan.removed[j]] = encode(pv, host);
            }
            return emb;
        } catch (const std::runtime_error& e) {
            last_error = e.what();
        } catch (const std::invalid_argument& e) {
            last_error = e.what();
        }
    }
    throw std::runtime_error("embed_integer: all " + std::to_string(opts.attempts) +
                             " attempts failed; last error: " + last_error);
}

// ---- Theorem-2-style embedder (rational density, bounded degree) ----------------

inline Embedding embed_rational(const Graph& h, const UniversalHost& host, std::uint64_t seed,
                                int retry_cap) {
    if (host.family != Family::rational)
        throw std::invalid_argument("embed_rational: host family mismatch");
    if (h.n > host.n) throw std::invalid_argument("embed_rational: guest larger than host");
    if (h.n == 0) return {};
    if (density(h).density > Rational(host.a, host.b))
        throw std::invalid_argument("embed_rational: guest density above host bound");
    if (host.degree_bound > 0 && h.max_degree() > host.degree_bound)
        throw std::invalid_argument("embed_rational: guest degree above host bound");
    const int m = static_cast<int>(host.m);
    const int a = host.a;
    const Graph& g = host.expander.graph;

    // Spanning trees T_i whose squares cover the parts.
    std::vector<Graph> parts = detail::guest_parts(h, host.b, a);
    std::vector<Graph> span_trees;
    std::vector<char> none(h.n, 0);
    for (int i = 0; i < a; ++i) {
        std::vector<std::pair<int, int>> tree_edges;
        for (const auto& verts : detail::alive_components(parts[i], none)) {
            detail::SubgraphMap sm = detail::component_subgraph(parts[i], verts);
            Graph t = unicyclic_to_tree(sm.graph);
            for (auto [u, v] : t.edges) tree_edges.emplace_back(sm.to_orig[u], sm.to_orig[v]);
        }
        Graph forest = from_edge_list(h.n, tree_edges);
        span_trees.push_back(forest_to_spanning_tree(forest, std::max(h.max_degree(), 2)));
    }

    const int root = 0;
    const double log_n = std::log2(static_cast<double>(host.n));
    const int radius = static_cast<int>(std::ceil(16.0 * std::sqrt(log_n)));

    // Truncated-ball enumeration in one spanning tree.
    auto ball_in_tree = [&](const Graph& t, int v) {
        std::vector<int> dist{0};
        std::vector<int> verts{v};
        std::vector<int> from{-1};
        for (std::size_t qi = 0; qi < verts.size(); ++qi) {
            if (dist[qi] == radius) continue;
            for (int w : t.adj[verts[qi]]) {
                if (w == from[qi]) continue;
                verts.push_back(w);
                dist.push_back(dist[qi] + 1);
                from.push_back(verts[qi]);
            }
        }
        return verts;
    };
    auto aux_neighbors = [&](int v, std::vector<char>& mark) {
        std::vector<int> out;
        for (const Graph& t : span_trees)
            for (int w : ball_in_tree(t, v))
                if (w != v && !mark[w]) {
                    mark[w] = 1;
                    out.push_back(w);
                }
        for (int w : out) mark[w] = 0;
        return out;
    };

    // U_0 and a greedy smallest-class-first proper coloring of the rest in the
    // auxiliary proximity graph.
    std::vector<char> scratch(h.n, 0);
    std::vector<char> in_u0(h.n, 0);
    in_u0[root] = 1;
    for (int w : aux_neighbors(root, scratch)) in_u0[w] = 1;
    std::vector<int> color(h.n, -1);
    std::vector<std::int64_t> class_size;
    std::int64_t delta_aux = 0;
    for (int v = 0; v < h.n; ++v) {
        if (in_u0[v]) continue;
        std::vector<int> nbrs = aux_neighbors(v, scratch);
        delta_aux = std::max<std::int64_t>(delta_aux, static_cast<std::int64_t>(nbrs.size()));
        std::vector<char> blocked(class_size.size(), 0);
        for (int w : nbrs)
            if (color[w] >= 0) blocked[color[w]] = 1;
        int best = -1;
        for (std::size_t c = 0; c < class_size.size(); ++c)
            if (!blocked[c] && (best < 0 || class_size[c] < class_size[best]))
                best = static_cast<int>(c);
        if (best < 0) {
            best = static_cast<int>(class_size.size());
            class_size.push_back(0);
        }
        color[v] = best;
        ++class_size[best];
    }
    // One balancing pass: move vertices out of oversized classes when a
    // strictly smaller class is legal for them.
    for (int v = 0; v < h.n; ++v) {
        if (in_u0[v] || class_size.size() < 2) continue;
        std::int64_t here = class_size[color[v]];
        std::vector<int> nbrs = aux_neighbors(v, scratch);
        std::vector<char> blocked(class_size.size(), 0);
        for (int w : nbrs)
            if (color[w] >= 0) blocked[color[w]] = 1;
        int best = color[v];
        for (std::size_t c = 0; c < class_size.size(); ++c)
            if (!blocked[c] && class_size[c] + 1 < here && class_size[c] < class_size[best])
                best = static_cast<int>(c);
        if (best != color[v]) {
            --class_size[color[v]];
            color[v] = best;
            ++class_size[best];
        }
    }

    // Phases: accept a random homomorphism of T_i iff every (bucket, class)
    // count stays within max(2 n^{(a-i)/a}, 4 log n).
    std::vector<std::int64_t> pid(h.n, 0);
    Rng srng(seed);
    for (int i = 0; i < a; ++i) {
        double cap_real = std::max(
            2.0 * std::pow(static_cast<double>(host.n), static_cast<double>(a - i - 1) / a),
            4.0 * log_n);
        std::int64_t cap = static_cast<std::int64_t>(std::floor(cap_real + 1e-9));
        bool accepted = false;
        for (int att = 0; att <= retry_cap && !accepted; ++att) {
            std::uint64_t hseed = child_seed(seed, (static_cast<std::uint64_t>(i) << 32) | att);
            int start = static_cast<int>(rng_below(srng, g.n));
            std::vector<int> img = random_tree_hom(span_trees[i], root, start, g, hseed);
            std::unordered_map<std::int64_t, int> cnt;
            bool ok = true;
            for (int v = 0; v < h.n && ok; ++v) {
                if (in_u0[v]) continue;
                std::int64_t key = (pid[v] * m + img[v]) * (delta_aux + 2) + color[v];
                if (++cnt[key] > cap) ok = false;
            }
            if (!ok) continue;
            for (int v = 0; v < h.n; ++v) pid[v] = pid[v] * m + img[v];
            accepted = true;
        }
        if (!accepted)
            throw std::runtime_error("embed_rational: phase " + std::to_string(i + 1) +
                                     " exhausted " + std::to_string(retry_cap) +
                                     " redraws without meeting the bucket bound");
    }

    // Final blowup injection. The class structure bounds every bucket by
    // |U_0| + (#classes) * 4 log n; the binding constraint is the blowup size.
    std::unordered_map<std::int64_t, std::vector<int>> buckets;
    for (int v = 0; v < h.n; ++v) buckets[pid[v]].push_back(v);
    std::int64_t u0_count = 0;
    for (char c : in_u0) u0_count += c;
    double theoretical =
        static_cast<double>(u0_count) +
        static_cast<double>(delta_aux + 1) * std::max(2.0, 4.0 * log_n);
    Embedding emb;
    emb.image.assign(h.n, -1);
    for (auto& [key, verts] : buckets) {
        if (static_cast<double>(verts.size()) > theoretical + 1e-9)
            throw std::logic_error("embed_rational: bucket exceeds the class-structure bound");
        if (static_cast<int>(verts.size()) > host.blowup_size)
            throw std::runtime_error("embed_rational: blowup class overflow at bucket " +
                                     std::to_string(key) + " (" + std::to_string(verts.size()) +
                                     " > " + std::to_string(host.blowup_size) + ")");
        ProductVertex pv;
        pv.coords.assign(a, 0);
        std::int64_t rest = key;
        for (int i = a - 1; i >= 0; --i) {
            pv.coords[i] = static_cast<int>(rest % m);
            rest /= m;
        }
        for (std::size_t j = 0; j < verts.size(); ++j) {
            pv.slot = static_cast<int>(j);
            emb.image[verts[j]] = encode(pv, host);
        }
    }
    return emb;
}

// Family dispatch used by the CLI.
inline Embedding embed(const Graph& h, const UniversalHost& host, const EmbedOptions& opts = {}) {
    switch (host.family) {
        case Family::unbounded: return embed_unbounded(h, host);
        case Family::integer: return embed_integer(h, host, opts);
        case Family::rational: return embed_rational(h, host, opts.seed, opts.retry_cap);
    }
    throw std::logic_error("embed: unknown family");
}

// ---- embedding text format -------------------------------------------------
// Header "n_guest host_descriptor_hash", then one line "h g" per guest vertex.

inline void write_embedding_file(const std::string& path, const Embedding& emb,
                                 const std::string& host_hash) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for write: " + path);
    f << emb.image.size() << " " << host_hash << "\n";
    for (std::size_t v = 0; v < emb.image.size(); ++v) f << v << " " << emb.image[v] << "\n";
}

struct EmbeddingFile {
    Embedding embedding;
    std::string host_hash;
};

inline EmbeddingFile read_embedding_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    EmbeddingFile ef;
    std::int64_t n;
    if (!(f >> n >> ef.host_hash)) throw std::runtime_error("embedding file: bad header");
    ef.embedding.image.assign(n, -1);
    std::int64_t h, g;
    std::int64_t seen = 0;
    while (f >> h >> g) {
        if (h < 0 || h >= n) throw std::runtime_error("embedding file: guest vertex out of range");
        ef.embedding.image[h] = g;
        ++seen;
    }
    if (seen != n) throw std::runtime_error("embedding file: missing vertices");
    return ef;
}

}  // namespace unigraph
