#pragma once

// Partition of the b-duplicated edge multiset H^(b) into k = ceil(b*m(H))
// parts whose components are simple unicyclic graphs. The matroid here is the
// bicircular matroid of the multigraph: a set is independent iff no duplicate
// (u,v) pair and no component with more edges than vertices. Partitioning
// uses the classical augmenting-path search in the exchange graph, with the
// independence oracle evaluated incrementally (union-find with per-component
// cycle flags plus a pair set for simplicity).

#include <cstdint>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "density.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace unigraph {

struct Decomposition {
    int b = 1;
    int k = 1;
    std::vector<std::tuple<int, int, int>> elements;  // (u, v, copy), lexicographic
    std::vector<int> part;                            // part index per element, in [0, k)
};

inline bool bicircular_independent(const MultiEdgeSet& edges, int n) {
    std::vector<int> parent(n), cycles(n, 0);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::unordered_set<std::int64_t> pairs;
    for (auto [u, v, c] : edges.items) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n || u == v) throw std::invalid_argument("bicircular_independent: bad edge");
        if (!pairs.insert(static_cast<std::int64_t>(u) * n + v).second) return false;
        int ru = find(u), rv = find(v);
        if (ru == rv) {
            if (++cycles[ru] > 1) return false;
        } else {
            parent[rv] = ru;
            cycles[ru] += cycles[rv];
            if (cycles[ru] > 1) return false;
        }
    }
    return true;
}

namespace detail {

class MatroidPartitioner {
public:
    MatroidPartitioner(int n, int k, const std::vector<std::tuple<int, int, int>>& elems)
        : n_(n), k_(k), elems_(elems), part_(elems.size(), -1), pos_(elems.size(), -1),
          pred_(elems.size(), -2), seen_(elems.size(), 0), stamp_(0),
          vmark_(n, 0), vparent_(n, -1), vparent_elem_(n, -1), vdeg_(n, 0), vstamp_(0) {
        parts_.resize(k);
        for (auto& p : parts_) {
            p.parent.resize(n);
            for (int i = 0; i < n; ++i) p.parent[i] = i;
            p.cyc.assign(n, 0);
            p.adj.assign(n, {});
        }
    }

    void insert(int e) {
        auto [u, v, c] = elems_[e];
        (void)c;
        for (int j = 0; j < k_; ++j)
            if (can_add(j, u, v)) {
                add_to_part(j, e);
                return;
            }
        augment(e);
    }

    const std::vector<int>& assignment() const { return part_; }

private:
    struct PartState {
        std::vector<int> parent;
        std::vector<char> cyc;  // valid at roots
        std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (nbr, elem)
        std::unordered_set<std::int64_t> pairs;
        std::vector<int> elems;

        int find(int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        }
    };

    std::int64_t pair_key(int u, int v) const {
        if (u > v) std::swap(u, v);
        return static_cast<std::int64_t>(u) * n_ + v;
    }

    bool can_add(int j, int u, int v) {
        PartState& p = parts_[j];
        if (p.pairs.count(pair_key(u, v))) return false;
        int ru = p.find(u), rv = p.find(v);
        if (ru == rv) return !p.cyc[ru];
        return !(p.cyc[ru] && p.cyc[rv]);
    }

    void add_to_part(int j, int e) {
        PartState& p = parts_[j];
        auto [u, v, c] = elems_[e];
        (void)c;
        p.pairs.insert(pair_key(u, v));
        p.adj[u].emplace_back(v, e);
        p.adj[v].emplace_back(u, e);
        pos_[e] = static_cast<int>(p.elems.size());
        p.elems.push_back(e);
        part_[e] = j;
        int ru = p.find(u), rv = p.find(v);
        if (ru == rv) {
            p.cyc[ru] = 1;
        } else {
            bool cy = p.cyc[ru] || p.cyc[rv];
            p.parent[rv] = ru;
            p.cyc[ru] = cy ? 1 : 0;
        }
    }

    void remove_from_part(int e) {
        int j = part_[e];
        PartState& p = parts_[j];
        auto [u, v, c] = elems_[e];
        (void)c;
        p.pairs.erase(pair_key(u, v));
        auto drop = [&](int w) {
            auto& a = p.adj[w];
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i].second == e) {
                    a[i] = a.back();
                    a.pop_back();
                    return;
                }
        };
        drop(u);
        drop(v);
        int last = p.elems.back();
        p.elems[pos_[e]] = last;
        pos_[last] = pos_[e];
        p.elems.pop_back();
        part_[e] = -1;
        pos_[e] = -1;
        // union-find does not support deletion: rebuild this part
        for (int i = 0; i < n_; ++i) p.parent[i] = i;
        std::fill(p.cyc.begin(), p.cyc.end(), 0);
        for (int ee : p.elems) {
            auto [a, b, cc] = elems_[ee];
            (void)cc;
            int ra = p.find(a), rb = p.find(b);
            if (ra == rb) {
                p.cyc[ra] = 1;
            } else {
                bool cy = p.cyc[ra] || p.cyc[rb];
                p.parent[rb] = ra;
                p.cyc[ra] = cy ? 1 : 0;
            }
        }
    }

    // Unique circuit of I_j + (u,v), as the set of part-j elements in it.
    std::vector<int> circuit_of(int j, int u, int v) {
        PartState& p = parts_[j];
        std::vector<int> out;
        auto key = pair_key(u, v);
        if (p.pairs.count(key)) {  // parallel pair: 2-cycle
            for (auto [w, e] : p.adj[u])
                if (w == v) {
                    out.push_back(e);
                    return out;
                }
            throw std::logic_error("circuit_of: pair set inconsistent");
        }
        int ru = p.find(u), rv = p.find(v);
        if (ru == rv) {
            // Same component, already cyclic: theta / figure-8 / dumbbell.
            std::vector<int> comp = gather_component(p, u);
            std::vector<int> core = two_core(p, comp);
            std::vector<int> z = core_edges(p, core);
            int skip = z.empty() ? -1 : z.front();
            std::vector<int> path = tree_path(p, u, v, skip);
            out = z;
            out.insert(out.end(), path.begin(), path.end());
            // Connector needed only if the new cycle avoids the old one.
            ++vstamp_;
            for (int w : core) vmark_[w] = vstamp_;
            bool touches = vmark_[u] == vstamp_ || vmark_[v] == vstamp_;
            std::vector<int> cx_verts{u, v};
            for (int e : path) {
                auto [a, b, cc] = elems_[e];
                (void)cc;
                cx_verts.push_back(a);
                cx_verts.push_back(b);
                if (vmark_[a] == vstamp_ || vmark_[b] == vstamp_) touches = true;
            }
            if (!touches) {
                std::vector<int> conn = connect_to_core(p, cx_verts, core);
                out.insert(out.end(), conn.begin(), conn.end());
            }
        } else {
            // Distinct components, both cyclic: dumbbell through the new edge.
            for (int w : {u, v}) {
                std::vector<int> comp = gather_component(p, w);
                std::vector<int> core = two_core(p, comp);
                std::vector<int> z = core_edges(p, core);
                out.insert(out.end(), z.begin(), z.end());
                std::vector<int> conn = connect_to_core(p, {w}, core);
                out.insert(out.end(), conn.begin(), conn.end());
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::vector<int> gather_component(PartState& p, int s) {
        ++vstamp_;
        std::vector<int> comp{s};
        vmark_[s] = vstamp_;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (auto [w, e] : p.adj[comp[i]]) {
                (void)e;
                if (vmark_[w] != vstamp_) {
                    vmark_[w] = vstamp_;
                    comp.push_back(w);
                }
            }
        return comp;
    }

    // Peel degree-1 vertices; for a unicyclic component the rest is its cycle.
    std::vector<int> two_core(PartState& p, const std::vector<int>& comp) {
        for (int w : comp) vdeg_[w] = static_cast<int>(p.adj[w].size());
        std::vector<int> stack;
        for (int w : comp)
            if (vdeg_[w] == 1) stack.push_back(w);
        ++vstamp_;  // vmark_ == vstamp_ marks peeled vertices
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            vmark_[w] = vstamp_;
            for (auto [x, e] : p.adj[w]) {
                (void)e;
                if (vmark_[x] != vstamp_ && --vdeg_[x] == 1) stack.push_back(x);
            }
        }
        std::vector<int> core;
        for (int w : comp)
            if (vmark_[w] != vstamp_) core.push_back(w);
        return core;
    }

    std::vector<int> core_edges(PartState& p, const std::vector<int>& core) {
        ++vstamp_;
        for (int w : core) vmark_[w] = vstamp_;
        std::vector<int> z;
        // parts are simple, so w < x picks each core edge exactly once
        for (int w : core)
            for (auto [x, e] : p.adj[w])
                if (vmark_[x] == vstamp_ && w < x) z.push_back(e);
        return z;
    }

    // Path u -> v inside the component, not using element `skip`; returns elements.
    std::vector<int> tree_path(PartState& p, int u, int v, int skip) {
        ++vstamp_;
        std::queue<int> q;
        q.push(u);
        vmark_[u] = vstamp_;
        vparent_[u] = -1;
        while (!q.empty()) {
            int w = q.front();
            q.pop();
            if (w == v) break;
            for (auto [x, e] : p.adj[w]) {
                if (e == skip || vmark_[x] == vstamp_) continue;
                vmark_[x] = vstamp_;
                vparent_[x] = w;
                vparent_elem_[x] = e;
                q.push(x);
            }
        }
        if (vmark_[v] != vstamp_) throw std::logic_error("tree_path: disconnected");
        std::vector<int> path;
        for (int w = v; w != u; w = vparent_[w]) path.push_back(vparent_elem_[w]);
        return path;
    }

    // Shortest path from any source vertex to the core, as elements.
    std::vector<int> connect_to_core(PartState& p, const std::vector<int>& sources,
                                     const std::vector<int>& core) {
        std::unordered_set<int> core_set(core.begin(), core.end());
        ++vstamp_;
        std::queue<int> q;
        int hit = -1;
        for (int s : sources) {
            if (vmark_[s] != vstamp_) {
                vmark_[s] = vstamp_;
                vparent_[s] = -1;
                q.push(s);
                if (core_set.count(s)) hit = s;
            }
        }
        while (hit < 0 && !q.empty()) {
            int w = q.front();
            q.pop();
            for (auto [x, e] : p.adj[w]) {
                if (vmark_[x] == vstamp_) continue;
                vmark_[x] = vstamp_;
                vparent_[x] = w;
                vparent_elem_[x] = e;
                if (core_set.count(x)) {
                    hit = x;
                    break;
                }
                q.push(x);
            }
        }
        if (hit < 0) throw std::logic_error("connect_to_core: core unreachable");
        std::vector<int> path;
        for (int w = hit; vparent_[w] >= 0; w = vparent_[w]) path.push_back(vparent_elem_[w]);
        return path;
    }

    void augment(int e0) {
        auto [u0, v0, c0] = elems_[e0];
        (void)c0;
        ++stamp_;
        std::queue<int> q;  // element ids; e0 acts as the virtual source
        int term_elem = -2, term_part = -1;
        for (int j = 0; j < k_ && term_elem == -2; ++j)
            for (int y : circuit_of(j, u0, v0)) {
                if (seen_[y] == stamp_) continue;
                seen_[y] = stamp_;
                pred_[y] = -1;  // -1 = source
                q.push(y);
            }
        while (term_elem == -2 && !q.empty()) {
            int x = q.front();
            q.pop();
            auto [ux, vx, cx] = elems_[x];
            (void)cx;
            for (int j = 0; j < k_; ++j) {
                if (j == part_[x]) continue;
                if (can_add(j, ux, vx)) {
                    term_elem = x;
                    term_part = j;
                    break;
                }
                for (int y : circuit_of(j, ux, vx)) {
                    if (seen_[y] == stamp_) continue;
                    seen_[y] = stamp_;
                    pred_[y] = x;
                    q.push(y);
                }
            }
        }
        if (term_elem == -2)
            throw std::logic_error("matroid partition: no augmenting path (k too small?)");
        // Chain e0 -> y1 -> ... -> yL (= term_elem); apply moves from the end.
        std::vector<int> chain;
        for (int cur = term_elem; cur != -1; cur = pred_[cur]) chain.push_back(cur);
        // chain is [yL, ..., y1]
        int target = term_part;
        for (int y : chain) {
            int from = part_[y];
            remove_from_part(y);
            if (!can_add(target, std::get<0>(elems_[y]), std::get<1>(elems_[y])))
                throw std::logic_error("matroid partition: invalid exchange step");
            add_to_part(target, y);
            target = from;
        }
        if (!can_add(target, u0, v0))
            throw std::logic_error("matroid partition: invalid final step");
        add_to_part(target, e0);
    }

    int n_, k_;
    const std::vector<std::tuple<int, int, int>>& elems_;
    std::vector<int> part_;
    std::vector<int> pos_;
    std::vector<int> pred_;
    std::vector<std::uint32_t> seen_;
    std::uint32_t stamp_;
    std::vector<std::uint32_t> vmark_;
    std::vector<int> vparent_, vparent_elem_, vdeg_;
    std::uint32_t vstamp_;
    std::vector<PartState> parts_;
};

}  // namespace detail

inline Decomposition decompose(const Graph& h, int b) {
    if (b < 1) throw std::invalid_argument("decompose: b must be >= 1");
    DensityReport rep = density(h);
    if (rep.density < Rational(1))
        throw std::invalid_argument("decompose: requires m(H) >= 1 (decomposition hypothesis)");
    Rational bm = Rational(b) * rep.density;
    BigInt kq;
    mpz_cdiv_q(kq.get_mpz_t(), bm.num().get_mpz_t(), bm.den().get_mpz_t());
    int k = static_cast<int>(kq.get_si());
    Decomposition dec;
    dec.b = b;
    dec.k = k;
    dec.elements = duplicate_edges(h, b).items;
    detail::MatroidPartitioner mp(h.n, k, dec.elements);
    for (int e = 0; e < static_cast<int>(dec.elements.size()); ++e) mp.insert(e);
    dec.part = mp.assignment();
    return dec;
}

// Per-part simple graphs on the same vertex set.
inline std::vector<Graph> decomposition_parts(const Decomposition& dec, int n) {
    std::vector<std::vector<std::pair<int, int>>> es(dec.k);
    for (std::size_t i = 0; i < dec.elements.size(); ++i) {
        auto [u, v, c] = dec.elements[i];
        (void)c;
        es[dec.part[i]].emplace_back(u, v);
    }
    std::vector<Graph> parts;
    parts.reserve(dec.k);
    for (auto& e : es) parts.push_back(from_edge_list(n, e));
    return parts;
}

// ---- decomposition text format ---------------------------------------------
// Header "b k", then one line per element: "u v copy part".

inline void write_decomposition(std::ostream& os, const Decomposition& dec) {
    os << dec.b << " " << dec.k << "\n";
    for (std::size_t i = 0; i < dec.elements.size(); ++i) {
        auto [u, v, c] = dec.elements[i];
        os << u << " " << v << " " << c << " " << dec.part[i] << "\n";
    }
}

inline Decomposition read_decomposition(std::istream& is) {
    Decomposition dec;
    if (!(is >> dec.b >> dec.k)) throw std::runtime_error("decomposition: bad header");
    int u, v, c, p;
    while (is >> u >> v >> c >> p) {
        dec.elements.emplace_back(u, v, c);
        dec.part.push_back(p);
    }
    return dec;
}

}  // namespace unigraph
