#pragma once

// Forest and unicyclic-graph surgery shared by the embedders: breaking cycles
// in large components, splitting forests into small pieces, unfolding a
// unicyclic graph into a tree whose square contains it, and completing a
// forest to a spanning tree across leaves.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace unigraph {

namespace detail {

// Vertices left after repeatedly peeling degree-1 vertices (union of 2-cores).
inline std::vector<char> core_vertices(const Graph& g) {
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::vector<int> stack;
    std::vector<char> peeled(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        if (deg[v] == 1) stack.push_back(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        peeled[v] = 1;
        for (int w : g.adj[v])
            if (!peeled[w] && --deg[w] == 1) stack.push_back(w);
    }
    std::vector<char> core(g.n, 0);
    for (int v = 0; v < g.n; ++v) core[v] = !peeled[v] && g.degree(v) > 0;
    return core;
}

}  // namespace detail

// One cycle vertex (the smallest-id one) from every component that has a
// cycle and at least size_threshold vertices; components must be unicyclic.
inline std::vector<int> cycle_hitting_set(const std::vector<Graph>& parts, int size_threshold) {
    std::vector<int> picked;
    for (const Graph& g : parts) {
        int nc = 0;
        std::vector<int> comp = component_ids(g, &nc);
        std::vector<int> vcount(nc, 0), ecount(nc, 0), min_core(nc, -1);
        for (int v = 0; v < g.n; ++v) ++vcount[comp[v]];
        for (auto [u, v] : g.edges) ++ecount[comp[u]], (void)v;
        for (int c = 0; c < nc; ++c)
            if (ecount[c] > vcount[c])
                throw std::invalid_argument("cycle_hitting_set: component with more than one cycle");
        std::vector<char> core = detail::core_vertices(g);
        for (int v = 0; v < g.n; ++v)
            if (core[v] && (min_core[comp[v]] < 0 || v < min_core[comp[v]])) min_core[comp[v]] = v;
        for (int c = 0; c < nc; ++c)
            if (vcount[c] >= size_threshold && ecount[c] == vcount[c]) picked.push_back(min_core[c]);
    }
    std::sort(picked.begin(), picked.end());
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    return picked;
}

// Removal set R with |R| <= r leaving components of size <= ceil(n/r): root
// each tree and cut any vertex whose pending subtree weight exceeds the cap.
inline std::vector<int> split_forest(const Graph& f, int r) {
    if (r < 1) throw std::invalid_argument("split_forest: r must be >= 1");
    if (!is_forest(f)) throw std::invalid_argument("split_forest: input has a cycle");
    if (f.n == 0) return {};
    const int cap = (f.n + r - 1) / r;
    std::vector<int> removed;
    std::vector<int> pending(f.n, 0);
    std::vector<int> parent(f.n, -2);
    std::vector<int> order;
    order.reserve(f.n);
    for (int s = 0; s < f.n; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        order.push_back(s);
        for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
            int u = order[i];
            for (int w : f.adj[u])
                if (parent[w] == -2) {
                    parent[w] = u;
                    order.push_back(w);
                }
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        int weight = 1 + pending[v];
        if (weight > cap) {
            removed.push_back(v);
            weight = 0;
        }
        if (parent[v] >= 0) pending[parent[v]] += weight;
    }
    std::sort(removed.begin(), removed.end());
    return removed;
}

// Tree T on V(H) with max degree <= that of H and H inside T^2: replace the
// cycle v_1..v_k by the path v_1 v_k v_2 v_{k-1} v_3 ...
inline Graph unicyclic_to_tree(const Graph& h) {
    int nc = 0;
    component_ids(h, &nc);
    if (nc != 1) throw std::invalid_argument("unicyclic_to_tree: input not connected");
    if (h.e() > h.n) throw std::invalid_argument("unicyclic_to_tree: more than one cycle");
    if (h.e() < h.n) return h;  // already a tree
    std::vector<char> core = detail::core_vertices(h);
    int start = -1;
    for (int v = 0; v < h.n && start < 0; ++v)
        if (core[v]) start = v;
    std::vector<int> cycle{start};
    int prev = -1, cur = start;
    while (true) {
        int nxt = -1;
        for (int w : h.adj[cur])
            if (core[w] && w != prev && (nxt < 0 || w < nxt)) nxt = w;
        if (nxt == start || nxt < 0) break;
        cycle.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    const int k = static_cast<int>(cycle.size());
    std::vector<std::pair<int, int>> es;
    std::vector<char> on_cycle(h.n, 0);
    for (int v : cycle) on_cycle[v] = 1;
    for (auto [u, v] : h.edges)
        if (!(on_cycle[u] && on_cycle[v])) es.emplace_back(u, v);
    std::vector<int> zigzag;
    for (int i = 0, j = k - 1; i <= j;) {
        zigzag.push_back(cycle[i++]);
        if (i <= j) zigzag.push_back(cycle[j--]);
    }
    for (std::size_t i = 0; i + 1 < zigzag.size(); ++i) es.emplace_back(zigzag[i], zigzag[i + 1]);
    return from_edge_list(h.n, es);
}

// Cleanup shared by the product-host embedders: break one cycle vertex out of
// every large component, split the leftover forests, and report the surviving
// components per part. Components retaining a cycle are smaller than
// cycle_threshold and pass through whole.
struct CleanupPlan {
    std::vector<int> removed;  // cycle hits plus forest split vertices
    std::vector<std::vector<std::vector<int>>> residual_parts;  // per part, component vertex lists
};

inline CleanupPlan plan_cleanup(const std::vector<Graph>& parts, int cycle_threshold,
                                int split_r) {
    CleanupPlan plan;
    if (parts.empty()) return plan;
    const int n = parts.front().n;
    std::vector<char> removed(n, 0);
    for (int v : cycle_hitting_set(parts, cycle_threshold)) removed[v] = 1;
    for (const Graph& part : parts) {
        // forest formed by the acyclic residual components
        std::vector<std::pair<int, int>> alive_edges;
        for (auto [u, v] : part.edges)
            if (!removed[u] && !removed[v]) alive_edges.emplace_back(u, v);
        Graph alive = from_edge_list(n, alive_edges);
        int nc = 0;
        std::vector<int> comp = component_ids(alive, &nc);
        std::vector<int> vcount(nc, 0), ecount(nc, 0);
        for (int v = 0; v < n; ++v)
            if (!removed[v]) ++vcount[comp[v]];
        for (auto [u, v] : alive.edges) ++ecount[comp[u]], (void)v;
        std::vector<std::pair<int, int>> forest_edges;
        for (auto [u, v] : alive.edges)
            if (ecount[comp[u]] < vcount[comp[u]]) forest_edges.emplace_back(u, v);
        for (int v : split_forest(from_edge_list(n, forest_edges), split_r)) removed[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (removed[v]) plan.removed.push_back(v);
    for (const Graph& part : parts) {
        std::vector<int> comp(n, -1);
        std::vector<std::vector<int>> lists;
        std::vector<int> stack;
        for (int s = 0; s < n; ++s) {
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
        plan.residual_parts.push_back(std::move(lists));
    }
    return plan;
}

// Complete a forest to a spanning tree by chaining components through leaves
// (or isolated vertices); never raises any degree above max(delta(F), 2).
inline Graph forest_to_spanning_tree(const Graph& f, int degree_cap) {
    if (f.n < 1) throw std::invalid_argument("forest_to_spanning_tree: empty vertex set");
    if (!is_forest(f)) throw std::invalid_argument("forest_to_spanning_tree: input has a cycle");
    int nc = 0;
    std::vector<int> comp = component_ids(f, &nc);
    if (nc == 1) return f;
    if (degree_cap < 2)
        throw std::invalid_argument("forest_to_spanning_tree: degree cap below 2 with multiple components");
    // entry/exit leaf per component (same vertex only for singletons)
    std::vector<int> entry(nc, -1), exit(nc, -1);
    for (int v = 0; v < f.n; ++v) {
        int c = comp[v];
        if (f.degree(v) <= 1) {
            if (entry[c] < 0)
                entry[c] = v;
            else if (exit[c] < 0)
                exit[c] = v;
        }
    }
    for (int c = 0; c < nc; ++c)
        if (exit[c] < 0) exit[c] = entry[c];  // singleton component
    std::vector<std::pair<int, int>> es(f.edges);
    for (int c = 0; c + 1 < nc; ++c) es.emplace_back(exit[c], entry[c + 1]);
    return from_edge_list(f.n, es);
}

}  // namespace unigraph
