#pragma once

// Simple undirected graphs over dense integer vertex ids, plus the generic
// operations (square, blowup, induced subgraph) every other module builds on.
// Graphs are immutable after construction.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace unigraph {

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted, deduplicated
    std::vector<std::vector<int>> adj;       // sorted neighbor lists

    std::int64_t e() const { return static_cast<std::int64_t>(edges.size()); }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
        int w = (&a == &adj[u]) ? v : u;
        return std::binary_search(a.begin(), a.end(), w);
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    int max_degree() const {
        int d = 0;
        for (const auto& a : adj) d = std::max<int>(d, static_cast<int>(a.size()));
        return d;
    }
};

inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw std::invalid_argument("from_edge_list: negative vertex count");
    Graph g;
    g.n = n;
    g.edges.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u == v)
            throw std::invalid_argument("from_edge_list: self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("from_edge_list: endpoint out of range (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u > v) std::swap(u, v);
        g.edges.emplace_back(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

// Edge uv iff dist_G(u, v) is 1 or 2.
inline Graph square(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    std::vector<int> mark(g.n, -1);
    for (int u = 0; u < g.n; ++u) {
        mark[u] = u;
        for (int v : g.adj[u]) {
            if (v > u) out.emplace_back(u, v);
            for (int w : g.adj[v])
                if (w > u && mark[w] != u) {
                    mark[w] = u;
                    out.emplace_back(u, w);
                }
        }
    }
    return from_edge_list(g.n, out);
}

// b-blowup: each vertex becomes a b-clique; classes of adjacent vertices are
// completely joined. Vertex a of class u gets id u*b + a.
inline Graph blowup(const Graph& g, int b) {
    if (b < 1) throw std::invalid_argument("blowup: b must be >= 1");
    Graph out;
    out.n = g.n * b;
    out.edges.reserve(static_cast<std::size_t>(g.n) * b * (b - 1) / 2 +
                      static_cast<std::size_t>(g.e()) * b * b);
    for (int u = 0; u < g.n; ++u)
        for (int i = 0; i < b; ++i)
            for (int j = i + 1; j < b; ++j) out.edges.emplace_back(u * b + i, u * b + j);
    for (auto [u, v] : g.edges)
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < b; ++j) out.edges.emplace_back(u * b + i, v * b + j);
    for (auto& [x, y] : out.edges)
        if (x > y) std::swap(x, y);
    std::sort(out.edges.begin(), out.edges.end());
    out.adj.assign(out.n, {});
    for (auto [u, v] : out.edges) {
        out.adj[u].push_back(v);
        out.adj[v].push_back(u);
    }
    for (auto& a : out.adj) std::sort(a.begin(), a.end());
    return out;
}

// Induced subgraph on S, relabeled to 0..|S|-1 in sorted S order.
inline Graph induced(const Graph& g, const std::vector<int>& s) {
    std::vector<int> verts = s;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> label(g.n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= g.n)
            throw std::invalid_argument("induced: vertex out of range");
        label[verts[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges)
        if (label[u] >= 0 && label[v] >= 0) es.emplace_back(label[u], label[v]);
    return from_edge_list(static_cast<int>(verts.size()), es);
}

// Component id per vertex, ids dense from 0.
inline std::vector<int> component_ids(const Graph& g, int* count_out = nullptr) {
    std::vector<int> comp(g.n, -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.adj[u])
                if (comp[v] < 0) {
                    comp[v] = c;
                    stack.push_back(v);
                }
        }
        ++c;
    }
    if (count_out) *count_out = c;
    return comp;
}

inline bool is_forest(const Graph& g) {
    int c = 0;
    component_ids(g, &c);
    return g.e() == g.n - c;
}

// Multigraph edge multiset: (u, v, copy) triples with u < v, copies in [1, b].
struct MultiEdgeSet {
    std::vector<std::tuple<int, int, int>> items;
};

// Duplicate every edge of h b times: copies 1..b.
inline MultiEdgeSet duplicate_edges(const Graph& h, int b) {
    MultiEdgeSet m;
    m.items.reserve(h.edges.size() * b);
    for (auto [u, v] : h.edges)
        for (int c = 1; c <= b; ++c) m.items.emplace_back(u, v, c);
    return m;
}

// ---- graph text format ----------------------------------------------------
// Line 1: "n m"; then m lines "u v" with 0 <= u < v < n. '#' lines ignored.

inline void write_graph(std::ostream& os, const Graph& g) {
    os << g.n << " " << g.e() << "\n";
    for (auto [u, v] : g.edges) os << u << " " << v << "\n";
}

inline void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for write: " + path);
    write_graph(f, g);
}

inline Graph read_graph(std::istream& is) {
    std::string line;
    auto next_data_line = [&](std::string& out) {
        while (std::getline(is, line)) {
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos || line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };
    std::string header;
    if (!next_data_line(header)) throw std::runtime_error("graph file: missing header");
    std::istringstream hs(header);
    long long n, m;
    if (!(hs >> n >> m) || n < 0 || m < 0) throw std::runtime_error("graph file: bad header");
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::string l;
        if (!next_data_line(l)) throw std::runtime_error("graph file: truncated edge list");
        std::istringstream ls(l);
        long long u, v;
        if (!(ls >> u >> v)) throw std::runtime_error("graph file: bad edge line: " + l);
        if (!(0 <= u && u < v && v < n))
            throw std::runtime_error("graph file: edge out of order or range: " + l);
        es.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return from_edge_list(static_cast<int>(n), es);
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    return read_graph(f);
}

}  // namespace unigraph
