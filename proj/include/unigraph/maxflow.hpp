#pragma once

// Dinic max-flow with int64 capacities. Used by the density oracle's
// feasibility test; kept minimal on purpose.

#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace unigraph {

class MaxFlow {
public:
    explicit MaxFlow(int n) : head_(n, -1), level_(n), iter_(n) {}

    void add_edge(int from, int to, std::int64_t cap) {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    std::int64_t run(int s, int t) {
        std::int64_t flow = 0;
        while (bfs(s, t)) {
            iter_ = head_;
            std::int64_t f;
            while ((f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) > 0) flow += f;
        }
        return flow;
    }

    // After run(): vertices reachable from s in the residual graph (the s-side
    // of a min cut).
    std::vector<bool> min_cut_side(int s) const {
        std::vector<bool> seen(head_.size(), false);
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int a = head_[u]; a >= 0; a = arcs_[a].next)
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = true;
                    stack.push_back(arcs_[a].to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int next;
        std::int64_t cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a = head_[u]; a >= 0; a = arcs_[a].next)
                if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[u] + 1;
                    q.push(arcs_[a].to);
                }
        }
        return level_[t] >= 0;
    }

    std::int64_t dfs(int u, int t, std::int64_t limit) {
        if (u == t) return limit;
        for (int& a = iter_[u]; a >= 0; a = arcs_[a].next) {
            Arc& arc = arcs_[a];
            if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
            std::int64_t f = dfs(arc.to, t, std::min(limit, arc.cap));
            if (f > 0) {
                arc.cap -= f;
                arcs_[a ^ 1].cap += f;
                return f;
            }
        }
        return 0;
    }

    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> iter_;
    std::vector<Arc> arcs_;
};

}  // namespace unigraph
