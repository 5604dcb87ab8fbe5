#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace ramsey::detail {

// Dinic max-flow on small networks; capacities are exact 64-bit integers.
class Dinic {
public:
    explicit Dinic(int n) : adj_(n), level_(n), iter_(n) {}

    void add_edge(int from, int to, std::int64_t cap) {
        adj_[from].push_back({to, static_cast<int>(adj_[to].size()), cap});
        adj_[to].push_back({from, static_cast<int>(adj_[from].size()) - 1, 0});
    }

    std::int64_t max_flow(int s, int t) {
        std::int64_t flow = 0;
        while (bfs(s, t)) {
            std::fill(iter_.begin(), iter_.end(), 0);
            while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max()))
                flow += f;
        }
        return flow;
    }

    // Source side of the min cut after max_flow (vertices reachable in the
    // residual network).
    std::vector<char> min_cut_source_side(int s) const {
        std::vector<char> seen(adj_.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& e : adj_[v])
                if (e.cap > 0 && !seen[e.to]) {
                    seen[e.to] = 1;
                    q.push(e.to);
                }
        }
        return seen;
    }

private:
    struct E {
        int to, rev;
        std::int64_t cap;
    };
    std::vector<std::vector<E>> adj_;
    std::vector<int> level_, iter_;

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& e : adj_[v])
                if (e.cap > 0 && level_[e.to] < 0) {
                    level_[e.to] = level_[v] + 1;
                    q.push(e.to);
                }
        }
        return level_[t] >= 0;
    }

    std::int64_t dfs(int v, int t, std::int64_t f) {
        if (v == t) return f;
        for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
            E& e = adj_[v][i];
            if (e.cap > 0 && level_[v] < level_[e.to]) {
                std::int64_t d = dfs(e.to, t, std::min(f, e.cap));
                if (d > 0) {
                    e.cap -= d;
                    adj_[e.to][e.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }
};

} // namespace ramsey::detail
