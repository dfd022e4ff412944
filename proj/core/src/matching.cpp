#include "matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace dadqc::detail {

namespace {

struct Blossom {
    int n;
    const std::vector<std::vector<int>>& adj;
    std::vector<int> match, parent, base;
    std::vector<bool> used, in_blossom;

    explicit Blossom(int n_, const std::vector<std::vector<int>>& adj_)
        : n(n_), adj(adj_), match(n_, -1), parent(n_, -1), base(n_),
          used(n_, false), in_blossom(n_, false) {}

    int lowest_common_base(int a, int b) {
        std::vector<bool> seen(n, false);
        for (;;) {
            a = base[a];
            seen[a] = true;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = true;
            in_blossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    // BFS for an augmenting path from root; applies it if found.
    bool augment_from(int root) {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (const int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    const int cur_base = lowest_common_base(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i) {
                        if (in_blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) {
                        // Augment: alternate matched/unmatched along parents.
                        int u = to;
                        while (u != -1) {
                            const int pv = parent[u];
                            const int next = match[pv];
                            match[u] = pv;
                            match[pv] = u;
                            u = next;
                        }
                        return true;
                    }
                    used[match[to]] = true;
                    q.push(match[to]);
                }
            }
        }
        return false;
    }
};

}  // namespace

std::vector<int> max_matching(int n, const std::vector<std::vector<int>>& adj) {
    Blossom solver(n, adj);
    for (int v = 0; v < n; ++v) {
        if (solver.match[v] == -1) solver.augment_from(v);
    }
    return solver.match;
}

}  // namespace dadqc::detail
