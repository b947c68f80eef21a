#pragma once

#include <cmath>
#include <queue>
#include <vector>

#include "kshr/graph.hpp"

namespace kshr {

struct ShellIndex {
    std::vector<int> kshell;      // classical core numbers
    std::vector<double> wkshell;  // weighted k-shell values
};

// Classical core numbers by iterative peeling: for k = 0, 1, 2, ... remove
// every node whose remaining degree is <= k, in ascending node id within a
// round. Edge weights are ignored; isolated nodes get shell 0.
inline std::vector<int> kshell_decompose(const WeightedGraph& g) {
    const auto n = static_cast<std::size_t>(g.num_nodes());
    std::vector<int> deg(n);
    for (std::size_t u = 0; u < n; ++u) {
        deg[u] = static_cast<int>(g.degree(static_cast<NodeId>(u)));
    }
    std::vector<int> core(n, 0);
    std::vector<bool> removed(n, false);
    std::size_t remaining = n;
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (int k = 0; remaining > 0; ++k) {
        for (std::size_t u = 0; u < n; ++u) {
            if (!removed[u] && deg[u] <= k) {
                ready.push(static_cast<NodeId>(u));
            }
        }
        while (!ready.empty()) {
            const NodeId u = ready.top();
            ready.pop();
            if (removed[static_cast<std::size_t>(u)]) {
                continue;
            }
            removed[static_cast<std::size_t>(u)] = true;
            core[static_cast<std::size_t>(u)] = k;
            --remaining;
            for (NodeId v : g.neighbors(u)) {
                if (!removed[static_cast<std::size_t>(v)] &&
                    --deg[static_cast<std::size_t>(v)] == k) {
                    ready.push(v);
                }
            }
        }
    }
    return core;
}

// Weighted k-shell value of node i: its core number plus
// sum over direct neighbors j of sqrt(w_ij * core(j)).
inline std::vector<double> weighted_kshell_from_cores(const WeightedGraph& g,
                                                      const std::vector<int>& core) {
    const auto n = static_cast<std::size_t>(g.num_nodes());
    std::vector<double> wk(n);
    for (std::size_t u = 0; u < n; ++u) {
        double s = core[u];
        auto nb = g.neighbors(static_cast<NodeId>(u));
        auto wt = g.weights(static_cast<NodeId>(u));
        for (std::size_t i = 0; i < nb.size(); ++i) {
            s += std::sqrt(wt[i] * core[static_cast<std::size_t>(nb[i])]);
        }
        wk[u] = s;
    }
    return wk;
}

inline std::vector<double> weighted_kshell(const WeightedGraph& g) {
    return weighted_kshell_from_cores(g, kshell_decompose(g));
}

inline ShellIndex compute_shell_index(const WeightedGraph& g) {
    ShellIndex s;
    s.kshell = kshell_decompose(g);
    s.wkshell = weighted_kshell_from_cores(g, s.kshell);
    return s;
}

}  // namespace kshr
