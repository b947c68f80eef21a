#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kshr/graph.hpp"
#include "kshr/ranking.hpp"
#include "kshr/shell.hpp"

namespace kshr {

// Equivalent constant of two springs in series: 1/k = 1/k1 + 1/k2.
// Always below min(k1, k2).
inline double combine_series(double k1, double k2) {
    if (!(k1 > 0.0) || !(k2 > 0.0)) {
        throw std::domain_error("spring constants must be > 0");
    }
    return k1 * k2 / (k1 + k2);
}

// Equivalent constant of two springs in parallel: k = k1 + k2.
inline double combine_parallel(double k1, double k2) {
    if (!(k1 > 0.0) || !(k2 > 0.0)) {
        throw std::domain_error("spring constants must be > 0");
    }
    return k1 + k2;
}

// Equivalent spring constants from one source node to every node within
// three hops, keyed by node id (ascending).
struct SpringMap {
    NodeId source = 0;
    std::vector<std::pair<NodeId, double>> constants;

    const double* find(NodeId v) const {
        auto it = std::lower_bound(constants.begin(), constants.end(), v,
                                   [](const auto& e, NodeId x) { return e.first < x; });
        return (it != constants.end() && it->first == v) ? &it->second : nullptr;
    }
    double at(NodeId v) const {
        const double* p = find(v);
        if (!p) {
            throw std::out_of_range("node not within three hops of source");
        }
        return *p;
    }
};

namespace detail {

// Reusable buffers for the per-source reduction; sized once per graph so a
// full ranking pass only touches the three-hop ball of each source.
struct SpringWorkspace {
    std::vector<int> level;
    std::vector<double> cval;
    std::vector<double> base;
    std::array<std::vector<NodeId>, 4> by_level;
    std::vector<NodeId> touched;

    void init(std::size_t n) {
        level.assign(n, -1);
        cval.assign(n, 0.0);
        base.assign(n, 0.0);
    }
};

// Series/parallel reduction over a depth-3 BFS. Every edge whose endpoints
// sit on consecutive levels is relaxed away from the source; edges inside
// level 1 or level 2 are relaxed in both directions; edges back toward the
// source and edges joining two depth-3 nodes are skipped. A relaxation of
// edge (p, v) contributes series(c_p, w_pv) -- just w_pv when p is the
// source -- and repeated contributions to the same node combine in
// parallel, i.e. they add. Within one level all contributions are computed
// from the constants as they stood when the level started, so the result
// does not depend on sweep order.
inline void spring_reduce_into(const WeightedGraph& g, NodeId source,
                               SpringWorkspace& ws) {
    for (NodeId u : ws.touched) {
        ws.level[static_cast<std::size_t>(u)] = -1;
        ws.cval[static_cast<std::size_t>(u)] = 0.0;
    }
    ws.touched.clear();
    for (auto& lv : ws.by_level) {
        lv.clear();
    }

    ws.level[static_cast<std::size_t>(source)] = 0;
    ws.touched.push_back(source);
    ws.by_level[0].push_back(source);
    for (int depth = 0; depth < 3; ++depth) {
        for (NodeId u : ws.by_level[static_cast<std::size_t>(depth)]) {
            for (NodeId v : g.neighbors(u)) {
                if (ws.level[static_cast<std::size_t>(v)] < 0) {
                    ws.level[static_cast<std::size_t>(v)] = depth + 1;
                    ws.touched.push_back(v);
                    ws.by_level[static_cast<std::size_t>(depth) + 1].push_back(v);
                }
            }
        }
        auto& next = ws.by_level[static_cast<std::size_t>(depth) + 1];
        std::sort(next.begin(), next.end());
    }

    {
        auto nb = g.neighbors(source);
        auto wt = g.weights(source);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            ws.cval[static_cast<std::size_t>(nb[i])] += wt[i];
        }
    }
    for (int L = 1; L <= 2; ++L) {
        const auto& nodes = ws.by_level[static_cast<std::size_t>(L)];
        for (NodeId p : nodes) {
            ws.base[static_cast<std::size_t>(p)] = ws.cval[static_cast<std::size_t>(p)];
        }
        for (NodeId p : nodes) {
            const double cp = ws.base[static_cast<std::size_t>(p)];
            auto nb = g.neighbors(p);
            auto wt = g.weights(p);
            for (std::size_t i = 0; i < nb.size(); ++i) {
                const int lv = ws.level[static_cast<std::size_t>(nb[i])];
                if (lv == L || lv == L + 1) {
                    ws.cval[static_cast<std::size_t>(nb[i])] +=
                        combine_series(cp, wt[i]);
                }
            }
        }
    }
}

}  // namespace detail

inline SpringMap spring_reduce(const WeightedGraph& g, NodeId source) {
    g.check_node(source);
    detail::SpringWorkspace ws;
    ws.init(static_cast<std::size_t>(g.num_nodes()));
    detail::spring_reduce_into(g, source, ws);
    SpringMap m;
    m.source = source;
    for (int L = 1; L <= 3; ++L) {
        for (NodeId v : ws.by_level[static_cast<std::size_t>(L)]) {
            m.constants.emplace_back(v, ws.cval[static_cast<std::size_t>(v)]);
        }
    }
    std::sort(m.constants.begin(), m.constants.end());
    return m;
}

struct KshrOptions {
    // Score with the mean equivalent constant over the three-hop
    // neighborhood instead of the sum.
    bool mean_over_neighborhood = false;
};

// KSHR centrality: for each node, the summed equivalent spring constants
// to all nodes within three hops, divided by the node's weighted k-shell
// value. Isolated nodes score 0 so that the ranking stays total.
inline RankList kshr_scores(const WeightedGraph& g, const KshrOptions& opts = {}) {
    const auto n = static_cast<std::size_t>(g.num_nodes());
    const ShellIndex shell = compute_shell_index(g);
    detail::SpringWorkspace ws;
    ws.init(n);
    std::vector<double> scores(n, 0.0);
    for (std::size_t src = 0; src < n; ++src) {
        detail::spring_reduce_into(g, static_cast<NodeId>(src), ws);
        double total = 0.0;
        std::size_t reached = 0;
        for (int L = 1; L <= 3; ++L) {
            for (NodeId v : ws.by_level[static_cast<std::size_t>(L)]) {
                total += ws.cval[static_cast<std::size_t>(v)];
                ++reached;
            }
        }
        if (reached == 0) {
            continue;
        }
        double score = total / shell.wkshell[src];
        if (opts.mean_over_neighborhood) {
            score /= static_cast<double>(reached);
        }
        scores[src] = score;
    }
    return make_rank_list(scores);
}

}  // namespace kshr
