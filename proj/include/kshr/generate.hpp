#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kshr/graph.hpp"
#include "kshr/rng.hpp"

namespace kshr {

// Barabási–Albert preferential attachment with integer edge weights drawn
// uniformly from [1, 10]. Starts from a complete graph on the first m
// nodes; every later node attaches to m distinct existing nodes chosen
// with probability proportional to degree. Deterministic for a fixed seed.
inline WeightedGraph generate_ba_weighted(NodeId n, NodeId m, std::uint64_t seed) {
    if (m < 1 || n <= m) {
        throw std::invalid_argument("generator requires n > m >= 1");
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));

    auto draw_weight = [&] { return static_cast<double>(rng.next_int(1, 10)); };

    // Attachment pool: node id repeated once per incident edge.
    std::vector<NodeId> pool;
    pool.reserve(2 * static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (NodeId u = 0; u < m; ++u) {
        for (NodeId v = u + 1; v < m; ++v) {
            edges.push_back({u, v, draw_weight()});
            pool.push_back(u);
            pool.push_back(v);
        }
    }

    std::vector<bool> chosen(static_cast<std::size_t>(n), false);
    std::vector<NodeId> targets;
    for (NodeId t = m; t < n; ++t) {
        targets.clear();
        if (t == m) {
            // m distinct targets out of m existing nodes: all of them.
            for (NodeId u = 0; u < m; ++u) {
                targets.push_back(u);
            }
        } else {
            while (targets.size() < static_cast<std::size_t>(m)) {
                const NodeId cand = pool[rng.next_below(pool.size())];
                if (!chosen[static_cast<std::size_t>(cand)]) {
                    chosen[static_cast<std::size_t>(cand)] = true;
                    targets.push_back(cand);
                }
            }
            for (NodeId u : targets) {
                chosen[static_cast<std::size_t>(u)] = false;
            }
        }
        for (NodeId u : targets) {
            edges.push_back({u, t, draw_weight()});
            pool.push_back(u);
            pool.push_back(t);
        }
    }
    return WeightedGraph::from_edges(n, edges);
}

}  // namespace kshr
