#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "kshr/graph.hpp"
#include "kshr/ranking.hpp"
#include "kshr/shell.hpp"

namespace kshr {

inline double weighted_degree(const WeightedGraph& g, NodeId u) {
    double s = 0.0;
    for (double w : g.weights(u)) {
        s += w;
    }
    return s;
}

// Strength ranking: score(u) = sum of incident edge weights.
inline RankList weighted_degree_rank(const WeightedGraph& g) {
    const auto n = static_cast<std::size_t>(g.num_nodes());
    std::vector<double> scores(n);
    for (std::size_t u = 0; u < n; ++u) {
        scores[u] = weighted_degree(g, static_cast<NodeId>(u));
    }
    return make_rank_list(scores);
}

struct EigenvectorResult {
    RankList ranking;
    bool converged = true;
    int iterations = 0;
};

// Dominant eigenvector of the weighted adjacency by shifted power
// iteration (y = Ax + x; the shift keeps bipartite components from
// oscillating). Disconnected graphs are handled per component, each
// normalized to unit maximum entry; isolated nodes score 0.
inline EigenvectorResult weighted_eigenvector_rank(const WeightedGraph& g,
                                                   double tol = 1e-13,
                                                   int max_iter = 100000) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be > 0");
    }
    const auto n = static_cast<std::size_t>(g.num_nodes());
    std::vector<double> scores(n, 0.0);
    std::vector<int> comp(n, -1);
    std::vector<NodeId> members;
    std::vector<double> x, y;
    EigenvectorResult result;

    int comp_id = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (comp[root] >= 0 || g.degree(static_cast<NodeId>(root)) == 0) {
            continue;
        }
        members.clear();
        members.push_back(static_cast<NodeId>(root));
        comp[root] = comp_id;
        for (std::size_t qi = 0; qi < members.size(); ++qi) {
            for (NodeId v : g.neighbors(members[qi])) {
                if (comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = comp_id;
                    members.push_back(v);
                }
            }
        }
        std::sort(members.begin(), members.end());

        x.assign(members.size(), 1.0);
        y.assign(members.size(), 0.0);
        std::vector<std::size_t> local(n);
        for (std::size_t i = 0; i < members.size(); ++i) {
            local[static_cast<std::size_t>(members[i])] = i;
        }
        bool converged = false;
        int it = 0;
        for (; it < max_iter; ++it) {
            double ymax = 0.0;
            for (std::size_t i = 0; i < members.size(); ++i) {
                auto nb = g.neighbors(members[i]);
                auto wt = g.weights(members[i]);
                double acc = x[i];
                for (std::size_t e = 0; e < nb.size(); ++e) {
                    acc += wt[e] * x[local[static_cast<std::size_t>(nb[e])]];
                }
                y[i] = acc;
                ymax = std::max(ymax, acc);
            }
            double diff = 0.0;
            for (std::size_t i = 0; i < members.size(); ++i) {
                y[i] /= ymax;
                diff = std::max(diff, std::abs(y[i] - x[i]));
            }
            x.swap(y);
            if (diff < tol) {
                converged = true;
                ++it;
                break;
            }
        }
        if (!converged) {
            result.converged = false;
        }
        result.iterations = std::max(result.iterations, it);
        for (std::size_t i = 0; i < members.size(); ++i) {
            scores[static_cast<std::size_t>(members[i])] = x[i];
        }
        ++comp_id;
    }
    result.ranking = make_rank_list(scores);
    return result;
}

struct VoteElection {
    NodeId node;
    double votes;
};

// Weighted VoteRank: every node starts with voting ability 1; a node's
// vote count is sum_{v in N(u)} w_uv * ability(v). Each round elects the
// unelected node with the most votes (ties to the smaller id), zeroes its
// ability and lowers each neighbor's ability by 1 / mean weighted degree,
// floored at 0.
inline std::vector<VoteElection> weighted_voterank_detailed(const WeightedGraph& g,
                                                            std::size_t k) {
    const auto n = static_cast<std::size_t>(g.num_nodes());
    if (k < 1 || k > n) {
        throw std::out_of_range("voterank: k must be in [1, n]");
    }
    double total_strength = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
        total_strength += weighted_degree(g, static_cast<NodeId>(u));
    }
    const double mean_strength = total_strength / static_cast<double>(n);
    const double suppression = mean_strength > 0.0 ? 1.0 / mean_strength : 0.0;

    std::vector<double> ability(n, 1.0);
    std::vector<bool> elected(n, false);
    std::vector<VoteElection> out;
    out.reserve(k);
    for (std::size_t round = 0; round < k; ++round) {
        NodeId best = -1;
        double best_votes = -1.0;
        for (std::size_t u = 0; u < n; ++u) {
            if (elected[u]) {
                continue;
            }
            auto nb = g.neighbors(static_cast<NodeId>(u));
            auto wt = g.weights(static_cast<NodeId>(u));
            double votes = 0.0;
            for (std::size_t e = 0; e < nb.size(); ++e) {
                votes += wt[e] * ability[static_cast<std::size_t>(nb[e])];
            }
            if (votes > best_votes) {
                best_votes = votes;
                best = static_cast<NodeId>(u);
            }
        }
        elected[static_cast<std::size_t>(best)] = true;
        ability[static_cast<std::size_t>(best)] = 0.0;
        for (NodeId v : g.neighbors(best)) {
            ability[static_cast<std::size_t>(v)] =
                std::max(0.0, ability[static_cast<std::size_t>(v)] - suppression);
        }
        out.push_back({best, best_votes});
    }
    return out;
}

inline std::vector<NodeId> weighted_voterank(const WeightedGraph& g, std::size_t k) {
    std::vector<NodeId> seeds;
    seeds.reserve(k);
    for (const VoteElection& e : weighted_voterank_detailed(g, k)) {
        seeds.push_back(e.node);
    }
    return seeds;
}

// Ranking directly by weighted k-shell value.
inline RankList weighted_kshell_rank(const WeightedGraph& g) {
    return make_rank_list(weighted_kshell(g));
}

}  // namespace kshr
