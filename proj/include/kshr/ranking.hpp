#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "kshr/graph.hpp"

namespace kshr {

struct RankEntry {
    NodeId node;
    double score;
};

// Total ordering of all nodes by descending score, equal scores broken by
// ascending node id.
struct RankList {
    std::vector<RankEntry> entries;

    std::size_t size() const { return entries.size(); }
};

inline RankList make_rank_list(std::span<const double> scores) {
    RankList r;
    r.entries.resize(scores.size());
    for (std::size_t u = 0; u < scores.size(); ++u) {
        r.entries[u] = {static_cast<NodeId>(u), scores[u]};
    }
    std::sort(r.entries.begin(), r.entries.end(),
              [](const RankEntry& a, const RankEntry& b) {
                  if (a.score != b.score) {
                      return a.score > b.score;
                  }
                  return a.node < b.node;
              });
    return r;
}

inline std::vector<NodeId> top_k(const RankList& r, std::size_t k) {
    if (k > r.entries.size()) {
        throw std::out_of_range("top_k: k exceeds list size");
    }
    std::vector<NodeId> seeds(k);
    for (std::size_t i = 0; i < k; ++i) {
        seeds[i] = r.entries[i].node;
    }
    return seeds;
}

}  // namespace kshr
