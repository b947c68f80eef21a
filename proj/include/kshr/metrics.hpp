#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kshr/graph.hpp"
#include "kshr/ranking.hpp"
#include "kshr/sir.hpp"

namespace kshr {

struct TauResult {
    double tau = 0.0;    // (concordant - discordant) / (n(n-1)/2)
    double tau_b = 0.0;  // tie-corrected denominator; NaN if degenerate
    long long concordant = 0;
    long long discordant = 0;
    int n = 0;
};

namespace detail {

// Strict inversions (a_i > a_j for i < j) by bottom-up merge sort.
inline long long count_inversions(std::vector<double>& a) {
    const std::size_t n = a.size();
    std::vector<double> buf(n);
    long long inversions = 0;
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
            const std::size_t mid = lo + width;
            const std::size_t hi = std::min(lo + 2 * width, n);
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) {
                if (a[i] <= a[j]) {
                    buf[k++] = a[i++];
                } else {
                    inversions += static_cast<long long>(mid - i);
                    buf[k++] = a[j++];
                }
            }
            while (i < mid) {
                buf[k++] = a[i++];
            }
            while (j < hi) {
                buf[k++] = a[j++];
            }
            std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
                      buf.begin() + static_cast<std::ptrdiff_t>(hi),
                      a.begin() + static_cast<std::ptrdiff_t>(lo));
        }
    }
    return inversions;
}

inline std::vector<double> scores_by_node(const RankList& r) {
    std::vector<double> s(r.entries.size(),
                          std::numeric_limits<double>::quiet_NaN());
    for (const RankEntry& e : r.entries) {
        const auto idx = static_cast<std::size_t>(e.node);
        if (e.node < 0 || idx >= s.size() || !std::isnan(s[idx])) {
            throw std::invalid_argument("rank list is not a total ranking of 0..n-1");
        }
        s[idx] = e.score;
    }
    return s;
}

}  // namespace detail

// Kendall rank correlation between two score-based rankings of the same
// node set. Pairs tied in either list count as neither concordant nor
// discordant; `tau` uses the tie-free denominator n(n-1)/2 while `tau_b`
// divides by the tie-corrected product.
inline TauResult kendall_tau(const RankList& r1, const RankList& r2) {
    if (r1.size() != r2.size() || r1.size() < 2) {
        throw std::invalid_argument("rank lists must cover the same nodes (n >= 2)");
    }
    const std::vector<double> x = detail::scores_by_node(r1);
    const std::vector<double> y = detail::scores_by_node(r2);
    const auto n = static_cast<long long>(x.size());

    std::vector<std::pair<double, double>> pairs(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        pairs[i] = {x[i], y[i]};
    }
    std::sort(pairs.begin(), pairs.end());

    const long long n0 = n * (n - 1) / 2;
    long long xtie = 0, joint = 0;
    for (std::size_t i = 0; i < pairs.size();) {
        std::size_t j = i;
        while (j < pairs.size() && pairs[j].first == pairs[i].first) {
            ++j;
        }
        const auto t = static_cast<long long>(j - i);
        xtie += t * (t - 1) / 2;
        for (std::size_t a = i; a < j;) {
            std::size_t b = a;
            while (b < j && pairs[b].second == pairs[a].second) {
                ++b;
            }
            const auto s = static_cast<long long>(b - a);
            joint += s * (s - 1) / 2;
            a = b;
        }
        i = j;
    }
    long long ytie = 0;
    {
        std::vector<double> ys = y;
        std::sort(ys.begin(), ys.end());
        for (std::size_t i = 0; i < ys.size();) {
            std::size_t j = i;
            while (j < ys.size() && ys[j] == ys[i]) {
                ++j;
            }
            const auto t = static_cast<long long>(j - i);
            ytie += t * (t - 1) / 2;
            i = j;
        }
    }

    std::vector<double> yseq(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        yseq[i] = pairs[i].second;
    }
    const long long dis = detail::count_inversions(yseq);
    const long long con = n0 - xtie - ytie + joint - dis;

    TauResult r;
    r.n = static_cast<int>(n);
    r.concordant = con;
    r.discordant = dis;
    r.tau = static_cast<double>(con - dis) / static_cast<double>(n0);
    const double denom = std::sqrt(static_cast<double>(n0 - xtie)) *
                         std::sqrt(static_cast<double>(n0 - ytie));
    r.tau_b = denom > 0.0 ? static_cast<double>(con - dis) / denom
                          : std::numeric_limits<double>::quiet_NaN();
    return r;
}

struct SpreaderDistance {
    double mean_distance = 0.0;  // over reachable seed pairs; NaN if none
    double excluded_fraction = 0.0;
    long long pairs_total = 0;
    long long pairs_unreachable = 0;
};

// Mean hop-count shortest-path distance over all unordered pairs of seed
// nodes; unreachable pairs are dropped from the mean and reported.
inline SpreaderDistance avg_spreader_distance(const WeightedGraph& g,
                                              std::span<const NodeId> seeds) {
    std::vector<NodeId> s(seeds.begin(), seeds.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() < 2) {
        throw std::invalid_argument("spreader distance needs at least two seeds");
    }
    for (NodeId u : s) {
        g.check_node(u);
    }

    const auto n = static_cast<std::size_t>(g.num_nodes());
    std::vector<int> dist(n);
    std::vector<NodeId> queue;
    queue.reserve(n);

    SpreaderDistance out;
    long long dist_sum = 0, reachable = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[static_cast<std::size_t>(s[i])] = 0;
        queue.push_back(s[i]);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const NodeId u = queue[qi];
            for (NodeId v : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            ++out.pairs_total;
            const int d = dist[static_cast<std::size_t>(s[j])];
            if (d < 0) {
                ++out.pairs_unreachable;
            } else {
                dist_sum += d;
                ++reachable;
            }
        }
    }
    out.mean_distance = reachable > 0
                            ? static_cast<double>(dist_sum) / static_cast<double>(reachable)
                            : std::numeric_limits<double>::quiet_NaN();
    out.excluded_fraction = static_cast<double>(out.pairs_unreachable) /
                            static_cast<double>(out.pairs_total);
    return out;
}

struct InfluencePoint {
    double fraction;
    double final_scale;
};

// Plot-ready summary of a spreader-fraction sweep: one (p, f(t_c)) row per
// fraction plus the averaged per-timestep curves, passed through untouched.
struct InfluenceCurve {
    std::vector<InfluencePoint> points;
    std::vector<std::pair<double, std::vector<double>>> per_step;
};

inline InfluenceCurve influence_curve(
    const std::vector<std::pair<double, SirOutcome>>& outcomes) {
    if (outcomes.empty()) {
        throw std::invalid_argument("influence curve needs at least one outcome");
    }
    InfluenceCurve c;
    for (const auto& [fraction, outcome] : outcomes) {
        c.points.push_back({fraction, outcome.final_scale});
        c.per_step.emplace_back(fraction, outcome.scale_per_step);
    }
    return c;
}

}  // namespace kshr
