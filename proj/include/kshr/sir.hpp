#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "kshr/graph.hpp"
#include "kshr/rng.hpp"

namespace kshr {

struct SirParams {
    double beta = 0.01;     // infection probability per infected-susceptible contact
    double gamma = 1.0;     // recovery probability per step
    int runs = 100;         // Monte Carlo repetitions
    int max_steps = 1000000;
    // When set, a contact over edge weight w transmits with probability
    // 1 - (1 - beta)^w instead of plain beta.
    bool weight_proportional = false;
};

struct SirOutcome {
    // Mean of (|I| + |R|) / n at termination over all runs.
    double final_scale = 0.0;
    // Mean infected-plus-recovered fraction per timestep; runs that end
    // early hold their final value. Entry 0 is the seeded fraction.
    std::vector<double> scale_per_step;
    // Ever-infected node count of each run at termination.
    std::vector<int> per_run_finals;
};

namespace detail {

inline void check_sir_params(const SirParams& p) {
    if (!(p.beta >= 0.0 && p.beta <= 1.0)) {
        throw std::invalid_argument("beta must be in [0, 1]");
    }
    if (!(p.gamma > 0.0 && p.gamma <= 1.0)) {
        throw std::invalid_argument("gamma must be in (0, 1]");
    }
    if (p.runs < 1) {
        throw std::invalid_argument("runs must be >= 1");
    }
}

}  // namespace detail

// Discrete-time stochastic SIR with synchronous updates: each step, every
// infected node tries to infect each susceptible neighbor with probability
// beta, then recovers with probability gamma; nodes infected this step
// start transmitting next step. A run ends when no infected remain (or at
// max_steps). The master seed streams one sub-seed per run, so outcomes
// are reproducible and independent of run execution order.
inline SirOutcome sir_simulate(const WeightedGraph& g, std::span<const NodeId> seeds,
                               const SirParams& p, std::uint64_t seed) {
    detail::check_sir_params(p);
    if (seeds.empty()) {
        throw std::invalid_argument("seed set must be non-empty");
    }
    std::vector<NodeId> seed_set(seeds.begin(), seeds.end());
    std::sort(seed_set.begin(), seed_set.end());
    seed_set.erase(std::unique(seed_set.begin(), seed_set.end()), seed_set.end());
    for (NodeId s : seed_set) {
        g.check_node(s);
    }

    const auto n = static_cast<std::size_t>(g.num_nodes());
    enum : std::uint8_t { kSusceptible = 0, kInfected = 1, kRecovered = 2 };

    SirOutcome outcome;
    outcome.per_run_finals.reserve(static_cast<std::size_t>(p.runs));
    // Integer infected counts are summed across runs and divided once at
    // the end, so degenerate cases (beta = 0, full seeding) come out exact.
    std::vector<long long> count_sum;  // padded running sums across runs
    long long finals_prefix = 0;       // sum of final counts of finished runs

    std::vector<std::uint8_t> state(n);
    std::vector<NodeId> frontier, newly, survivors, merged;

    for (int run = 0; run < p.runs; ++run) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(run)));
        std::fill(state.begin(), state.end(), kSusceptible);
        frontier = seed_set;
        for (NodeId s : frontier) {
            state[static_cast<std::size_t>(s)] = kInfected;
        }
        std::size_t ever = frontier.size();

        std::size_t t = 0;
        auto record = [&](std::size_t count) {
            if (t < count_sum.size()) {
                count_sum[t] += static_cast<long long>(count);
            } else {
                count_sum.push_back(finals_prefix + static_cast<long long>(count));
            }
            ++t;
        };
        record(ever);

        while (!frontier.empty() && t <= static_cast<std::size_t>(p.max_steps)) {
            newly.clear();
            for (NodeId u : frontier) {
                auto nb = g.neighbors(u);
                auto wt = g.weights(u);
                for (std::size_t e = 0; e < nb.size(); ++e) {
                    const auto v = static_cast<std::size_t>(nb[e]);
                    if (state[v] != kSusceptible) {
                        continue;
                    }
                    const double prob = p.weight_proportional
                                            ? 1.0 - std::pow(1.0 - p.beta, wt[e])
                                            : p.beta;
                    if (rng.next_unit() < prob) {
                        state[v] = kInfected;
                        newly.push_back(nb[e]);
                    }
                }
            }
            survivors.clear();
            for (NodeId u : frontier) {
                if (rng.next_unit() < p.gamma) {
                    state[static_cast<std::size_t>(u)] = kRecovered;
                } else {
                    survivors.push_back(u);
                }
            }
            ever += newly.size();
            std::sort(newly.begin(), newly.end());
            merged.clear();
            std::merge(survivors.begin(), survivors.end(), newly.begin(),
                       newly.end(), std::back_inserter(merged));
            frontier.swap(merged);
            record(ever);
        }

        for (std::size_t pad = t; pad < count_sum.size(); ++pad) {
            count_sum[pad] += static_cast<long long>(ever);
        }
        finals_prefix += static_cast<long long>(ever);
        outcome.per_run_finals.push_back(static_cast<int>(ever));
    }

    const double denom = static_cast<double>(p.runs) * static_cast<double>(n);
    outcome.final_scale = static_cast<double>(finals_prefix) / denom;
    outcome.scale_per_step.resize(count_sum.size());
    for (std::size_t i = 0; i < count_sum.size(); ++i) {
        outcome.scale_per_step[i] = static_cast<double>(count_sum[i]) / denom;
    }
    return outcome;
}

// Spreading strength of every node: the averaged final scale when that
// node is the sole seed. This is the ground-truth ranking the rank
// correlation metrics compare against.
inline std::vector<double> sir_node_strength(const WeightedGraph& g,
                                             const SirParams& p,
                                             std::uint64_t seed) {
    const auto n = static_cast<std::size_t>(g.num_nodes());
    std::vector<double> strength(n);
    for (std::size_t u = 0; u < n; ++u) {
        const NodeId node = static_cast<NodeId>(u);
        const SirOutcome o =
            sir_simulate(g, std::span<const NodeId>(&node, 1), p,
                         Rng::derive(seed, 0x5eed0000u + u));
        strength[u] = o.final_scale;
    }
    return strength;
}

}  // namespace kshr
