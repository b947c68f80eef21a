#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kshr/format.hpp"

namespace kshr {

using NodeId = std::int32_t;

struct Edge {
    NodeId u;
    NodeId v;
    double weight;
};

// Malformed input line; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : std::runtime_error(msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Structurally valid input that violates a data contract (missing file,
// non-positive weight without the shift option, ...).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Undirected simple graph with strictly positive edge weights, stored in
// CSR form with adjacency lists sorted by neighbor id. Immutable after
// construction, so instances can be shared freely across threads.
class WeightedGraph {
public:
    WeightedGraph() = default;

    // `edges` must contain each undirected edge once, with no self-loops,
    // no duplicates and positive weights; `labels` (optional) maps dense
    // ids back to the original node names.
    static WeightedGraph from_edges(NodeId n, const std::vector<Edge>& edges,
                                    std::vector<std::string> labels = {}) {
        if (n < 1) {
            throw std::invalid_argument("graph needs at least one node");
        }
        if (!labels.empty() && labels.size() != static_cast<std::size_t>(n)) {
            throw std::invalid_argument("label count does not match node count");
        }
        std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
        for (const Edge& e : edges) {
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
                throw std::invalid_argument("edge endpoint out of range");
            }
            if (e.u == e.v) {
                throw std::invalid_argument("self-loops are not allowed");
            }
            if (!(e.weight > 0.0)) {
                throw std::invalid_argument("edge weights must be > 0");
            }
            ++deg[static_cast<std::size_t>(e.u)];
            ++deg[static_cast<std::size_t>(e.v)];
        }

        WeightedGraph g;
        g.n_ = n;
        g.num_edges_ = edges.size();
        g.labels_ = std::move(labels);
        g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (NodeId u = 0; u < n; ++u) {
            g.offsets_[static_cast<std::size_t>(u) + 1] =
                g.offsets_[static_cast<std::size_t>(u)] + deg[static_cast<std::size_t>(u)];
        }
        g.nbr_.resize(2 * edges.size());
        g.wgt_.resize(2 * edges.size());
        std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        for (const Edge& e : edges) {
            g.nbr_[cursor[static_cast<std::size_t>(e.u)]] = e.v;
            g.wgt_[cursor[static_cast<std::size_t>(e.u)]++] = e.weight;
            g.nbr_[cursor[static_cast<std::size_t>(e.v)]] = e.u;
            g.wgt_[cursor[static_cast<std::size_t>(e.v)]++] = e.weight;
        }
        g.sort_adjacency();
        for (NodeId u = 0; u < n; ++u) {
            auto nb = g.neighbors(u);
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
                throw std::invalid_argument("duplicate edges are not allowed");
            }
        }
        return g;
    }

    NodeId num_nodes() const { return n_; }
    std::size_t num_edges() const { return num_edges_; }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {nbr_.data() + offsets_[static_cast<std::size_t>(u)],
                nbr_.data() + offsets_[static_cast<std::size_t>(u) + 1]};
    }
    std::span<const double> weights(NodeId u) const {
        return {wgt_.data() + offsets_[static_cast<std::size_t>(u)],
                wgt_.data() + offsets_[static_cast<std::size_t>(u) + 1]};
    }
    std::size_t degree(NodeId u) const {
        return offsets_[static_cast<std::size_t>(u) + 1] -
               offsets_[static_cast<std::size_t>(u)];
    }

    bool has_labels() const { return !labels_.empty(); }
    std::string label(NodeId u) const {
        return labels_.empty() ? std::to_string(u)
                               : labels_[static_cast<std::size_t>(u)];
    }

    // Each undirected edge once, u < v, ascending.
    std::vector<Edge> edge_list() const {
        std::vector<Edge> out;
        out.reserve(num_edges_);
        for (NodeId u = 0; u < n_; ++u) {
            auto nb = neighbors(u);
            auto wt = weights(u);
            for (std::size_t i = 0; i < nb.size(); ++i) {
                if (u < nb[i]) {
                    out.push_back({u, nb[i], wt[i]});
                }
            }
        }
        return out;
    }

    void check_node(NodeId u) const {
        if (u < 0 || u >= n_) {
            throw std::out_of_range("node id " + std::to_string(u) +
                                    " outside [0, " + std::to_string(n_) + ")");
        }
    }

private:
    void sort_adjacency() {
        std::vector<std::pair<NodeId, double>> scratch;
        for (NodeId u = 0; u < n_; ++u) {
            const std::size_t lo = offsets_[static_cast<std::size_t>(u)];
            const std::size_t hi = offsets_[static_cast<std::size_t>(u) + 1];
            scratch.assign(hi - lo, {});
            for (std::size_t i = lo; i < hi; ++i) {
                scratch[i - lo] = {nbr_[i], wgt_[i]};
            }
            std::sort(scratch.begin(), scratch.end());
            for (std::size_t i = lo; i < hi; ++i) {
                nbr_[i] = scratch[i - lo].first;
                wgt_[i] = scratch[i - lo].second;
            }
        }
    }

    NodeId n_ = 0;
    std::size_t num_edges_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> nbr_;
    std::vector<double> wgt_;
    std::vector<std::string> labels_;
};

enum class MergeRule { KeepMax, KeepMin, Sum };

struct IngestOptions {
    MergeRule merge_rule = MergeRule::KeepMax;
    // Remap weights by w' = w - min_w + 1 when the input contains
    // non-positive weights (otherwise such inputs are rejected).
    bool weight_shift = false;
};

struct IngestStats {
    std::size_t lines_read = 0;
    std::size_t self_loops_skipped = 0;
    std::size_t duplicates_merged = 0;
    bool shift_applied = false;
    double min_weight_seen = 0.0;
};

struct LoadedGraph {
    WeightedGraph graph;
    IngestStats stats;
};

namespace detail {

inline bool parse_weight(const std::string& tok, double& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

}  // namespace detail

// Reads a whitespace- or comma-delimited edge list ("u v" or "u v w", '#'
// starts a comment line). Node names may be arbitrary strings; they are
// densified to 0..n-1 in order of first appearance and kept as labels.
// Parallel edges are merged per options.merge_rule, arcs given in both
// directions collapse to one undirected edge, and self-loops are skipped
// (counted in the returned stats).
inline LoadedGraph load_edge_list(const std::string& path,
                                  const IngestOptions& options = {}) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open edge list: " + path);
    }

    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    auto intern = [&](const std::string& name) {
        auto [it, inserted] = ids.try_emplace(name, static_cast<NodeId>(labels.size()));
        if (inserted) {
            labels.push_back(name);
        }
        return it->second;
    };

    struct RawEdge {
        NodeId u, v;
        double w;
        std::size_t line;
    };
    std::vector<RawEdge> raw;
    IngestStats stats;
    double min_w = std::numeric_limits<double>::infinity();

    std::string line;
    std::size_t lineno = 0;
    std::vector<std::string> toks;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        toks.clear();
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',')) {
                ++i;
            }
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != ',') {
                ++j;
            }
            if (j > i) {
                toks.emplace_back(line.substr(i, j - i));
            }
            i = j;
        }
        if (toks.empty() || toks[0][0] == '#') {
            continue;
        }
        ++stats.lines_read;
        if (toks.size() != 2 && toks.size() != 3) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": expected 'u v' or 'u v w', got " +
                                 std::to_string(toks.size()) + " fields",
                             lineno);
        }
        double w = 1.0;
        if (toks.size() == 3 && !detail::parse_weight(toks[2], w)) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": bad weight '" + toks[2] + "'",
                             lineno);
        }
        const NodeId u = intern(toks[0]);
        const NodeId v = intern(toks[1]);
        if (u == v) {
            ++stats.self_loops_skipped;
            continue;
        }
        min_w = std::min(min_w, w);
        raw.push_back({u, v, w, lineno});
    }

    if (labels.empty()) {
        throw DataError("edge list is empty: " + path);
    }
    stats.min_weight_seen = raw.empty() ? 0.0 : min_w;

    if (!raw.empty() && min_w <= 0.0) {
        if (!options.weight_shift) {
            auto bad = std::find_if(raw.begin(), raw.end(),
                                    [](const RawEdge& e) { return e.w <= 0.0; });
            throw DataError(path + ":" + std::to_string(bad->line) +
                            ": non-positive weight " + std::to_string(bad->w) +
                            " (enable weight_shift to remap)");
        }
        for (RawEdge& e : raw) {
            e.w = e.w - min_w + 1.0;
        }
        stats.shift_applied = true;
    }

    // Merge duplicates on the normalized (min, max) key.
    std::map<std::pair<NodeId, NodeId>, double> merged;
    for (const RawEdge& e : raw) {
        const auto key = std::minmax(e.u, e.v);
        auto [it, inserted] = merged.try_emplace({key.first, key.second}, e.w);
        if (!inserted) {
            ++stats.duplicates_merged;
            switch (options.merge_rule) {
                case MergeRule::KeepMax: it->second = std::max(it->second, e.w); break;
                case MergeRule::KeepMin: it->second = std::min(it->second, e.w); break;
                case MergeRule::Sum: it->second += e.w; break;
            }
        }
    }

    std::vector<Edge> edges;
    edges.reserve(merged.size());
    for (const auto& [key, w] : merged) {
        edges.push_back({key.first, key.second, w});
    }
    const auto n = static_cast<NodeId>(labels.size());
    return {WeightedGraph::from_edges(n, edges, std::move(labels)), stats};
}

// Writes the canonical text form: optional '#' header lines, then one
// "label label weight" line per edge, endpoints ascending by id.
inline void save_edge_list(const WeightedGraph& g, const std::string& path,
                           const std::vector<std::string>& header_lines = {}) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write edge list: " + path);
    }
    for (const std::string& h : header_lines) {
        out << "# " << h << '\n';
    }
    for (const Edge& e : g.edge_list()) {
        out << g.label(e.u) << ' ' << g.label(e.v) << ' '
            << format_double(e.weight) << '\n';
    }
}

// Nodes within `h` hops of `source` (source excluded), ordered by hop
// distance then ascending id.
inline std::vector<std::pair<NodeId, int>> neighbors_within_hops(
    const WeightedGraph& g, NodeId source, int h) {
    g.check_node(source);
    if (h < 0) {
        throw std::invalid_argument("hop bound must be >= 0");
    }
    std::vector<std::pair<NodeId, int>> out;
    std::vector<int> level(static_cast<std::size_t>(g.num_nodes()), -1);
    level[static_cast<std::size_t>(source)] = 0;
    std::vector<NodeId> frontier{source};
    std::vector<NodeId> next;
    for (int depth = 1; depth <= h && !frontier.empty(); ++depth) {
        next.clear();
        for (NodeId u : frontier) {
            for (NodeId v : g.neighbors(u)) {
                if (level[static_cast<std::size_t>(v)] < 0) {
                    level[static_cast<std::size_t>(v)] = depth;
                    next.push_back(v);
                }
            }
        }
        std::sort(next.begin(), next.end());
        for (NodeId v : next) {
            out.emplace_back(v, depth);
        }
        frontier.swap(next);
    }
    return out;
}

}  // namespace kshr
