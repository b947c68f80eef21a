// Command-line front end: generate synthetic networks, rank spreaders,
// run SIR diffusion sweeps and evaluate rankings. Every subcommand writes
// plot-ready CSV files plus the config that produced them into --out-dir;
// outputs are byte-identical for identical configs and master seed.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kshr/kshr.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct InputSpec {
    std::string input_path;
    std::string generate_spec;  // "n,m"
    bool weight_shift = false;
    int gen_n = 0;
    int gen_m = 0;
};

void add_input_options(CLI::App* cmd, InputSpec& spec) {
    auto* in = cmd->add_option("--input", spec.input_path,
                               "Weighted edge-list file (u v [w] per line)");
    auto* gen = cmd->add_option("--generate", spec.generate_spec,
                                "Generate a BA network instead: n,m");
    cmd->add_flag("--weight-shift", spec.weight_shift,
                  "Remap non-positive input weights by w - min_w + 1");
    in->excludes(gen);
    gen->excludes(in);
}

void parse_generate_spec(InputSpec& spec) {
    if (spec.generate_spec.empty()) {
        return;
    }
    const auto comma = spec.generate_spec.find(',');
    try {
        if (comma == std::string::npos) {
            throw std::invalid_argument("");
        }
        spec.gen_n = std::stoi(spec.generate_spec.substr(0, comma));
        spec.gen_m = std::stoi(spec.generate_spec.substr(comma + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("--generate expects 'n,m', got '" +
                                    spec.generate_spec + "'");
    }
}

kshr::WeightedGraph load_input(const InputSpec& spec, std::uint64_t seed) {
    if (!spec.generate_spec.empty()) {
        return kshr::generate_ba_weighted(spec.gen_n, spec.gen_m,
                                          kshr::Rng::derive(seed, 0xba5e));
    }
    if (spec.input_path.empty()) {
        throw std::invalid_argument("one of --input or --generate is required");
    }
    kshr::IngestOptions opts;
    opts.weight_shift = spec.weight_shift;
    auto [graph, stats] = kshr::load_edge_list(spec.input_path, opts);
    if (stats.self_loops_skipped > 0) {
        std::cerr << "note: skipped " << stats.self_loops_skipped
                  << " self-loop line(s)\n";
    }
    if (stats.duplicates_merged > 0) {
        std::cerr << "note: merged " << stats.duplicates_merged
                  << " duplicate edge line(s)\n";
    }
    if (stats.shift_applied) {
        std::cerr << "note: shifted weights by " << 1.0 - stats.min_weight_seen
                  << " to make them positive\n";
    }
    return graph;
}

const std::vector<std::string> kMethods = {"kshr", "wdeg", "weig", "wvote",
                                           "wkshell"};

kshr::RankList ranking_for(const kshr::WeightedGraph& g, const std::string& method,
                           bool kshr_mean) {
    if (method == "kshr") {
        kshr::KshrOptions opts;
        opts.mean_over_neighborhood = kshr_mean;
        return kshr::kshr_scores(g, opts);
    }
    if (method == "wdeg") {
        return kshr::weighted_degree_rank(g);
    }
    if (method == "weig") {
        auto res = kshr::weighted_eigenvector_rank(g);
        if (!res.converged) {
            std::cerr << "warning: eigenvector iteration did not converge\n";
        }
        return res.ranking;
    }
    if (method == "wvote") {
        // election order as a strict ranking
        const auto seeds = kshr::weighted_voterank(
            g, static_cast<std::size_t>(g.num_nodes()));
        std::vector<double> scores(seeds.size());
        for (std::size_t i = 0; i < seeds.size(); ++i) {
            scores[static_cast<std::size_t>(seeds[i])] =
                static_cast<double>(seeds.size() - i);
        }
        return kshr::make_rank_list(scores);
    }
    if (method == "wkshell") {
        return kshr::weighted_kshell_rank(g);
    }
    throw std::invalid_argument("unknown method: " + method);
}

std::ofstream open_csv(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw kshr::DataError("cannot write " + path.string());
    }
    return out;
}

void write_config(const fs::path& out_dir, const json& j) {
    std::ofstream out(out_dir / "config.json", std::ios::binary);
    out << j.dump(2) << '\n';
}

json base_config(const std::string& command, const InputSpec& spec,
                 std::uint64_t seed, const std::string& out_dir) {
    json j;
    j["command"] = command;
    if (!spec.input_path.empty()) {
        j["input"] = spec.input_path;
    }
    if (!spec.generate_spec.empty()) {
        j["generate"] = {{"n", spec.gen_n}, {"m", spec.gen_m}};
    }
    j["weight_shift"] = spec.weight_shift;
    j["rng_seed"] = seed;
    j["out_dir"] = out_dir;
    return j;
}

std::vector<kshr::NodeId> read_seeds_file(const kshr::WeightedGraph& g,
                                          const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw kshr::DataError("cannot open seeds file: " + path);
    }
    std::map<std::string, kshr::NodeId> by_label;
    for (kshr::NodeId u = 0; u < g.num_nodes(); ++u) {
        by_label[g.label(u)] = u;
    }
    std::vector<kshr::NodeId> seeds;
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        auto it = by_label.find(tok);
        if (it == by_label.end()) {
            throw kshr::DataError("seeds file names unknown node '" + tok + "'");
        }
        seeds.push_back(it->second);
    }
    if (seeds.empty()) {
        throw kshr::DataError("seeds file is empty: " + path);
    }
    return seeds;
}

std::size_t seeds_for_fraction(const kshr::WeightedGraph& g, double percent) {
    const auto n = static_cast<double>(g.num_nodes());
    const auto k = static_cast<std::size_t>(std::llround(n * percent / 100.0));
    return std::clamp<std::size_t>(k, 1, static_cast<std::size_t>(g.num_nodes()));
}

// ---- subcommands ----

int run_generate(const InputSpec&, int n, int m, std::uint64_t seed,
                 const std::string& out_dir) {
    const kshr::WeightedGraph g =
        kshr::generate_ba_weighted(n, m, kshr::Rng::derive(seed, 0xba5e));
    fs::create_directories(out_dir);
    const fs::path file = fs::path(out_dir) / "graph.edges";
    kshr::save_edge_list(
        g, file.string(),
        {"barabasi-albert n=" + std::to_string(n) + " m=" + std::to_string(m) +
         " weight-range=[1,10] rng-seed=" + std::to_string(seed)});
    json j;
    j["command"] = "generate";
    j["generate"] = {{"n", n}, {"m", m}};
    j["rng_seed"] = seed;
    j["out_dir"] = out_dir;
    write_config(out_dir, j);
    std::cerr << "wrote " << file.string() << " (" << g.num_nodes() << " nodes, "
              << g.num_edges() << " edges)\n";
    return 0;
}

int run_rank(const InputSpec& spec, const std::vector<std::string>& methods,
             bool kshr_mean, std::uint64_t seed, const std::string& out_dir) {
    const kshr::WeightedGraph g = load_input(spec, seed);
    fs::create_directories(out_dir);
    for (const std::string& method : methods) {
        auto out = open_csv(fs::path(out_dir) / ("rank_" + method + ".csv"));
        out << "node_label,score,rank\n";
        if (method == "wvote") {
            const auto elections = kshr::weighted_voterank_detailed(
                g, static_cast<std::size_t>(g.num_nodes()));
            for (std::size_t i = 0; i < elections.size(); ++i) {
                out << g.label(elections[i].node) << ','
                    << kshr::format_double(elections[i].votes) << ',' << i + 1
                    << '\n';
            }
        } else {
            const kshr::RankList ranks = ranking_for(g, method, kshr_mean);
            for (std::size_t i = 0; i < ranks.size(); ++i) {
                out << g.label(ranks.entries[i].node) << ','
                    << kshr::format_double(ranks.entries[i].score) << ',' << i + 1
                    << '\n';
            }
        }
    }
    json j = base_config("rank", spec, seed, out_dir);
    j["methods"] = methods;
    j["kshr_mean"] = kshr_mean;
    write_config(out_dir, j);
    return 0;
}

int run_simulate(const InputSpec& spec, const std::vector<std::string>& methods,
                 const std::string& seeds_file, bool kshr_mean, double beta,
                 double gamma, int runs, int top_k,
                 std::vector<double> fractions, std::uint64_t seed,
                 const std::string& out_dir) {
    const kshr::WeightedGraph g = load_input(spec, seed);
    fs::create_directories(out_dir);
    kshr::SirParams params;
    params.beta = beta;
    params.gamma = gamma;
    params.runs = runs;

    struct SeedPlan {
        std::string name;
        std::vector<std::pair<double, std::vector<kshr::NodeId>>> sets;
    };
    std::vector<SeedPlan> plans;
    const auto n = static_cast<double>(g.num_nodes());
    if (!seeds_file.empty()) {
        SeedPlan plan;
        plan.name = "seeds";
        auto seeds = read_seeds_file(g, seeds_file);
        const double fraction = 100.0 * static_cast<double>(seeds.size()) / n;
        plan.sets.emplace_back(fraction, std::move(seeds));
        plans.push_back(std::move(plan));
    } else {
        if (methods.empty()) {
            throw std::invalid_argument("simulate needs --method or --seeds-file");
        }
        std::vector<std::pair<double, std::size_t>> sizes;
        if (top_k > 0) {
            sizes.emplace_back(100.0 * top_k / n, static_cast<std::size_t>(top_k));
        } else {
            if (fractions.empty()) {
                fractions = {2, 4, 6, 8, 10};
            }
            std::sort(fractions.begin(), fractions.end());
            for (double p : fractions) {
                sizes.emplace_back(p, seeds_for_fraction(g, p));
            }
        }
        for (const std::string& method : methods) {
            const kshr::RankList ranks = ranking_for(g, method, kshr_mean);
            SeedPlan plan;
            plan.name = method;
            for (auto [p, k] : sizes) {
                plan.sets.emplace_back(p, kshr::top_k(ranks, k));
            }
            plans.push_back(std::move(plan));
        }
    }

    std::uint64_t stream = 0;
    for (const SeedPlan& plan : plans) {
        std::vector<std::pair<double, kshr::SirOutcome>> outcomes;
        for (const auto& [fraction, seeds] : plan.sets) {
            outcomes.emplace_back(
                fraction, kshr::sir_simulate(g, seeds, params,
                                             kshr::Rng::derive(seed, stream++)));
        }
        const kshr::InfluenceCurve curve = kshr::influence_curve(outcomes);

        auto final_csv = open_csv(fs::path(out_dir) /
                                  ("sim_" + plan.name + "_final.csv"));
        final_csv << "fraction_percent,seeds,final_scale\n";
        for (std::size_t i = 0; i < curve.points.size(); ++i) {
            final_csv << kshr::format_double(curve.points[i].fraction) << ','
                      << plan.sets[i].second.size() << ','
                      << kshr::format_double(curve.points[i].final_scale) << '\n';
        }
        auto steps_csv = open_csv(fs::path(out_dir) /
                                  ("sim_" + plan.name + "_steps.csv"));
        steps_csv << "fraction_percent,t,scale\n";
        for (const auto& [fraction, scale] : curve.per_step) {
            for (std::size_t t = 0; t < scale.size(); ++t) {
                steps_csv << kshr::format_double(fraction) << ',' << t << ','
                          << kshr::format_double(scale[t]) << '\n';
            }
        }
    }

    json j = base_config("simulate", spec, seed, out_dir);
    j["methods"] = methods;
    j["seeds_file"] = seeds_file;
    j["kshr_mean"] = kshr_mean;
    j["beta"] = beta;
    j["gamma"] = gamma;
    j["runs"] = runs;
    j["top_k"] = top_k;
    j["fractions"] = fractions;
    write_config(out_dir, j);
    return 0;
}

int run_evaluate(const InputSpec& spec, const std::vector<std::string>& methods,
                 bool kshr_mean, std::vector<double> betas, double gamma,
                 int runs, int top_k, std::uint64_t seed,
                 const std::string& out_dir) {
    if (methods.empty()) {
        throw std::invalid_argument("evaluate needs at least one --method");
    }
    const kshr::WeightedGraph g = load_input(spec, seed);
    fs::create_directories(out_dir);
    if (betas.empty()) {
        betas = {0.01};
    }
    std::sort(betas.begin(), betas.end());

    std::vector<std::pair<std::string, kshr::RankList>> rankings;
    for (const std::string& method : methods) {
        rankings.emplace_back(method, ranking_for(g, method, kshr_mean));
    }

    auto tau_csv = open_csv(fs::path(out_dir) / "tau.csv");
    tau_csv << "method,beta,tau,tau_b\n";
    for (std::size_t bi = 0; bi < betas.size(); ++bi) {
        kshr::SirParams params;
        params.beta = betas[bi];
        params.gamma = gamma;
        params.runs = runs;
        const auto strength =
            kshr::sir_node_strength(g, params, kshr::Rng::derive(seed, 0x7a0 + bi));
        const kshr::RankList truth = kshr::make_rank_list(strength);
        for (const auto& [method, ranks] : rankings) {
            const kshr::TauResult t = kshr::kendall_tau(ranks, truth);
            tau_csv << method << ',' << kshr::format_double(betas[bi]) << ','
                    << kshr::format_double(t.tau) << ','
                    << kshr::format_double(t.tau_b) << '\n';
        }
    }

    auto ls_csv = open_csv(fs::path(out_dir) / "ls.csv");
    ls_csv << "method,top_k,ls,excluded_fraction\n";
    for (const auto& [method, ranks] : rankings) {
        const auto k = static_cast<std::size_t>(top_k);
        if (k < 2) {
            ls_csv << method << ',' << k << ",na,na\n";
            continue;
        }
        const auto seeds = kshr::top_k(ranks, k);
        const kshr::SpreaderDistance d = kshr::avg_spreader_distance(g, seeds);
        ls_csv << method << ',' << k << ','
               << kshr::format_double(d.mean_distance) << ','
               << kshr::format_double(d.excluded_fraction) << '\n';
    }

    json j = base_config("evaluate", spec, seed, out_dir);
    j["methods"] = methods;
    j["kshr_mean"] = kshr_mean;
    j["betas"] = betas;
    j["gamma"] = gamma;
    j["runs"] = runs;
    j["top_k"] = top_k;
    write_config(out_dir, j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Influential-spreader analysis for weighted networks"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    InputSpec rank_in, sim_in, eval_in;
    std::vector<std::string> rank_methods, sim_methods, eval_methods;
    std::string sim_seeds_file;
    bool rank_kshr_mean = false, sim_kshr_mean = false, eval_kshr_mean = false;
    double sim_beta = 0.01, eval_gamma = 1.0, sim_gamma = 1.0;
    std::vector<double> sim_fractions, eval_betas;
    int sim_runs = 100, eval_runs = 100;
    int sim_top_k = 0, eval_top_k = 0;
    int gen_n = 0, gen_m = 0;
    std::uint64_t seed = 42;
    std::string out_dir = "out";

    app.add_option("--rng-seed", seed, "Master seed for all stochastic steps")
        ->envname("KSHR_RNG_SEED");
    app.add_option("--out-dir", out_dir, "Directory for CSV outputs")
        ->envname("KSHR_OUT_DIR");

    auto* generate = app.add_subcommand("generate", "Write a random weighted "
                                                    "scale-free edge list");
    generate->add_option("--n", gen_n, "Number of nodes")->required();
    generate->add_option("--m", gen_m, "Edges attached per new node")->required();

    auto* rank = app.add_subcommand("rank", "Rank spreaders by a centrality");
    add_input_options(rank, rank_in);
    rank->add_option("--method", rank_methods, "Centrality method (repeatable)")
        ->required()
        ->check(CLI::IsMember(kMethods));
    rank->add_flag("--kshr-mean", rank_kshr_mean,
                   "Average equivalent constants instead of summing");

    auto* simulate = app.add_subcommand("simulate",
                                        "Run SIR diffusion from seed sets");
    add_input_options(simulate, sim_in);
    simulate->add_option("--method", sim_methods, "Seed-selection method "
                                                  "(repeatable)")
        ->check(CLI::IsMember(kMethods));
    simulate->add_option("--seeds-file", sim_seeds_file,
                         "Explicit seed nodes, one label per line");
    simulate->add_flag("--kshr-mean", sim_kshr_mean,
                       "Average equivalent constants instead of summing");
    simulate->add_option("--beta", sim_beta, "Infection probability")
        ->envname("KSHR_BETA");
    simulate->add_option("--gamma", sim_gamma, "Recovery probability")
        ->envname("KSHR_GAMMA");
    simulate->add_option("--runs", sim_runs, "Monte Carlo repetitions")
        ->envname("KSHR_RUNS");
    simulate->add_option("--top-k", sim_top_k, "Fixed seed-set size");
    simulate->add_option("--fractions", sim_fractions,
                         "Spreader percentages, e.g. 2,4,6,8,10")
        ->delimiter(',');

    auto* evaluate = app.add_subcommand("evaluate",
                                        "Kendall tau against SIR ground truth "
                                        "plus spreader dispersion");
    add_input_options(evaluate, eval_in);
    evaluate->add_option("--method", eval_methods, "Method (repeatable)")
        ->required()
        ->check(CLI::IsMember(kMethods));
    evaluate->add_flag("--kshr-mean", eval_kshr_mean,
                       "Average equivalent constants instead of summing");
    evaluate->add_option("--beta", eval_betas, "Infection probability "
                                               "(repeatable sweep)")
        ->delimiter(',');
    evaluate->add_option("--gamma", eval_gamma, "Recovery probability");
    evaluate->add_option("--runs", eval_runs, "Monte Carlo repetitions");
    evaluate->add_option("--top-k", eval_top_k, "Seed-set size for L_s")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (generate->parsed()) {
            return run_generate(InputSpec{}, gen_n, gen_m, seed, out_dir);
        }
        if (rank->parsed()) {
            parse_generate_spec(rank_in);
            return run_rank(rank_in, rank_methods, rank_kshr_mean, seed, out_dir);
        }
        if (simulate->parsed()) {
            parse_generate_spec(sim_in);
            return run_simulate(sim_in, sim_methods, sim_seeds_file, sim_kshr_mean,
                                sim_beta, sim_gamma, sim_runs, sim_top_k,
                                sim_fractions, seed, out_dir);
        }
        if (evaluate->parsed()) {
            parse_generate_spec(eval_in);
            return run_evaluate(eval_in, eval_methods, eval_kshr_mean, eval_betas,
                                eval_gamma, eval_runs, eval_top_k, seed, out_dir);
        }
    } catch (const kshr::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const kshr::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
