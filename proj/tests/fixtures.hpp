#pragma once

#include <vector>

#include "kshr/graph.hpp"

namespace fixtures {

// 11-node weighted toy network (nodes A..K = 0..10). Its unweighted
// decomposition puts A-D in shell 3, E/F/I/J in shell 2 and G/H/K in
// shell 1, and under the KSHR scoring node F comes out on top.
inline kshr::WeightedGraph toy_network() {
    enum { A, B, C, D, E, F, G, H, I, J, K };
    const std::vector<kshr::Edge> edges = {
        {A, B, 7},   {A, C, 5},   {A, D, 6},   {B, C, 6},   {B, D, 7},
        {C, D, 4},   {B, E, 9},   {B, F, 1},   {E, F, 16},  {E, G, 0.5},
        {E, H, 0.5}, {E, I, 8},   {E, J, 8},   {I, J, 4},   {F, K, 0.4},
    };
    return kshr::WeightedGraph::from_edges(
        11, edges, {"A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K"});
}

inline const std::vector<int>& toy_kshell() {
    static const std::vector<int> shells = {3, 3, 3, 3, 2, 2, 1, 1, 2, 2, 1};
    return shells;
}

// Values below were frozen from an independent reference computation of
// the same definitions (tolerance 1e-9 in the tests).
inline const std::vector<double>& toy_wkshell() {
    static const std::vector<double> wk = {
        15.698199728282543, 22.064646326523345, 14.579725648464457,
        15.28931799721288,  22.267220234572108, 10.021360589094934,
        2.0,                2.0,                8.82842712474619,
        8.82842712474619,   1.8944271909999157,
    };
    return wk;
}

inline const std::vector<double>& toy_kshr_scores() {
    static const std::vector<double> scores = {
        3.22026469164579,   3.062367940456999,  3.180903708554491,
        3.240978983917059,  3.321891065767978,  4.720160162953157,
        2.842650014446028,  2.842650014446028,  4.413006147060248,
        4.413006147060248,  1.9695643877443307,
    };
    return scores;
}

// Equivalent spring constants from source F (node 5) to every other node.
inline const std::vector<std::pair<kshr::NodeId, double>>& toy_spring_from_f() {
    static const std::vector<std::pair<kshr::NodeId, double>> constants = {
        {0, 2.370343680709534},   {1, 6.76},
        {2, 2.3197724261554047},  {3, 2.3445187165775403},
        {4, 16.9},                {6, 0.48484848484848486},
        {7, 0.48484848484848486}, {8, 7.619047619047619},
        {9, 7.619047619047619},   {10, 0.4},
    };
    return constants;
}

}  // namespace fixtures
