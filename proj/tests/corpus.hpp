#pragma once

// Shared test corpus: every named family the suites sweep over.

#include <string>
#include <vector>

#include "mce/extremal.hpp"
#include "mce/graph.hpp"

namespace mce::testing {

struct NamedGraph {
    std::string name;
    Graph graph;
};

inline Graph star_graph(std::size_t leaves) {
    std::vector<Edge> edges;
    for (std::size_t v = 1; v <= leaves; ++v) {
        edges.emplace_back(0, static_cast<Vertex>(v));
    }
    return graph_from_edges(leaves + 1, edges);
}

/// Random recursive tree: vertex v attaches to a uniformly chosen earlier vertex.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) {
        edges.emplace_back(static_cast<Vertex>(rng.next() % v), static_cast<Vertex>(v));
    }
    return graph_from_edges(n, edges);
}

inline std::vector<NamedGraph> corpus() {
    std::vector<NamedGraph> out;
    for (std::size_t n : {0, 1, 5}) {
        out.push_back({"empty(" + std::to_string(n) + ")", empty_graph(n)});
    }
    for (std::size_t n : {2, 10, 100}) {
        out.push_back({"path(" + std::to_string(n) + ")", path_graph(n)});
    }
    out.push_back({"star(8)", star_graph(8)});
    out.push_back({"tree(60)", random_tree(60, 11)});
    for (std::size_t k = 1; k <= 12; ++k) {
        out.push_back({"K" + std::to_string(k), complete_graph(k)});
    }
    for (std::size_t n : {3, 6, 9, 12, 15}) {
        out.push_back({"moon_moser(" + std::to_string(n) + ")", moon_moser_graph(n)});
    }
    for (auto [n, d] : std::vector<std::pair<std::size_t, std::size_t>>{
             {9, 6}, {10, 6}, {12, 9}, {20, 9}, {50, 12}, {6, 3}, {30, 3}}) {
        out.push_back({"lower_bound(" + std::to_string(n) + "," + std::to_string(d) + ")",
                       lower_bound_graph(n, d)});
    }
    std::uint64_t seed = 100;
    for (std::size_t n : {6, 12, 20, 40, 80}) {
        for (double p : {0.05, 0.1, 0.3, 0.5}) {
            if (n >= 80 && p > 0.3) {
                continue;
            }
            out.push_back({"gnp(" + std::to_string(n) + "," + std::to_string(p) + ")",
                           random_gnp(n, p, seed++)});
        }
    }
    return out;
}

}  // namespace mce::testing
