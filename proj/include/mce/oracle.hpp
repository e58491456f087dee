#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mce/graph.hpp"

namespace mce {

/// Cliques ascending internally, sorted lexicographically. The equality basis
/// for every cross-algorithm comparison.
using CliqueSet = std::vector<std::vector<Vertex>>;

/// Sorts each clique and the list of cliques in place.
void canonicalize(CliqueSet& cliques);

inline constexpr std::size_t kOracleMaxVertices = 20;
inline constexpr std::size_t kSubsetsMaxDegeneracy = 25;

/// True iff `clique` is pairwise adjacent and no outside vertex is adjacent
/// to all of it. Throws InputError for an empty or repeating sequence.
bool is_maximal_clique(const Graph& g, std::span<const Vertex> clique);

/// Tests all 2^n - 1 nonempty subsets. Throws SizeError when n > 20.
CliqueSet enumerate_oracle(const Graph& g);

struct SubsetEnumerationStats {
    std::uint64_t subsets_tested = 0;
    std::uint64_t max_subsets_per_vertex = 0;
    std::size_t degeneracy = 0;
};

/// For each vertex v of a degeneracy ordering, tests every subset S of v's
/// later neighbors for being a clique and keeps {v} ∪ S when it is maximal.
/// Throws SizeError when d > 25.
CliqueSet enumerate_subsets_degeneracy(const Graph& g, SubsetEnumerationStats* stats = nullptr);

}  // namespace mce
