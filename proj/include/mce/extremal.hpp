#pragma once

#include <cstddef>
#include <cstdint>

#include "mce/graph.hpp"

namespace mce {

/// Parameters of the extremal construction K_{n-d,3,3,...,3}: an independent
/// set of n-d vertices joined to every vertex of a Moon–Moser graph on d
/// vertices. Requires d >= 3, d a multiple of 3, and n >= d+3.
struct ExtremalSpec {
    std::size_t n;
    std::size_t d;

    /// Throws InputError naming the first violated hypothesis.
    void validate() const;

    std::size_t independent_count() const noexcept { return n - d; }
    std::size_t triple_count() const noexcept { return d / 3; }
};

/// Complete multipartite graph with n/3 parts {3i, 3i+1, 3i+2}.
/// Throws InputError unless n is a positive multiple of 3.
Graph moon_moser_graph(std::size_t n);

/// Vertices 0..n-d-1 are the independent set; n-d..n-1 are moon_moser_graph(d).
Graph lower_bound_graph(std::size_t n, std::size_t d);

/// (n - d) * 3^(d/3), the most maximal cliques an n-vertex graph of
/// degeneracy d can have. Needs d a multiple of 3 and n >= d+3 (InputError);
/// throws RangeError if the value does not fit in 64 bits.
std::uint64_t max_clique_count_bound(std::size_t n, std::size_t d);

/// SplitMix64 (Steele, Lea & Flood 2014). Fixed constants make the stream
/// identical on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) from the top 53 bits.
    double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Erdős–Rényi G(n, p). Pairs (u, v), u < v, are visited in lexicographic
/// order; each consumes one SplitMix64 draw and becomes an edge iff
/// next_unit() < p. Throws InputError unless 0 <= p <= 1.
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);

Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);

}  // namespace mce
