#include "mce/extremal.hpp"

#include <string>
#include <vector>

#include "mce/error.hpp"

namespace mce {

namespace {

void add_moon_moser_edges(std::size_t first, std::size_t count, std::vector<Edge>& edges) {
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = a + 1; b < count; ++b) {
            if (a / 3 != b / 3) {
                edges.emplace_back(static_cast<Vertex>(first + a), static_cast<Vertex>(first + b));
            }
        }
    }
}

}  // namespace

void ExtremalSpec::validate() const {
    if (d < 3 || d % 3 != 0) {
        throw InputError("lower-bound construction requires d to be a positive multiple of 3 (got d=" +
                         std::to_string(d) + ")");
    }
    if (n < d + 3) {
        throw InputError("lower-bound construction requires n >= d+3 (got n=" + std::to_string(n) +
                         ", d=" + std::to_string(d) + ")");
    }
}

Graph moon_moser_graph(std::size_t n) {
    if (n < 3 || n % 3 != 0) {
        throw InputError("Moon-Moser graph requires n to be a positive multiple of 3 (got n=" +
                         std::to_string(n) + ")");
    }
    std::vector<Edge> edges;
    add_moon_moser_edges(0, n, edges);
    return graph_from_edges(n, edges);
}

Graph lower_bound_graph(std::size_t n, std::size_t d) {
    const ExtremalSpec spec{n, d};
    spec.validate();
    std::vector<Edge> edges;
    const std::size_t independent = spec.independent_count();
    edges.reserve(independent * d + d * (d - 3) / 2);
    for (std::size_t s = 0; s < independent; ++s) {
        for (std::size_t t = independent; t < n; ++t) {
            edges.emplace_back(static_cast<Vertex>(s), static_cast<Vertex>(t));
        }
    }
    add_moon_moser_edges(independent, d, edges);
    return graph_from_edges(n, edges);
}

std::uint64_t max_clique_count_bound(std::size_t n, std::size_t d) {
    if (d % 3 != 0) {
        throw InputError("clique-count bound requires d to be a multiple of 3 (got d=" +
                         std::to_string(d) + ")");
    }
    if (n < d + 3) {
        throw InputError("clique-count bound requires n >= d+3 (got n=" + std::to_string(n) +
                         ", d=" + std::to_string(d) + ")");
    }
    std::uint64_t value = n - d;
    for (std::size_t i = 0; i < d / 3; ++i) {
        if (__builtin_mul_overflow(value, std::uint64_t{3}, &value)) {
            throw RangeError("clique-count bound (n-d)*3^(d/3) exceeds 64 bits for n=" +
                             std::to_string(n) + ", d=" + std::to_string(d));
        }
    }
    return value;
}

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InputError("edge probability must lie in [0, 1]");
    }
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (rng.next_unit() < p) {
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            }
        }
    }
    return graph_from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) {
        edges.emplace_back(static_cast<Vertex>(v - 1), static_cast<Vertex>(v));
    }
    return graph_from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
    }
    return graph_from_edges(n, edges);
}

Graph empty_graph(std::size_t n) { return graph_from_edges(n, std::span<const Edge>{}); }

}  // namespace mce
