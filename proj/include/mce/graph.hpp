#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace mce {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Strictly ascending sequence of distinct vertex ids.
class VertexSet {
public:
    VertexSet() = default;

    /// Sorts and deduplicates.
    explicit VertexSet(std::vector<Vertex> ids);
    VertexSet(std::initializer_list<Vertex> ids);

    /// Adopts an already strictly ascending sequence. Throws ContractError otherwise.
    static VertexSet from_sorted(std::vector<Vertex> ids);

    bool contains(Vertex v) const;
    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }

    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }
    Vertex operator[](std::size_t i) const { return ids_[i]; }

    std::span<const Vertex> view() const noexcept { return ids_; }
    const std::vector<Vertex>& ids() const noexcept { return ids_; }

    VertexSet intersect(std::span<const Vertex> ascending) const;
    VertexSet intersect(const VertexSet& other) const { return intersect(other.view()); }

    bool is_subset_of(const VertexSet& other) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> ids_;
};

/// Appends a ∩ b to `out`. Both inputs must be strictly ascending.
void intersect_sorted(std::span<const Vertex> a, std::span<const Vertex> b,
                      std::vector<Vertex>& out);

/// Immutable undirected simple graph on vertices 0..n-1 with sorted
/// adjacency stored in compressed-row form.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    std::size_t max_degree() const;

    /// Binary search in the adjacency of the lower-degree endpoint.
    bool has_edge(Vertex u, Vertex v) const;

    /// Every edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph graph_from_edges(std::size_t n, std::span<const Edge> edges);

    std::vector<std::size_t> offsets_;
    std::vector<Vertex> neighbors_;
};

/// Builds a simple graph. (u,v) and (v,u) name the same edge and repeats
/// collapse; self-loops and out-of-range endpoints throw InputError.
Graph graph_from_edges(std::size_t n, std::span<const Edge> edges);

inline Graph graph_from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return graph_from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Ascending neighbor set. Throws InputError for v out of range.
VertexSet neighborhood(const Graph& g, Vertex v);

/// Intersection of the neighborhoods of every member of `w`.
/// Throws InputError when `w` is empty or holds an out-of-range vertex.
VertexSet common_neighborhood(const Graph& g, const VertexSet& w);

// Edge-list text format:
//   # comment
//   n <count>      optional, before the first edge
//   <u> <v>        one edge per line
// Blank lines are skipped; LF and CRLF are both accepted.

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Emits an "n <count>" directive followed by edges() one per line.
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace mce
