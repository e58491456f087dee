#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mce/graph.hpp"

namespace mce {

/// Work counters recorded while peeling. All three are O(n + m).
struct PeelingCounters {
    std::size_t removals = 0;      ///< vertices removed; always n
    std::size_t bucket_moves = 0;  ///< degree decrements, each moving a vertex down one bucket
    std::size_t bucket_scans = 0;  ///< advances of the minimum-degree cursor
};

/// A vertex elimination order in which every vertex has at most `degeneracy()`
/// neighbors that come later.
class DegeneracyOrdering {
public:
    /// order()[i] is the i-th vertex removed.
    std::span<const Vertex> order() const noexcept { return order_; }
    std::size_t position(Vertex v) const { return position_[v]; }
    std::size_t degeneracy() const noexcept { return degeneracy_; }
    std::size_t vertex_count() const noexcept { return order_.size(); }

    /// Neighbors of v removed after v, ascending by id.
    std::span<const Vertex> later_neighbors(Vertex v) const {
        return {later_.data() + later_offsets_[v], later_.data() + later_offsets_[v + 1]};
    }

    const PeelingCounters& counters() const noexcept { return counters_; }

private:
    friend DegeneracyOrdering degeneracy_ordering(const Graph& g);

    std::vector<Vertex> order_;
    std::vector<std::size_t> position_;
    std::size_t degeneracy_ = 0;
    std::vector<std::size_t> later_offsets_{0};
    std::vector<Vertex> later_;
    PeelingCounters counters_;
};

/// Repeatedly removes a minimum-degree vertex, smallest id first among ties.
/// Buckets indexed by current degree; linear apart from the heap used to
/// order each bucket by id.
DegeneracyOrdering degeneracy_ordering(const Graph& g);

/// (later neighbors, earlier neighbors) of v: the P and X of v's outer call.
std::pair<VertexSet, VertexSet> later_earlier_split(const DegeneracyOrdering& ordering,
                                                    const Graph& g, Vertex v);

/// m <= d (n - (d+1)/2), evaluated exactly in integers.
bool check_edge_bound(const Graph& g, std::size_t d);

}  // namespace mce
