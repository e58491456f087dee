#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mce/degeneracy.hpp"
#include "mce/graph.hpp"

namespace mce {

/// Receives each maximal clique as an ascending id sequence. The span is only
/// valid for the duration of the call. An empty visitor selects counting mode.
using CliqueVisitor = std::function<void(std::span<const Vertex>)>;

struct EnumerationStats {
    std::uint64_t clique_count = 0;
    std::uint64_t recursive_calls = 0;
    std::size_t max_depth = 0;  ///< deepest call; the first call made is depth 1
    std::chrono::nanoseconds elapsed{0};
};

/// (R, P, X) of one recursive call, in global vertex ids.
struct SearchState {
    std::vector<Vertex> r;  ///< current clique, ascending
    VertexSet p;
    VertexSet x;
};

/// R is a clique, P and X are disjoint, and every vertex of P ∪ X is adjacent
/// to all of R.
bool is_consistent(const Graph& g, const SearchState& state);

/// Optional instrumentation. Both callbacks are invoked synchronously.
struct EnumerationHooks {
    /// Every recursive call, before any work. Materializing the state is O(|P|+|X|).
    std::function<void(const SearchState&)> on_call;
    /// enumerate_degeneracy only: once per vertex of the ordering, before its
    /// pivot recursion starts.
    std::function<void(Vertex v, std::size_t p_size, std::size_t x_size)> on_outer_call;
};

/// The auxiliary graph H_{P,X}: vertex set P ∪ X, keeping an edge of G iff
/// at least one endpoint is in P. Members are addressed by local index,
/// which is monotone in vertex id.
class PivotSubgraph {
public:
    enum class Tag : std::uint8_t { candidate, excluded };

    PivotSubgraph() = default;

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

    std::span<const Vertex> members() const noexcept { return members_; }
    Vertex member(std::size_t local) const { return members_[local]; }
    Tag tag(std::size_t local) const { return tags_[local]; }
    bool in_p(std::size_t local) const { return tags_[local] == Tag::candidate; }
    std::span<const Tag> tags() const noexcept { return tags_; }

    /// Local indices adjacent to `local`, ascending.
    std::span<const std::uint32_t> adjacency(std::size_t local) const {
        return {adjacency_.data() + offsets_[local], adjacency_.data() + offsets_[local + 1]};
    }

    std::optional<std::size_t> local_index(Vertex v) const;

    VertexSet p() const;
    VertexSet x() const;
    /// Neighbors of member v within H, as global ids.
    VertexSet neighbors(Vertex v) const;

private:
    friend class PivotSubgraphBuilder;

    std::vector<Vertex> members_;
    std::vector<Tag> tags_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::uint32_t> adjacency_;
};

/// Forms H_{P,X} by scanning only each member's later neighbors, O(d(|P|+|X|)).
/// Throws ContractError if P and X intersect.
PivotSubgraph build_pivot_subgraph(const Graph& g, const VertexSet& p, const VertexSet& x,
                                   const DegeneracyOrdering& ordering);

/// Tomita pivot: the member with the most P-neighbors in H, smallest id on
/// ties. Throws ContractError if H is empty.
Vertex select_pivot(const PivotSubgraph& h);

/// H_{P∩Γ(v), X∩Γ(v)}, derived from H alone with tags carried over.
/// Throws ContractError unless v is a P member of H.
PivotSubgraph restrict_pivot_subgraph(const PivotSubgraph& h, Vertex v);

/// Bron–Kerbosch without pivoting, looping over P in ascending id order at
/// every level.
EnumerationStats enumerate_naive(const Graph& g, const CliqueVisitor& visitor = {},
                                 const EnumerationHooks& hooks = {});

/// Bron–Kerbosch with the Tomita pivot, started from P = V, R = X = ∅.
EnumerationStats enumerate_pivot(const Graph& g, const CliqueVisitor& visitor = {},
                                 const EnumerationHooks& hooks = {});

/// Outer loop over a degeneracy ordering; for each v_i runs the pivot
/// recursion on R = {v_i}, P = later neighbors, X = earlier neighbors.
///
/// Each maximal clique is reported exactly once, in the outer call of its
/// earliest vertex. |P| <= d at every outer call, so recursion depth is at
/// most d + 1 frames below the loop. Runs in O(d n 3^{d/3}) plus reporting.
EnumerationStats enumerate_degeneracy(const Graph& g, const CliqueVisitor& visitor = {},
                                      const EnumerationHooks& hooks = {});

}  // namespace mce
