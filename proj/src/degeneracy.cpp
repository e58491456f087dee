#include "mce/degeneracy.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "mce/error.hpp"

namespace mce {

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
    const std::size_t n = g.vertex_count();
    DegeneracyOrdering result;
    result.order_.reserve(n);
    result.position_.assign(n, 0);
    if (n == 0) {
        return result;
    }

    using Bucket = std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>>;
    std::vector<std::size_t> degree(n);
    std::vector<Bucket> buckets(g.max_degree() + 1);
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        buckets[degree[v]].push(v);
    }

    // A bucket entry is stale once its vertex is removed or its degree drops;
    // degrees only decrease, so a stale entry never becomes valid again.
    std::vector<bool> removed(n, false);
    auto& counters = result.counters_;
    std::size_t cursor = 0;
    while (result.order_.size() < n) {
        Bucket& bucket = buckets[cursor];
        if (bucket.empty()) {
            ++cursor;
            ++counters.bucket_scans;
            continue;
        }
        Vertex v = bucket.top();
        bucket.pop();
        if (removed[v] || degree[v] != cursor) {
            continue;
        }

        removed[v] = true;
        result.position_[v] = result.order_.size();
        result.order_.push_back(v);
        result.degeneracy_ = std::max(result.degeneracy_, cursor);
        ++counters.removals;

        for (Vertex w : g.neighbors(v)) {
            if (!removed[w]) {
                buckets[--degree[w]].push(w);
                ++counters.bucket_moves;
            }
        }
        // Neighbors dropped by at most one, so the minimum is now >= cursor - 1.
        if (cursor > 0) {
            --cursor;
        }
    }

    result.later_offsets_.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.neighbors(v)) {
            if (result.position_[w] > result.position_[v]) {
                result.later_.push_back(w);
            }
        }
        result.later_offsets_[v + 1] = result.later_.size();
    }
    return result;
}

std::pair<VertexSet, VertexSet> later_earlier_split(const DegeneracyOrdering& ordering,
                                                    const Graph& g, Vertex v) {
    if (v >= g.vertex_count() || v >= ordering.vertex_count()) {
        throw InputError("vertex " + std::to_string(v) + " out of range");
    }
    std::vector<Vertex> later;
    std::vector<Vertex> earlier;
    const std::size_t pos = ordering.position(v);
    for (Vertex w : g.neighbors(v)) {
        (ordering.position(w) > pos ? later : earlier).push_back(w);
    }
    return {VertexSet::from_sorted(std::move(later)), VertexSet::from_sorted(std::move(earlier))};
}

bool check_edge_bound(const Graph& g, std::size_t d) {
    // 2m <= d (2n - d - 1)
    const __int128 lhs = static_cast<__int128>(g.edge_count()) * 2;
    const __int128 rhs = static_cast<__int128>(d) *
                         (2 * static_cast<__int128>(g.vertex_count()) - static_cast<__int128>(d) - 1);
    return lhs <= rhs;
}

}  // namespace mce
