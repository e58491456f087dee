#include "mce/bron_kerbosch.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "mce/error.hpp"

namespace mce {

namespace {

constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

using Tag = PivotSubgraph::Tag;

class Stopwatch {
public:
    std::chrono::nanoseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start_);
    }

private:
    using Clock = std::chrono::steady_clock;
    Clock::time_point start_ = Clock::now();
};

}  // namespace

/// Fills PivotSubgraph internals. Scratch maps global id -> local index and
/// must be all kAbsent on entry; it is restored before returning.
class PivotSubgraphBuilder {
public:
    template <class OutNeighbors>
    static PivotSubgraph from_graph(std::span<const Vertex> p, std::span<const Vertex> x,
                                    OutNeighbors&& out_neighbors,
                                    std::vector<std::uint32_t>& scratch) {
        PivotSubgraph h;
        h.members_.reserve(p.size() + x.size());
        h.tags_.reserve(p.size() + x.size());
        auto pi = p.begin();
        auto xi = x.begin();
        while (pi != p.end() || xi != x.end()) {
            if (xi == x.end() || (pi != p.end() && *pi < *xi)) {
                h.members_.push_back(*pi++);
                h.tags_.push_back(Tag::candidate);
            } else if (pi == p.end() || *xi < *pi) {
                h.members_.push_back(*xi++);
                h.tags_.push_back(Tag::excluded);
            } else {
                throw ContractError("build_pivot_subgraph: P and X share vertex " +
                                    std::to_string(*pi));
            }
        }
        const std::size_t k = h.members_.size();
        for (std::size_t i = 0; i < k; ++i) {
            scratch[h.members_[i]] = static_cast<std::uint32_t>(i);
        }

        // Every edge inside P ∪ X is an out-edge of one of its endpoints.
        std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
        std::vector<std::size_t> degree(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            for (Vertex z : out_neighbors(h.members_[i])) {
                const std::uint32_t j = scratch[z];
                if (j == kAbsent) {
                    continue;
                }
                if (h.tags_[i] == Tag::candidate || h.tags_[j] == Tag::candidate) {
                    arcs.emplace_back(static_cast<std::uint32_t>(i), j);
                    ++degree[i];
                    ++degree[j];
                }
            }
        }
        for (Vertex v : h.members_) {
            scratch[v] = kAbsent;
        }

        h.offsets_.assign(k + 1, 0);
        for (std::size_t i = 0; i < k; ++i) {
            h.offsets_[i + 1] = h.offsets_[i] + degree[i];
        }
        h.adjacency_.resize(h.offsets_[k]);
        std::vector<std::size_t> fill(h.offsets_.begin(), h.offsets_.end() - 1);
        for (auto [i, j] : arcs) {
            h.adjacency_[fill[i]++] = j;
            h.adjacency_[fill[j]++] = i;
        }
        for (std::size_t i = 0; i < k; ++i) {
            std::sort(h.adjacency_.begin() + static_cast<std::ptrdiff_t>(h.offsets_[i]),
                      h.adjacency_.begin() + static_cast<std::ptrdiff_t>(h.offsets_[i + 1]));
        }
        return h;
    }

    /// H restricted to the neighbors of member `pivot_local`, using `tags` as the
    /// current P/X split of H. Scratch is indexed by H's local ids, sized at
    /// least h.size(), all kAbsent on entry and on exit.
    static PivotSubgraph restrict(const PivotSubgraph& h, std::span<const Tag> tags,
                                  std::size_t v_local, std::vector<std::uint32_t>& scratch) {
        PivotSubgraph child;
        auto nbrs = h.adjacency(v_local);
        child.members_.reserve(nbrs.size());
        child.tags_.reserve(nbrs.size());
        for (std::size_t c = 0; c < nbrs.size(); ++c) {
            scratch[nbrs[c]] = static_cast<std::uint32_t>(c);
            child.members_.push_back(h.members_[nbrs[c]]);
            child.tags_.push_back(tags[nbrs[c]]);
        }
        child.offsets_.assign(nbrs.size() + 1, 0);
        for (std::size_t c = 0; c < nbrs.size(); ++c) {
            const std::uint32_t a = nbrs[c];
            for (std::uint32_t b : h.adjacency(a)) {
                const std::uint32_t mapped = scratch[b];
                if (mapped != kAbsent && (tags[a] == Tag::candidate || tags[b] == Tag::candidate)) {
                    child.adjacency_.push_back(mapped);
                }
            }
            child.offsets_[c + 1] = child.adjacency_.size();
        }
        for (std::uint32_t a : nbrs) {
            scratch[a] = kAbsent;
        }
        return child;
    }
};

namespace {

std::size_t pivot_local(const PivotSubgraph& h, std::span<const Tag> tags) {
    std::size_t best = 0;
    std::size_t best_score = 0;
    for (std::size_t u = 0; u < h.size(); ++u) {
        std::size_t score = 0;
        for (std::uint32_t w : h.adjacency(u)) {
            score += tags[w] == Tag::candidate ? 1 : 0;
        }
        if (score > best_score) {
            best = u;
            best_score = score;
        }
    }
    return best;
}

/// Tomita recursion over H_{P,X}. R lives in `clique_`; P and X are the tag
/// vector of the current frame.
class PivotSearch {
public:
    PivotSearch(const CliqueVisitor& visitor, const EnumerationHooks& hooks,
                EnumerationStats& stats)
        : visitor_(visitor), hooks_(hooks), stats_(stats) {}

    std::vector<Vertex>& clique() { return clique_; }

    void expand(const PivotSubgraph& h, std::size_t depth) {
        ++stats_.recursive_calls;
        stats_.max_depth = std::max(stats_.max_depth, depth);
        if (hooks_.on_call) {
            SearchState state{clique_, h.p(), h.x()};
            std::sort(state.r.begin(), state.r.end());
            hooks_.on_call(state);
        }
        if (h.empty()) {
            report();
            return;
        }
        if (scratch_.size() < h.size()) {
            scratch_.resize(h.size(), kAbsent);
        }

        std::vector<Tag> tags(h.tags().begin(), h.tags().end());
        const std::size_t u = pivot_local(h, tags);

        std::vector<bool> skip(h.size(), false);
        for (std::uint32_t w : h.adjacency(u)) {
            skip[w] = true;
        }
        for (std::size_t v = 0; v < h.size(); ++v) {
            if (tags[v] != Tag::candidate || skip[v]) {
                continue;
            }
            PivotSubgraph child = PivotSubgraphBuilder::restrict(h, tags, v, scratch_);
            clique_.push_back(h.member(v));
            expand(child, depth + 1);
            clique_.pop_back();
            tags[v] = Tag::excluded;
        }
    }

private:
    void report() {
        ++stats_.clique_count;
        if (visitor_) {
            sorted_.assign(clique_.begin(), clique_.end());
            std::sort(sorted_.begin(), sorted_.end());
            visitor_(sorted_);
        }
    }

    const CliqueVisitor& visitor_;
    const EnumerationHooks& hooks_;
    EnumerationStats& stats_;
    std::vector<Vertex> clique_;
    std::vector<Vertex> sorted_;
    std::vector<std::uint32_t> scratch_;
};

class NaiveSearch {
public:
    NaiveSearch(const Graph& g, const CliqueVisitor& visitor, const EnumerationHooks& hooks,
                EnumerationStats& stats)
        : g_(g), visitor_(visitor), hooks_(hooks), stats_(stats) {}

    void expand(std::vector<Vertex> p, std::vector<Vertex> x, std::size_t depth) {
        ++stats_.recursive_calls;
        stats_.max_depth = std::max(stats_.max_depth, depth);
        if (hooks_.on_call) {
            hooks_.on_call(SearchState{clique_, VertexSet::from_sorted(p), VertexSet::from_sorted(x)});
        }
        if (p.empty() && x.empty()) {
            ++stats_.clique_count;
            if (visitor_) {
                visitor_(clique_);
            }
            return;
        }
        for (std::size_t i = 0; i < p.size(); ++i) {
            const Vertex v = p[i];
            auto adj = g_.neighbors(v);
            std::vector<Vertex> child_p;
            std::vector<Vertex> child_x;
            intersect_sorted(std::span<const Vertex>(p).subspan(i + 1), adj, child_p);
            intersect_sorted(x, adj, child_x);
            // Candidates are taken in ascending order, so R stays ascending.
            clique_.push_back(v);
            expand(std::move(child_p), std::move(child_x), depth + 1);
            clique_.pop_back();
            x.insert(std::upper_bound(x.begin(), x.end(), v), v);
        }
    }

private:
    const Graph& g_;
    const CliqueVisitor& visitor_;
    const EnumerationHooks& hooks_;
    EnumerationStats& stats_;
    std::vector<Vertex> clique_;
};

}  // namespace

std::optional<std::size_t> PivotSubgraph::local_index(Vertex v) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - members_.begin());
}

VertexSet PivotSubgraph::p() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (in_p(i)) {
            out.push_back(members_[i]);
        }
    }
    return VertexSet::from_sorted(std::move(out));
}

VertexSet PivotSubgraph::x() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (!in_p(i)) {
            out.push_back(members_[i]);
        }
    }
    return VertexSet::from_sorted(std::move(out));
}

VertexSet PivotSubgraph::neighbors(Vertex v) const {
    auto local = local_index(v);
    if (!local) {
        throw InputError("vertex " + std::to_string(v) + " is not a member of the pivot subgraph");
    }
    std::vector<Vertex> out;
    for (std::uint32_t w : adjacency(*local)) {
        out.push_back(members_[w]);
    }
    return VertexSet::from_sorted(std::move(out));
}

bool is_consistent(const Graph& g, const SearchState& state) {
    const auto& r = state.r;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] >= g.vertex_count()) {
            return false;
        }
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            if (!g.has_edge(r[i], r[j])) {
                return false;
            }
        }
    }
    if (!state.p.intersect(state.x).empty()) {
        return false;
    }
    auto adjacent_to_all = [&](Vertex w) {
        return std::all_of(r.begin(), r.end(), [&](Vertex c) { return g.has_edge(w, c); });
    };
    return std::all_of(state.p.begin(), state.p.end(), adjacent_to_all) &&
           std::all_of(state.x.begin(), state.x.end(), adjacent_to_all);
}

PivotSubgraph build_pivot_subgraph(const Graph& g, const VertexSet& p, const VertexSet& x,
                                   const DegeneracyOrdering& ordering) {
    for (const VertexSet* s : {&p, &x}) {
        if (!s->empty() && s->ids().back() >= g.vertex_count()) {
            throw InputError("vertex " + std::to_string(s->ids().back()) + " out of range");
        }
    }
    std::vector<std::uint32_t> scratch(g.vertex_count(), kAbsent);
    return PivotSubgraphBuilder::from_graph(
        p.view(), x.view(), [&](Vertex v) { return ordering.later_neighbors(v); }, scratch);
}

Vertex select_pivot(const PivotSubgraph& h) {
    if (h.empty()) {
        throw ContractError("select_pivot: P ∪ X is empty");
    }
    return h.member(pivot_local(h, h.tags()));
}

PivotSubgraph restrict_pivot_subgraph(const PivotSubgraph& h, Vertex v) {
    auto local = h.local_index(v);
    if (!local || !h.in_p(*local)) {
        throw ContractError("restrict_pivot_subgraph: vertex " + std::to_string(v) +
                            " is not in P");
    }
    std::vector<std::uint32_t> scratch(h.size(), kAbsent);
    return PivotSubgraphBuilder::restrict(h, h.tags(), *local, scratch);
}

EnumerationStats enumerate_naive(const Graph& g, const CliqueVisitor& visitor,
                                 const EnumerationHooks& hooks) {
    Stopwatch clock;
    EnumerationStats stats;
    std::vector<Vertex> all(g.vertex_count());
    for (std::size_t v = 0; v < all.size(); ++v) {
        all[v] = static_cast<Vertex>(v);
    }
    NaiveSearch search(g, visitor, hooks, stats);
    if (!all.empty()) {
        search.expand(std::move(all), {}, 1);
    }
    stats.elapsed = clock.elapsed();
    return stats;
}

EnumerationStats enumerate_pivot(const Graph& g, const CliqueVisitor& visitor,
                                 const EnumerationHooks& hooks) {
    Stopwatch clock;
    EnumerationStats stats;
    if (g.vertex_count() > 0) {
        std::vector<Vertex> all(g.vertex_count());
        for (std::size_t v = 0; v < all.size(); ++v) {
            all[v] = static_cast<Vertex>(v);
        }
        std::vector<std::uint32_t> scratch(g.vertex_count(), kAbsent);
        auto forward = [&](Vertex v) {
            auto adj = g.neighbors(v);
            return std::span<const Vertex>(std::upper_bound(adj.begin(), adj.end(), v), adj.end());
        };
        PivotSubgraph h = PivotSubgraphBuilder::from_graph(all, {}, forward, scratch);
        PivotSearch search(visitor, hooks, stats);
        search.expand(h, 1);
    }
    stats.elapsed = clock.elapsed();
    return stats;
}

EnumerationStats enumerate_degeneracy(const Graph& g, const CliqueVisitor& visitor,
                                      const EnumerationHooks& hooks) {
    Stopwatch clock;
    EnumerationStats stats;
    const DegeneracyOrdering ordering = degeneracy_ordering(g);
    const std::size_t d = ordering.degeneracy();

    std::vector<std::uint32_t> scratch(g.vertex_count(), kAbsent);
    std::vector<Vertex> later;
    std::vector<Vertex> earlier;
    PivotSearch search(visitor, hooks, stats);
    for (Vertex v : ordering.order()) {
        later.clear();
        earlier.clear();
        const std::size_t pos = ordering.position(v);
        for (Vertex w : g.neighbors(v)) {
            (ordering.position(w) > pos ? later : earlier).push_back(w);
        }
        if (later.size() > d) {
            throw ContractError("enumerate_degeneracy: outer call at vertex " + std::to_string(v) +
                                " has |P| = " + std::to_string(later.size()) + " > d = " +
                                std::to_string(d));
        }
        if (hooks.on_outer_call) {
            hooks.on_outer_call(v, later.size(), earlier.size());
        }
        PivotSubgraph h = PivotSubgraphBuilder::from_graph(
            later, earlier, [&](Vertex u) { return ordering.later_neighbors(u); }, scratch);
        search.clique().assign(1, v);
        search.expand(h, 1);
    }
    stats.elapsed = clock.elapsed();
    return stats;
}

}  // namespace mce
