#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "corpus.hpp"
#include "mce/degeneracy.hpp"
#include "mce/error.hpp"
#include "mce/extremal.hpp"

using namespace mce;

namespace {

/// Quadratic reference peeling: rescan every vertex for the minimum
/// (degree, id) at each step.
std::pair<std::vector<Vertex>, std::size_t> reference_peeling(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    std::vector<bool> gone(n, false);
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
    }
    std::vector<Vertex> order;
    std::size_t d = 0;
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = 0;
        bool found = false;
        for (Vertex v = 0; v < n; ++v) {
            if (!gone[v] && (!found || deg[v] < deg[best])) {
                best = v;
                found = true;
            }
        }
        gone[best] = true;
        d = std::max(d, deg[best]);
        order.push_back(best);
        for (Vertex w : g.neighbors(best)) {
            if (!gone[w]) {
                --deg[w];
            }
        }
    }
    return {order, d};
}

/// Minimum over all n! orderings of the maximum later-degree.
std::size_t exhaustive_degeneracy(const Graph& g) {
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> pos(perm.size());
    std::size_t best = g.vertex_count();
    do {
        for (std::size_t i = 0; i < perm.size(); ++i) {
            pos[perm[i]] = i;
        }
        std::size_t worst = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            std::size_t later = 0;
            for (Vertex w : g.neighbors(v)) {
                later += pos[w] > pos[v] ? 1 : 0;
            }
            worst = std::max(worst, later);
        }
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return perm.empty() ? 0 : best;
}

void check_ordering_invariants(const Graph& g, const DegeneracyOrdering& o) {
    const std::size_t n = g.vertex_count();
    REQUIRE(o.order().size() == n);
    std::size_t max_later = 0;
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(o.position(o.order()[i]) == i);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto later = o.later_neighbors(v);
        CHECK(later.size() <= o.degeneracy());
        CHECK(std::is_sorted(later.begin(), later.end()));
        max_later = std::max(max_later, later.size());
        auto [p, x] = later_earlier_split(o, g, v);
        CHECK(p.ids() == std::vector<Vertex>(later.begin(), later.end()));
        CHECK(p.intersect(x).empty());
        CHECK(p.size() + x.size() == g.degree(v));
        for (Vertex w : p) {
            CHECK(o.position(w) > o.position(v));
        }
        for (Vertex w : x) {
            CHECK(o.position(w) < o.position(v));
        }
    }
    CHECK(max_later == o.degeneracy());

    const auto& c = o.counters();
    CHECK(c.removals == n);
    CHECK(c.bucket_moves == g.edge_count());
    CHECK(c.bucket_scans <= n + g.edge_count());
}

}  // namespace

TEST_CASE("degeneracy of small named graphs") {
    CHECK(degeneracy_ordering(path_graph(4)).degeneracy() == 1);
    CHECK(degeneracy_ordering(complete_graph(4)).degeneracy() == 3);
    CHECK(degeneracy_ordering(lower_bound_graph(10, 6)).degeneracy() == 6);
    CHECK(degeneracy_ordering(moon_moser_graph(9)).degeneracy() == 6);
    CHECK(degeneracy_ordering(empty_graph(0)).degeneracy() == 0);
    CHECK(degeneracy_ordering(empty_graph(0)).order().empty());
    CHECK(degeneracy_ordering(empty_graph(4)).degeneracy() == 0);
}

TEST_CASE("ties go to the smallest id") {
    // Path 0-1-2: 0 and 2 tie at degree 1, then 1 and 2 tie at degree 1.
    Graph g = path_graph(3);
    auto o = degeneracy_ordering(g);
    CHECK(std::vector<Vertex>(o.order().begin(), o.order().end()) == std::vector<Vertex>{0, 1, 2});
    auto [p, x] = later_earlier_split(o, g, 0);
    CHECK(p == VertexSet{1});
    CHECK(x.empty());
}

TEST_CASE("later_earlier_split at the ends of the order") {
    Graph g = random_gnp(15, 0.4, 5);
    auto o = degeneracy_ordering(g);
    CHECK(later_earlier_split(o, g, o.order().front()).second.empty());
    CHECK(later_earlier_split(o, g, o.order().back()).first.empty());
    CHECK_THROWS_AS(later_earlier_split(o, g, 15), InputError);
}

TEST_CASE("extremal graph: the first peeled vertex has exactly d later neighbors") {
    for (auto [n, d] : std::vector<std::pair<std::size_t, std::size_t>>{{9, 6}, {10, 6}, {20, 9}, {50, 12}}) {
        Graph g = lower_bound_graph(n, d);
        auto o = degeneracy_ordering(g);
        CHECK(o.order().front() == 0);
        CHECK(o.later_neighbors(o.order().front()).size() == d);
    }
}

TEST_CASE("check_edge_bound") {
    CHECK(check_edge_bound(lower_bound_graph(10, 6), 6));  // 33 <= 39
    CHECK(check_edge_bound(complete_graph(4), 3));          // 6 <= 6, tight
    CHECK(check_edge_bound(empty_graph(5), 0));
    CHECK(check_edge_bound(empty_graph(0), 0));
    CHECK_FALSE(check_edge_bound(complete_graph(4), 2));  // 6 > 5
}

TEST_CASE("ordering matches the quadratic reference peeling on the corpus") {
    for (const auto& [name, g] : testing::corpus()) {
        CAPTURE(name);
        auto o = degeneracy_ordering(g);
        auto [order, d] = reference_peeling(g);
        CHECK(std::vector<Vertex>(o.order().begin(), o.order().end()) == order);
        CHECK(o.degeneracy() == d);
        check_ordering_invariants(g, o);
        CHECK(check_edge_bound(g, o.degeneracy()));
    }
}

TEST_CASE("property: peeling degeneracy equals the exhaustive minimum over orderings") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng.next() % 8;
        const double p = 0.15 * static_cast<double>(1 + rng.next() % 6);
        Graph g = random_gnp(n, p, rng.next());
        CAPTURE(n);
        CAPTURE(p);
        CHECK(degeneracy_ordering(g).degeneracy() == exhaustive_degeneracy(g));
    }
}

TEST_CASE("peeling work stays linear on large sparse graphs") {
    Graph g = random_gnp(3000, 0.002, 17);
    auto o = degeneracy_ordering(g);
    check_ordering_invariants(g, o);
}
