#include <doctest.h>

#include <cmath>
#include <limits>

#include "mce/bron_kerbosch.hpp"
#include "mce/degeneracy.hpp"
#include "mce/error.hpp"
#include "mce/extremal.hpp"
#include "mce/oracle.hpp"

using namespace mce;

namespace {

std::uint64_t pow3(std::size_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) {
        r *= 3;
    }
    return r;
}

}  // namespace

TEST_CASE("moon_moser_graph") {
    Graph g3 = moon_moser_graph(3);
    CHECK(g3.vertex_count() == 3);
    CHECK(g3.edge_count() == 0);
    CHECK(enumerate_oracle(g3).size() == 3);

    Graph g6 = moon_moser_graph(6);
    CHECK(g6.edge_count() == 9);
    CHECK(enumerate_oracle(g6).size() == 9);

    CHECK(enumerate_pivot(moon_moser_graph(9)).clique_count == 27);

    for (std::size_t n : {3, 6, 9, 12, 15, 30}) {
        Graph g = moon_moser_graph(n);
        for (Vertex v = 0; v < n; ++v) {
            CHECK(g.degree(v) == n - 3);
            // Part mates are the only non-neighbors.
            for (Vertex w = 0; w < n; ++w) {
                CHECK(g.has_edge(v, w) == (v / 3 != w / 3));
            }
        }
        CHECK(check_edge_bound(g, degeneracy_ordering(g).degeneracy()));
    }

    CHECK_THROWS_AS(moon_moser_graph(0), InputError);
    CHECK_THROWS_AS(moon_moser_graph(4), InputError);
    CHECK_THROWS_AS(moon_moser_graph(1), InputError);
}

TEST_CASE("lower_bound_graph") {
    Graph g = lower_bound_graph(10, 6);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 33);  // 4 * 6 + 9
    CHECK(degeneracy_ordering(g).degeneracy() == 6);

    CHECK(enumerate_degeneracy(lower_bound_graph(9, 6)).clique_count == 27);

    SUBCASE("hypotheses are enforced") {
        CHECK_THROWS_WITH_AS(lower_bound_graph(6, 6), doctest::Contains("n >= d+3"), InputError);
        CHECK_THROWS_WITH_AS(lower_bound_graph(8, 6), doctest::Contains("n >= d+3"), InputError);
        CHECK_THROWS_WITH_AS(lower_bound_graph(10, 4), doctest::Contains("multiple of 3"), InputError);
        CHECK_THROWS_WITH_AS(lower_bound_graph(10, 0), doctest::Contains("multiple of 3"), InputError);
        CHECK_THROWS_AS((ExtremalSpec{5, 3}.validate()), InputError);
        CHECK_NOTHROW((ExtremalSpec{6, 3}.validate()));
    }

    SUBCASE("layout: independent block joined to a Moon-Moser block") {
        for (auto [n, d] : std::vector<std::pair<std::size_t, std::size_t>>{{9, 6}, {20, 9}, {40, 12}}) {
            Graph lb = lower_bound_graph(n, d);
            const std::size_t k = n - d;
            for (Vertex u = 0; u < n; ++u) {
                for (Vertex v = u + 1; v < n; ++v) {
                    bool expected = false;
                    if (u < k) {
                        expected = v >= k;
                    } else {
                        expected = (u - k) / 3 != (v - k) / 3;
                    }
                    CHECK(lb.has_edge(u, v) == expected);
                }
            }
            CHECK(lb.edge_count() == k * d + d * (d - 3) / 2);
            CHECK(degeneracy_ordering(lb).degeneracy() == d);
            CHECK(check_edge_bound(lb, d));
        }
    }

    SUBCASE("every clique takes one independent vertex and one vertex per part") {
        const std::size_t n = 15;
        const std::size_t d = 9;
        Graph lb = lower_bound_graph(n, d);
        std::size_t bad = 0;
        auto stats = enumerate_degeneracy(lb, [&](std::span<const Vertex> c) {
            std::vector<int> per_part(d / 3, 0);
            int independent = 0;
            for (Vertex v : c) {
                if (v < n - d) {
                    ++independent;
                } else {
                    ++per_part[(v - (n - d)) / 3];
                }
            }
            bad += (independent == 1 &&
                    std::all_of(per_part.begin(), per_part.end(), [](int x) { return x == 1; }))
                       ? 0
                       : 1;
        });
        CHECK(bad == 0);
        CHECK(stats.clique_count == (n - d) * pow3(d / 3));
    }
}

TEST_CASE("max_clique_count_bound") {
    CHECK(max_clique_count_bound(10, 6) == 36);
    CHECK(max_clique_count_bound(6, 3) == 9);
    CHECK(max_clique_count_bound(100, 15) == 20655);
    CHECK(enumerate_degeneracy(lower_bound_graph(100, 15)).clique_count == 20655);
    CHECK(max_clique_count_bound(3, 0) == 3);

    CHECK(max_clique_count_bound(120, 117) == 12157665459056928801ULL);  // 3^40
    CHECK_THROWS_AS(max_clique_count_bound(122, 117), RangeError);
    CHECK_THROWS_AS(max_clique_count_bound(200, 150), RangeError);

    CHECK_THROWS_AS(max_clique_count_bound(10, 4), InputError);
    CHECK_THROWS_AS(max_clique_count_bound(8, 6), InputError);
}

TEST_CASE("SplitMix64 reference stream") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);
}

TEST_CASE("random_gnp") {
    CHECK(random_gnp(20, 0.0, 3).edge_count() == 0);
    CHECK(random_gnp(20, 1.0, 3).edge_count() == 190);
    CHECK(random_gnp(0, 0.5, 3).vertex_count() == 0);

    Graph a = random_gnp(10, 0.5, 42);
    CHECK(a == random_gnp(10, 0.5, 42));
    CHECK_FALSE(a == random_gnp(10, 0.5, 43));

    // Frozen from an independent Python transcription of the documented stream.
    CHECK(a.edge_count() == 21);
    auto edges = a.edges();
    CHECK(std::vector<Edge>(edges.begin(), edges.begin() + 8) ==
          std::vector<Edge>{{0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 7}, {0, 9}, {1, 3}, {1, 4}});

    CHECK_THROWS_AS(random_gnp(5, -0.1, 0), InputError);
    CHECK_THROWS_AS(random_gnp(5, 1.5, 0), InputError);
    CHECK_THROWS_AS(random_gnp(5, std::numeric_limits<double>::quiet_NaN(), 0), InputError);
}

TEST_CASE("simple families") {
    CHECK(path_graph(0).vertex_count() == 0);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(complete_graph(6).edge_count() == 15);
    CHECK(empty_graph(7).edge_count() == 0);
    CHECK(empty_graph(7).vertex_count() == 7);
}
