#include <doctest.h>

#include "corpus.hpp"
#include "mce/bron_kerbosch.hpp"
#include "mce/degeneracy.hpp"
#include "mce/error.hpp"
#include "mce/extremal.hpp"
#include "mce/oracle.hpp"

using namespace mce;

TEST_CASE("is_maximal_clique") {
    Graph tri = complete_graph(3);
    const std::vector<Vertex> all{0, 1, 2};
    const std::vector<Vertex> pair{0, 1};
    const std::vector<Vertex> shuffled{2, 0, 1};
    CHECK(is_maximal_clique(tri, all));
    CHECK(is_maximal_clique(tri, shuffled));
    CHECK_FALSE(is_maximal_clique(tri, pair));

    const std::vector<Vertex> ends{0, 2};
    CHECK_FALSE(is_maximal_clique(path_graph(3), ends));

    const std::vector<Vertex> lone{3};
    CHECK(is_maximal_clique(empty_graph(4), lone));

    CHECK_THROWS_AS(is_maximal_clique(tri, std::vector<Vertex>{}), InputError);
    CHECK_THROWS_AS(is_maximal_clique(tri, std::vector<Vertex>{1, 1}), InputError);
    CHECK_THROWS_AS(is_maximal_clique(tri, std::vector<Vertex>{5}), InputError);
}

TEST_CASE("enumerate_oracle") {
    CHECK(enumerate_oracle(complete_graph(3)) == CliqueSet{{0, 1, 2}});
    CHECK(enumerate_oracle(empty_graph(3)) == CliqueSet{{0}, {1}, {2}});
    CHECK(enumerate_oracle(empty_graph(0)).empty());

    auto lb = enumerate_oracle(lower_bound_graph(9, 6));
    CHECK(lb.size() == 27);
    for (const auto& c : lb) {
        CHECK(c.size() == 3);
    }

    // Path 0-1-2-3: the three edges.
    CHECK(enumerate_oracle(path_graph(4)) == CliqueSet{{0, 1}, {1, 2}, {2, 3}});

    CHECK(enumerate_oracle(random_gnp(20, 0.3, 1)).size() > 0);
    CHECK_THROWS_AS(enumerate_oracle(empty_graph(21)), SizeError);
}

TEST_CASE("enumerate_subsets_degeneracy") {
    CHECK(enumerate_subsets_degeneracy(complete_graph(4)) == CliqueSet{{0, 1, 2, 3}});

    auto k33 = enumerate_subsets_degeneracy(moon_moser_graph(6));
    CHECK(k33 == enumerate_oracle(moon_moser_graph(6)));
    CHECK(k33.size() == 9);
    for (const auto& c : k33) {
        CHECK(c.size() == 2);
    }

    Graph g = random_gnp(12, 0.4, 7);
    CHECK(enumerate_subsets_degeneracy(g) == enumerate_oracle(g));

    CHECK_THROWS_AS(enumerate_subsets_degeneracy(complete_graph(27)), SizeError);
}

TEST_CASE("subset counts respect the 2^d bound per vertex") {
    for (const auto& [name, g] : testing::corpus()) {
        CAPTURE(name);
        SubsetEnumerationStats stats;
        auto cliques = enumerate_subsets_degeneracy(g, &stats);
        CHECK(stats.degeneracy == degeneracy_ordering(g).degeneracy());
        CHECK(stats.max_subsets_per_vertex <= (std::uint64_t{1} << stats.degeneracy));
        CHECK(stats.subsets_tested <= g.vertex_count() * (std::uint64_t{1} << stats.degeneracy));

        CliqueSet bk;
        enumerate_degeneracy(g, [&](std::span<const Vertex> c) { bk.emplace_back(c.begin(), c.end()); });
        canonicalize(bk);
        CHECK(cliques == bk);
        if (g.vertex_count() <= kOracleMaxVertices) {
            CHECK(cliques == enumerate_oracle(g));
        }
    }
}

TEST_CASE("canonicalize orders within and across cliques") {
    CliqueSet s{{3, 1}, {2, 0}, {0, 1, 2}};
    canonicalize(s);
    CHECK(s == CliqueSet{{0, 1, 2}, {0, 2}, {1, 3}});
}
