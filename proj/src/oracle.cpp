#include "mce/oracle.hpp"

#include <algorithm>
#include <string>

#include "mce/degeneracy.hpp"
#include "mce/error.hpp"

namespace mce {

void canonicalize(CliqueSet& cliques) {
    for (auto& c : cliques) {
        std::sort(c.begin(), c.end());
    }
    std::sort(cliques.begin(), cliques.end());
}

bool is_maximal_clique(const Graph& g, std::span<const Vertex> clique) {
    if (clique.empty()) {
        throw InputError("is_maximal_clique: empty vertex sequence");
    }
    std::vector<Vertex> members(clique.begin(), clique.end());
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
        throw InputError("is_maximal_clique: repeated vertex");
    }
    if (members.back() >= g.vertex_count()) {
        throw InputError("vertex " + std::to_string(members.back()) + " out of range");
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!g.has_edge(members[i], members[j])) {
                return false;
            }
        }
    }
    return common_neighborhood(g, VertexSet::from_sorted(std::move(members))).empty();
}

CliqueSet enumerate_oracle(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kOracleMaxVertices) {
        throw SizeError("exhaustive oracle is limited to n <= " +
                        std::to_string(kOracleMaxVertices) + " (got n=" + std::to_string(n) + ")");
    }
    // Closed neighborhoods as bitmasks make the clique pre-check one AND per member.
    std::vector<std::uint32_t> closed(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        closed[v] = 1U << v;
        for (Vertex w : g.neighbors(v)) {
            closed[v] |= 1U << w;
        }
    }

    CliqueSet out;
    std::vector<Vertex> members;
    const std::uint32_t limit = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    for (std::uint32_t mask = 1; mask != 0 && mask <= limit; ++mask) {
        bool clique = true;
        members.clear();
        for (Vertex v = 0; v < n && clique; ++v) {
            if (mask & (1U << v)) {
                clique = (closed[v] & mask) == mask;
                members.push_back(v);
            }
        }
        if (clique && is_maximal_clique(g, members)) {
            out.push_back(members);
        }
    }
    canonicalize(out);
    return out;
}

CliqueSet enumerate_subsets_degeneracy(const Graph& g, SubsetEnumerationStats* stats) {
    const DegeneracyOrdering ordering = degeneracy_ordering(g);
    const std::size_t d = ordering.degeneracy();
    if (d > kSubsetsMaxDegeneracy) {
        throw SizeError("later-neighbor subset enumeration is limited to d <= " +
                        std::to_string(kSubsetsMaxDegeneracy) + " (got d=" + std::to_string(d) + ")");
    }
    SubsetEnumerationStats local;
    local.degeneracy = d;

    CliqueSet out;
    std::vector<Vertex> later;
    std::vector<std::uint32_t> later_mask;
    std::vector<Vertex> candidate;
    for (Vertex v : ordering.order()) {
        auto span = ordering.later_neighbors(v);
        later.assign(span.begin(), span.end());
        std::sort(later.begin(), later.end(), [&](Vertex a, Vertex b) {
            return ordering.position(a) < ordering.position(b);
        });
        const std::size_t k = later.size();

        // later_mask[i]: bits j > i such that later[j] is a later neighbor of later[i].
        later_mask.assign(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            auto li = ordering.later_neighbors(later[i]);
            for (std::size_t j = i + 1; j < k; ++j) {
                if (std::binary_search(li.begin(), li.end(), later[j])) {
                    later_mask[i] |= 1U << j;
                }
            }
        }

        const std::uint64_t subsets = std::uint64_t{1} << k;
        for (std::uint64_t s = 0; s < subsets; ++s) {
            const auto subset = static_cast<std::uint32_t>(s);
            bool clique = true;
            for (std::size_t i = 0; i < k && clique; ++i) {
                if (subset & (1U << i)) {
                    const std::uint32_t after = subset & ~((2U << i) - 1);
                    clique = (after & ~later_mask[i]) == 0;
                }
            }
            if (!clique) {
                continue;
            }
            candidate.assign(1, v);
            for (std::size_t i = 0; i < k; ++i) {
                if (subset & (1U << i)) {
                    candidate.push_back(later[i]);
                }
            }
            if (is_maximal_clique(g, candidate)) {
                out.push_back(candidate);
            }
        }
        local.subsets_tested += subsets;
        local.max_subsets_per_vertex = std::max(local.max_subsets_per_vertex, subsets);
    }
    canonicalize(out);
    if (stats != nullptr) {
        *stats = local;
    }
    return out;
}

}  // namespace mce
