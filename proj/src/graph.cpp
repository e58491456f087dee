#include "mce/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "mce/error.hpp"

namespace mce {

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet VertexSet::from_sorted(std::vector<Vertex> ids) {
    if (std::adjacent_find(ids.begin(), ids.end(), std::greater_equal<>{}) != ids.end()) {
        throw ContractError("VertexSet::from_sorted: sequence is not strictly ascending");
    }
    VertexSet s;
    s.ids_ = std::move(ids);
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

VertexSet VertexSet::intersect(std::span<const Vertex> ascending) const {
    std::vector<Vertex> out;
    intersect_sorted(ids_, ascending, out);
    VertexSet s;
    s.ids_ = std::move(out);
    return s;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.begin(), other.end(), begin(), end());
}

void intersect_sorted(std::span<const Vertex> a, std::span<const Vertex> b,
                      std::vector<Vertex>& out) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            out.push_back(*i);
            ++i;
            ++j;
        }
    }
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (std::size_t v = 0; v < vertex_count(); ++v) {
        best = std::max(best, degree(static_cast<Vertex>(v)));
    }
    return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= vertex_count() || v >= vertex_count()) {
        return false;
    }
    if (degree(u) > degree(v)) {
        std::swap(u, v);
    }
    auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (std::size_t u = 0; u < vertex_count(); ++u) {
        for (Vertex v : neighbors(static_cast<Vertex>(u))) {
            if (u < v) {
                out.emplace_back(static_cast<Vertex>(u), v);
            }
        }
    }
    return out;
}

Graph graph_from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has an endpoint outside [0, " + std::to_string(n) + ")");
        }
        if (u == v) {
            throw InputError("self-loop at vertex " + std::to_string(u));
        }
        ++deg[u];
        ++deg[v];
    }

    std::vector<std::size_t> offsets(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        offsets[v + 1] = offsets[v] + deg[v];
    }
    std::vector<Vertex> adj(offsets[n]);
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    for (auto [u, v] : edges) {
        adj[fill[u]++] = v;
        adj[fill[v]++] = u;
    }

    // Sort each row, drop duplicates, compact.
    Graph g;
    g.offsets_.assign(n + 1, 0);
    g.neighbors_.reserve(adj.size());
    for (std::size_t v = 0; v < n; ++v) {
        auto first = adj.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
        auto last = adj.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
        std::sort(first, last);
        last = std::unique(first, last);
        g.neighbors_.insert(g.neighbors_.end(), first, last);
        g.offsets_[v + 1] = g.neighbors_.size();
    }
    g.neighbors_.shrink_to_fit();
    return g;
}

VertexSet neighborhood(const Graph& g, Vertex v) {
    if (v >= g.vertex_count()) {
        throw InputError("vertex " + std::to_string(v) + " out of range");
    }
    auto adj = g.neighbors(v);
    return VertexSet::from_sorted({adj.begin(), adj.end()});
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& w) {
    if (w.empty()) {
        throw InputError("common neighborhood of an empty vertex set is undefined");
    }
    // Start from the smallest neighborhood so the running set is small.
    Vertex seed = w[0];
    for (Vertex v : w) {
        if (v >= g.vertex_count()) {
            throw InputError("vertex " + std::to_string(v) + " out of range");
        }
        if (g.degree(v) < g.degree(seed)) {
            seed = v;
        }
    }
    VertexSet acc = neighborhood(g, seed);
    for (Vertex v : w) {
        if (v != seed) {
            acc = acc.intersect(g.neighbors(v));
        }
    }
    return acc;
}

namespace {

bool parse_uint(std::string_view tok, std::uint64_t& out) {
    if (tok.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') {
            ++j;
        }
        if (j > i) {
            toks.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return toks;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    constexpr std::uint64_t kMaxVertex = std::numeric_limits<Vertex>::max() - 1;

    std::vector<Edge> edges;
    std::optional<std::uint64_t> declared;
    std::uint64_t max_id = 0;
    bool seen_vertex = false;

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line(raw);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        auto toks = split_ws(line);
        if (toks.empty() || toks[0].front() == '#') {
            continue;
        }
        if (toks[0] == "n") {
            if (toks.size() != 2) {
                throw ParseError(lineno, "expected \"n <count>\"");
            }
            if (declared) {
                throw ParseError(lineno, "duplicate vertex-count directive");
            }
            if (!edges.empty()) {
                throw ParseError(lineno, "vertex-count directive after the first edge");
            }
            std::uint64_t count = 0;
            if (!parse_uint(toks[1], count) || count > kMaxVertex + 1) {
                throw ParseError(lineno, "invalid vertex count '" + std::string(toks[1]) + "'");
            }
            declared = count;
            continue;
        }
        if (toks.size() != 2) {
            throw ParseError(lineno, "expected two vertex ids");
        }
        std::uint64_t u = 0;
        std::uint64_t v = 0;
        if (!parse_uint(toks[0], u) || !parse_uint(toks[1], v)) {
            throw ParseError(lineno, "malformed vertex id");
        }
        if (u > kMaxVertex || v > kMaxVertex) {
            throw ParseError(lineno, "vertex id too large");
        }
        if (u == v) {
            throw InputError("line " + std::to_string(lineno) + ": self-loop at vertex " +
                             std::to_string(u));
        }
        if (declared && (u >= *declared || v >= *declared)) {
            throw InputError("line " + std::to_string(lineno) +
                             ": vertex id exceeds declared count " + std::to_string(*declared));
        }
        max_id = std::max({max_id, u, v});
        seen_vertex = true;
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (in.bad()) {
        throw InputError("read error");
    }

    std::size_t n = declared ? static_cast<std::size_t>(*declared)
                             : (seen_vertex ? static_cast<std::size_t>(max_id) + 1 : 0);
    return graph_from_edges(n, edges);
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "n " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

}  // namespace mce
