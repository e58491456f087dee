#include "mce/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mce/bron_kerbosch.hpp"
#include "mce/degeneracy.hpp"
#include "mce/error.hpp"
#include "mce/extremal.hpp"
#include "mce/oracle.hpp"

namespace mce::cli {

namespace {

enum class Algorithm { degeneracy, pivot, naive, subsets, oracle };

const std::map<std::string, Algorithm> kAlgorithms{
    {"degeneracy", Algorithm::degeneracy},
    {"pivot", Algorithm::pivot},
    {"naive", Algorithm::naive},
    {"subsets", Algorithm::subsets},
    {"oracle", Algorithm::oracle},
};

Graph read_graph(const std::string& path, std::istream& in) {
    if (path == "-") {
        return parse_edge_list(in);
    }
    std::ifstream file(path);
    if (!file) {
        throw InputError("cannot open '" + path + "'");
    }
    return parse_edge_list(file);
}

EnumerationStats run_algorithm(Algorithm algo, const Graph& g, const CliqueVisitor& visitor) {
    switch (algo) {
        case Algorithm::degeneracy:
            return enumerate_degeneracy(g, visitor);
        case Algorithm::pivot:
            return enumerate_pivot(g, visitor);
        case Algorithm::naive:
            return enumerate_naive(g, visitor);
        case Algorithm::subsets:
        case Algorithm::oracle: {
            const auto start = std::chrono::steady_clock::now();
            CliqueSet cliques =
                algo == Algorithm::oracle ? enumerate_oracle(g) : enumerate_subsets_degeneracy(g);
            EnumerationStats stats;
            stats.clique_count = cliques.size();
            if (visitor) {
                for (const auto& c : cliques) {
                    visitor(c);
                }
            }
            stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
                std::chrono::steady_clock::now() - start);
            return stats;
        }
    }
    return {};
}

double millis(std::chrono::nanoseconds ns) { return static_cast<double>(ns.count()) / 1e6; }

void print_clique(std::ostream& out, std::span<const Vertex> clique) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
        if (i > 0) {
            out << ' ';
        }
        out << clique[i];
    }
    out << '\n';
}

struct Options {
    std::string input;
    bool order = false;
    std::string algo;
    bool count_only = false;
    bool canonical = false;
    bool stats = false;
    std::string kind;
    std::size_t n = 0;
    std::size_t d = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::size_t repeat = 1;
};

int cmd_stats(const Options& opt, std::istream& in, std::ostream& out) {
    const Graph g = read_graph(opt.input, in);
    const auto ordering = degeneracy_ordering(g);
    out << "n=" << g.vertex_count() << " m=" << g.edge_count() << " max_degree=" << g.max_degree()
        << " degeneracy=" << ordering.degeneracy() << '\n';
    return kExitOk;
}

int cmd_degeneracy(const Options& opt, std::istream& in, std::ostream& out) {
    const Graph g = read_graph(opt.input, in);
    const auto ordering = degeneracy_ordering(g);
    out << ordering.degeneracy() << '\n';
    if (opt.order) {
        for (Vertex v : ordering.order()) {
            out << v << '\n';
        }
    }
    return kExitOk;
}

int cmd_cliques(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    const Algorithm algo = kAlgorithms.at(opt.algo);
    const Graph g = read_graph(opt.input, in);

    EnumerationStats stats;
    if (opt.count_only) {
        stats = run_algorithm(algo, g, {});
        out << stats.clique_count << '\n';
    } else if (opt.canonical) {
        CliqueSet cliques;
        stats = run_algorithm(algo, g, [&](std::span<const Vertex> c) {
            cliques.emplace_back(c.begin(), c.end());
        });
        canonicalize(cliques);
        for (const auto& c : cliques) {
            print_clique(out, c);
        }
    } else {
        stats = run_algorithm(algo, g, [&](std::span<const Vertex> c) { print_clique(out, c); });
    }
    if (opt.stats) {
        char line[160];
        std::snprintf(line, sizeof line, "count=%llu recursive_calls=%llu max_depth=%zu elapsed_ms=%.3f",
                      static_cast<unsigned long long>(stats.clique_count),
                      static_cast<unsigned long long>(stats.recursive_calls), stats.max_depth,
                      millis(stats.elapsed));
        err << line << '\n';
    }
    return kExitOk;
}

int cmd_gen(const Options& opt, const CLI::App& gen, std::ostream& out) {
    auto require = [&](const char* flag) {
        if (gen.count(flag) == 0) {
            throw InputError("gen " + opt.kind + " requires " + flag);
        }
    };
    Graph g;
    if (opt.kind == "moon-moser") {
        g = moon_moser_graph(opt.n);
    } else if (opt.kind == "lower-bound") {
        require("--d");
        g = lower_bound_graph(opt.n, opt.d);
    } else if (opt.kind == "gnp") {
        require("--p");
        g = random_gnp(opt.n, opt.p, opt.seed);
    } else if (opt.kind == "path") {
        g = path_graph(opt.n);
    } else if (opt.kind == "complete") {
        g = complete_graph(opt.n);
    } else {
        g = empty_graph(opt.n);
    }
    write_edge_list(g, out);
    return kExitOk;
}

int cmd_bench(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<std::pair<std::string, Algorithm>> algos;
    std::stringstream list(opt.algo);
    std::string name;
    while (std::getline(list, name, ',')) {
        auto it = kAlgorithms.find(name);
        if (it == kAlgorithms.end()) {
            throw InputError("unknown algorithm '" + name + "'");
        }
        algos.emplace_back(name, it->second);
    }
    if (algos.empty()) {
        throw InputError("bench needs at least one algorithm");
    }
    const Graph g = read_graph(opt.input, in);

    struct Row {
        std::string name;
        EnumerationStats best;
    };
    std::vector<Row> rows;
    for (const auto& [label, algo] : algos) {
        Row row{label, {}};
        row.best.elapsed = std::chrono::nanoseconds::max();
        for (std::size_t r = 0; r < opt.repeat; ++r) {
            EnumerationStats s = run_algorithm(algo, g, {});
            auto elapsed = std::min(row.best.elapsed, s.elapsed);
            row.best = s;
            row.best.elapsed = elapsed;
        }
        rows.push_back(row);
    }

    out << "# input: " << (opt.input == "-" ? "<stdin>" : opt.input) << " (n=" << g.vertex_count()
        << " m=" << g.edge_count() << ") repeat=" << opt.repeat << '\n';
    out << std::left << std::setw(12) << "algorithm" << std::right << std::setw(16) << "cliques"
        << std::setw(18) << "recursive_calls" << std::setw(11) << "max_depth" << std::setw(16)
        << "min_elapsed_ms" << '\n';
    for (const auto& row : rows) {
        out << std::left << std::setw(12) << row.name << std::right << std::setw(16)
            << row.best.clique_count << std::setw(18) << row.best.recursive_calls << std::setw(11)
            << row.best.max_depth << std::setw(16) << std::fixed << std::setprecision(3)
            << millis(row.best.elapsed) << '\n';
    }

    for (const auto& row : rows) {
        if (row.best.clique_count != rows.front().best.clique_count) {
            err << "correctness failure: " << row.name << " found " << row.best.clique_count
                << " cliques but " << rows.front().name << " found "
                << rows.front().best.clique_count << '\n';
            return kExitCorrectness;
        }
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Maximal clique enumeration for sparse graphs", "mce"};
    app.require_subcommand(1);
    Options opt;

    std::vector<std::string> algo_names;
    for (const auto& [k, v] : kAlgorithms) {
        algo_names.push_back(k);
    }

    auto* stats = app.add_subcommand("stats", "Print n, m, max degree and degeneracy");
    stats->add_option("--input", opt.input, "Edge-list path or - for stdin")->required();

    auto* degen = app.add_subcommand("degeneracy", "Print the degeneracy, optionally the ordering");
    degen->add_option("--input", opt.input, "Edge-list path or - for stdin")->required();
    degen->add_flag("--order", opt.order, "Also print the elimination order, one id per line");

    auto* cliques = app.add_subcommand("cliques", "Enumerate maximal cliques");
    cliques->add_option("--input", opt.input, "Edge-list path or - for stdin")->required();
    cliques->add_option("--algo", opt.algo, "Enumeration algorithm")
        ->required()
        ->check(CLI::IsMember(algo_names));
    cliques->add_flag("--count-only", opt.count_only, "Print only the number of cliques");
    cliques->add_flag("--canonical", opt.canonical, "Sort cliques lexicographically before printing");
    cliques->add_flag("--stats", opt.stats, "Write a stats line to stderr");

    auto* gen = app.add_subcommand("gen", "Generate a graph in edge-list format");
    gen->add_option("kind", opt.kind, "Graph family")
        ->required()
        ->check(CLI::IsMember({"moon-moser", "lower-bound", "gnp", "path", "complete", "empty"}));
    gen->add_option("--n", opt.n, "Vertex count")->required();
    gen->add_option("--d", opt.d, "Degeneracy (lower-bound)");
    gen->add_option("--p", opt.p, "Edge probability (gnp)");
    gen->add_option("--seed", opt.seed, "Random seed (gnp)");

    auto* bench = app.add_subcommand("bench", "Time algorithms in counting mode");
    bench->add_option("--input", opt.input, "Edge-list path or - for stdin")->required();
    bench->add_option("--algo", opt.algo, "Comma-separated algorithm list")->required();
    bench->add_option("--repeat", opt.repeat, "Runs per algorithm; the minimum time is reported")
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (stats->parsed()) {
            return cmd_stats(opt, in, out);
        }
        if (degen->parsed()) {
            return cmd_degeneracy(opt, in, out);
        }
        if (cliques->parsed()) {
            return cmd_cliques(opt, in, out, err);
        }
        if (gen->parsed()) {
            return cmd_gen(opt, *gen, out);
        }
        return cmd_bench(opt, in, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace mce::cli
