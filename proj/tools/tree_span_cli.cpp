#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treespan/graph.hpp"
#include "treespan/oracle.hpp"
#include "treespan/random_tree.hpp"
#include "treespan/tree_span.hpp"
#include "treespan/witness.hpp"

namespace {

// Exit codes: 0 success/pass, 1 verification fail, 2 input error,
// 3 internal invariant violation.
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

std::string read_input(const std::string& path) {
    if (path.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

nlohmann::json span_to_json(const treespan::SpanResult& r) {
    nlohmann::json j;
    j["span"] = r.span;
    j["kind"] = treespan::to_string(r.kind);
    if (r.witness_vertex)
        j["witness_vertex"] = *r.witness_vertex;
    else
        j["witness_vertex"] = nullptr;
    j["eta"] = r.eta;
    j["radius"] = r.radius;
    return j;
}

void print_span(const treespan::SpanResult& r, bool json) {
    if (json) {
        std::cout << span_to_json(r).dump() << '\n';
        return;
    }
    std::cout << "span: " << r.span << '\n'
              << "kind: " << treespan::to_string(r.kind) << '\n';
    if (r.witness_vertex) std::cout << "witness_vertex: " << *r.witness_vertex << '\n';
    std::cout << "eta: " << r.eta << '\n' << "radius: " << r.radius << '\n';
}

int run_span(const std::string& input, bool json) {
    const auto tree = treespan::validate_tree(treespan::parse_edge_list(read_input(input)));
    print_span(treespan::strong_vertex_span(tree), json);
    return 0;
}

int run_edge_span(const std::string& input, bool json) {
    const auto tree = treespan::validate_tree(treespan::parse_edge_list(read_input(input)));
    print_span(treespan::strong_edge_span(tree), json);
    return 0;
}

int run_witness(const std::string& input) {
    const auto tree = treespan::validate_tree(treespan::parse_edge_list(read_input(input)));
    const auto pair = treespan::build_witness(tree);
    // Refuse to emit a witness that does not verify; that would be a bug.
    const auto report = treespan::verify_walk_pair(tree.graph(), pair, pair.claimed_span);
    if (!report.pass)
        throw std::logic_error("constructed witness failed verification: " + report.to_json());
    std::cout << treespan::walk_pair_to_json(pair) << '\n';
    return 0;
}

int run_verify(const std::string& input, const std::string& walk_path, bool json) {
    const auto graph = treespan::parse_edge_list(read_input(input));
    const auto pair = treespan::walk_pair_from_json(read_input(walk_path));
    const auto report = treespan::verify_walk_pair(graph, pair, pair.claimed_span);
    if (json) {
        std::cout << report.to_json() << '\n';
    } else {
        std::cout << (report.pass ? "PASS" : "FAIL") << '\n'
                  << "valid_A: " << report.valid_a << "  valid_B: " << report.valid_b << '\n'
                  << "surjective_A: " << report.surjective_a
                  << "  surjective_B: " << report.surjective_b << '\n';
        if (report.min_distance) std::cout << "min_distance: " << *report.min_distance << '\n';
        if (report.first_violation)
            std::cout << "violation at step " << report.first_violation->first << ": "
                      << report.first_violation->second << '\n';
    }
    return report.pass ? 0 : kExitVerifyFail;
}

int run_oracle(const std::string& input, bool json) {
    const auto graph = treespan::parse_edge_list(read_input(input));
    const int span = treespan::product_span_oracle(graph);
    if (json)
        std::cout << nlohmann::json{{"span", span}}.dump() << '\n';
    else
        std::cout << "span: " << span << '\n';
    return 0;
}

int run_gen(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto tree = treespan::random_tree(n, rng);
    std::cout << treespan::format_edge_list(tree.graph());
    return 0;
}

int run_enumerate(int n) {
    treespan::enumerate_labeled_trees(n, [](const treespan::Tree& t) {
        std::cout << treespan::format_edge_list(t.graph()) << '\n';
    });
    return 0;
}

int run_bench(const std::vector<int>& sizes, int trials, std::uint64_t seed, bool json) {
    if (!std::is_sorted(sizes.begin(), sizes.end()))
        throw std::invalid_argument("bench sizes must be ascending");
    std::mt19937_64 rng(seed);
    nlohmann::json rows = nlohmann::json::array();
    double prev_median = 0.0;
    int prev_n = 0;
    if (!json) std::cout << "n\tmedian_ms\tratio\n";
    for (int n : sizes) {
        std::vector<double> times;
        for (int trial = 0; trial < trials; ++trial) {
            const auto tree = treespan::random_tree(n, rng);
            const auto start = std::chrono::steady_clock::now();
            const auto result = treespan::strong_vertex_span(tree);
            const auto stop = std::chrono::steady_clock::now();
            if (result.span < 0) throw std::logic_error("negative span");  // keep the call alive
            times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        }
        std::sort(times.begin(), times.end());
        const double median = times[times.size() / 2];
        const bool doubled = prev_n > 0 && n == 2 * prev_n;
        nlohmann::json row{{"n", n}, {"median_ms", median}};
        if (doubled) row["ratio"] = median / prev_median;
        rows.push_back(row);
        if (!json) {
            std::cout << n << '\t' << median << '\t';
            if (doubled)
                std::cout << median / prev_median << '\n';
            else
                std::cout << "-\n";
        }
        prev_median = median;
        prev_n = n;
    }
    if (json) std::cout << rows.dump() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strong vertex/edge span of trees"};
    app.require_subcommand(1);

    std::string input;
    std::string walk_path;
    bool json = false;
    std::uint64_t seed = 0;
    int n = 1;
    int trials = 5;
    std::vector<int> sizes{250000, 500000, 1000000};

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "edge-list file (stdin when absent)");
        cmd->add_flag("--json", json, "emit JSON");
    };

    auto* span = app.add_subcommand("span", "strong vertex span of a tree");
    add_input(span);
    auto* edge_span = app.add_subcommand("edge-span", "strong edge span of a tree");
    add_input(edge_span);
    auto* witness = app.add_subcommand("witness", "emit an optimal walk pair as JSON");
    witness->add_option("--input", input, "edge-list file (stdin when absent)");
    auto* verify = app.add_subcommand("verify", "verify a walk pair against a graph");
    add_input(verify);
    verify->add_option("--walk", walk_path, "walk-pair JSON file")->required();
    auto* oracle = app.add_subcommand("oracle", "brute-force span of a small connected graph");
    add_input(oracle);
    auto* gen = app.add_subcommand("gen", "generate a uniform random labeled tree");
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--seed", seed, "RNG seed (default 0)");
    auto* enumerate = app.add_subcommand("enumerate", "stream all labeled trees on n vertices");
    enumerate->add_option("--n", n, "vertex count (<= 8)")->required();
    auto* bench = app.add_subcommand("bench", "time the solver on random trees");
    bench->add_option("--sizes", sizes, "ascending tree sizes")->delimiter(',');
    bench->add_option("--trials", trials, "trials per size");
    bench->add_option("--seed", seed, "RNG seed (default 0)");
    bench->add_flag("--json", json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInputError : 0;
    }

    try {
        if (span->parsed()) return run_span(input, json);
        if (edge_span->parsed()) return run_edge_span(input, json);
        if (witness->parsed()) return run_witness(input);
        if (verify->parsed()) return run_verify(input, walk_path, json);
        if (oracle->parsed()) return run_oracle(input, json);
        if (gen->parsed()) return run_gen(n, seed);
        if (enumerate->parsed()) return run_enumerate(n);
        if (bench->parsed()) return run_bench(sizes, trials, seed, json);
    } catch (const std::logic_error& e) {
        // logic_error other than invalid_argument signals a broken invariant
        if (dynamic_cast<const std::invalid_argument*>(&e)) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitInputError;
        }
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternalError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return 0;
}
