#include "iasi/cli.hpp"

#include "iasi/construct.hpp"
#include "iasi/error.hpp"
#include "iasi/json_io.hpp"
#include "iasi/partition.hpp"
#include "iasi/search.hpp"
#include "iasi/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>

#ifndef IASI_VERSION
#define IASI_VERSION "0.0.0"
#endif

namespace iasi::cli {

namespace {

constexpr std::uint64_t max_cli_k = std::numeric_limits<std::int32_t>::max();

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string graph;
    std::string labels;

    std::uint64_t k = 0;
    std::string factors;
    std::string mode = "strong";
    std::size_t vertices = 0;
    std::uint64_t l = 0;
    std::optional<Element> stride;
    std::string out_file;

    std::string target;
    Element universe = 0;
    std::size_t max_size = 0;
    std::uint64_t budget = default_node_budget;
    unsigned threads = 1;

    VertexId vertex = 0;
};

Labeling load_labels(const std::string& path, std::istream& in) {
    if (path == "-") {
        return parse_labeling(in);
    }
    return read_labeling_file(path);
}

void emit(std::ostream& out, const Json& j) {
    out << j.dump() << '\n';
}

FactorPair parse_factors(const std::string& text) {
    const auto comma = text.find(',');
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    try {
        if (comma == std::string::npos) {
            throw std::invalid_argument("missing comma");
        }
        std::size_t used_m = 0;
        std::size_t used_n = 0;
        const auto ms = text.substr(0, comma);
        const auto ns = text.substr(comma + 1);
        m = std::stoull(ms, &used_m);
        n = std::stoull(ns, &used_n);
        if (used_m != ms.size() || used_n != ns.size() || ms.front() == '-' || ns.front() == '-') {
            throw std::invalid_argument("trailing characters");
        }
    } catch (const std::exception&) {
        throw UsageError("--factors expects m,n with positive integers, got \"" + text + "\"");
    }
    return {m, n};
}

void require_flag(const CLI::App& sub, const char* name, const std::string& why) {
    if (sub.count(name) == 0) {
        throw UsageError(std::string(name) + " is required " + why);
    }
}

void forbid_flag(const CLI::App& sub, const char* name, const std::string& why) {
    if (sub.count(name) != 0) {
        throw UsageError(std::string(name) + " cannot be used " + why);
    }
}

int do_verify(const Options& o, std::istream& in, std::ostream& out) {
    const auto g = read_edge_list_file(o.graph);
    const auto f = load_labels(o.labels, in);
    emit(out, report_to_json(verify(g, f)));
    return exit_ok;
}

int do_construct(const CLI::App& sub, const Options& o, std::ostream& out, std::ostream& err) {
    Labeling f;
    if (o.mode == "complete") {
        f = construct_complete_strong(o.vertices, o.l);
    } else {
        const auto g = read_edge_list_file(o.graph);
        const auto bp = bipartition_of(g);
        if (!bp) {
            throw PreconditionError("graph " + o.graph + " is not bipartite; mode " + o.mode +
                                    " needs a bipartite graph");
        }
        if (o.mode == "strong") {
            ConstructionParams params{o.k, std::nullopt, o.stride};
            if (sub.count("--factors") != 0) {
                params.factors = parse_factors(o.factors);
            }
            f = construct_bipartite_strong(g, *bp, params);
        } else {
            f = construct_weak_uniform(g, *bp, o.k);
        }
    }
    if (o.out_file.empty()) {
        emit(out, labeling_to_json(f));
    } else {
        std::ofstream file(o.out_file);
        if (!file) {
            throw Error("cannot write " + o.out_file);
        }
        emit(file, labeling_to_json(f));
        err << "wrote labeling for " << f.size() << " vertices to " << o.out_file << '\n';
    }
    return exit_ok;
}

int do_search(const Options& o, std::ostream& out, std::ostream& err) {
    const auto g = read_edge_list_file(o.graph);
    SearchSpec spec;
    spec.universe_max = o.universe;
    spec.node_budget = o.budget;
    spec.threads = o.threads;
    if (o.target == "any-strong") {
        spec.target = SearchTarget::any_strong();
    } else if (o.target == "strong") {
        spec.target = SearchTarget::strong_uniform(o.k);
    } else {
        spec.target = SearchTarget::weak_uniform(o.k);
    }
    spec.max_label_size = o.max_size != 0 ? o.max_size : static_cast<std::size_t>(o.k);
    const auto outcome = brute_force_search(g, spec);
    if (outcome.status == SearchStatus::exhausted_none) {
        err << "no labeling meets the target with elements in {0.." << spec.universe_max << "} and sizes <= "
            << spec.max_label_size << "; this bounds the search only, not existence in general\n";
    } else if (outcome.status == SearchStatus::budget_exceeded) {
        err << "node budget of " << spec.node_budget << " exhausted before the search completed\n";
    }
    emit(out, outcome_to_json(outcome, spec));
    return exit_ok;
}

int do_reduce(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto g = read_edge_list_file(o.graph);
    const auto f = load_labels(o.labels, in);
    try {
        emit(out, reduction_to_json(topological_reduce(g, f, o.vertex)));
    } catch (const ReductionError& e) {
        static constexpr const char* names[] = {"vertex-out-of-range", "degree-not-two", "neighbors-adjacent",
                                                "input-not-strong",    "shared-difference", "duplicate-edge-label"};
        Json j{{"error", names[static_cast<int>(e.kind())]}, {"message", e.what()}};
        if (auto d = e.shared_difference()) {
            j["shared_difference"] = *d;
        }
        emit(out, j);
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_ok;
}

int do_analyze(const Options& o, std::istream& in, std::ostream& out) {
    const auto g = read_edge_list_file(o.graph);
    const auto f = load_labels(o.labels, in);
    emit(out, partition_to_json(analyze_divisor_partition(g, f, o.k)));
    return exit_ok;
}

} // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Construct, verify, classify and search integer additive set-indexers of graphs", "iasi"};
    app.set_version_flag("--version", IASI_VERSION);
    app.require_subcommand(1);

    auto* verify_cmd = app.add_subcommand("verify", "Classify a labeled graph");
    verify_cmd->add_option("--graph", o.graph, "Edge-list file")->required();
    verify_cmd->add_option("--labels", o.labels, "Labeling JSON file, or - for stdin")->required();

    auto* construct_cmd = app.add_subcommand("construct", "Build a labeling from a known construction");
    construct_cmd->add_option("--mode", o.mode, "strong | weak | complete")
        ->check(CLI::IsMember({"strong", "weak", "complete"}));
    construct_cmd->add_option("--graph", o.graph, "Edge-list file (strong and weak modes)");
    construct_cmd->add_option("--k", o.k, "Edge set-indexing number")->check(CLI::Range(std::uint64_t{1}, max_cli_k));
    construct_cmd->add_option("--factors", o.factors, "Label sizes m,n for the two sides (strong mode)");
    construct_cmd->add_option("--stride", o.stride, "Start spacing of side-X labels (strong mode)");
    construct_cmd->add_option("--vertices", o.vertices, "Number of vertices of K_n (complete mode)")
        ->check(CLI::PositiveNumber);
    construct_cmd->add_option("--l", o.l, "Vertex label size (complete mode)")->check(CLI::PositiveNumber);
    construct_cmd->add_option("--out", o.out_file, "Write the labeling here instead of stdout");

    auto* search_cmd = app.add_subcommand("search", "Exhaustive search within a bounded universe");
    search_cmd->add_option("--graph", o.graph, "Edge-list file")->required();
    search_cmd->add_option("--target", o.target, "strong | weak | any-strong")
        ->required()
        ->check(CLI::IsMember({"strong", "weak", "any-strong"}));
    search_cmd->add_option("--k", o.k, "Edge set-indexing number")->check(CLI::Range(std::uint64_t{1}, max_cli_k));
    search_cmd->add_option("--universe", o.universe, "Labels are subsets of {0..universe}")->required();
    search_cmd->add_option("--max-size", o.max_size, "Largest label size (default k)")->check(CLI::PositiveNumber);
    search_cmd->add_option("--budget", o.budget, "Search-tree node cap")->check(CLI::PositiveNumber);
    search_cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

    auto* reduce_cmd = app.add_subcommand("reduce", "Elementary topological reduction at a degree-2 vertex");
    reduce_cmd->add_option("--graph", o.graph, "Edge-list file")->required();
    reduce_cmd->add_option("--labels", o.labels, "Labeling JSON file, or - for stdin")->required();
    reduce_cmd->add_option("--vertex", o.vertex, "Vertex to remove")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "Divisor-class analysis of a strongly k-uniform labeling");
    analyze_cmd->add_option("--graph", o.graph, "Edge-list file")->required();
    analyze_cmd->add_option("--labels", o.labels, "Labeling JSON file, or - for stdin")->required();
    analyze_cmd->add_option("--k", o.k, "Edge set-indexing number")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, max_cli_k));

    std::vector<const char*> argv{"iasi"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (construct_cmd->parsed()) {
            if (o.mode == "complete") {
                const std::string why = "with --mode complete";
                forbid_flag(*construct_cmd, "--graph", why);
                forbid_flag(*construct_cmd, "--k", why);
                forbid_flag(*construct_cmd, "--factors", why);
                forbid_flag(*construct_cmd, "--stride", why);
                require_flag(*construct_cmd, "--vertices", why);
                require_flag(*construct_cmd, "--l", why);
            } else {
                const std::string why = "with --mode " + o.mode;
                require_flag(*construct_cmd, "--graph", why);
                require_flag(*construct_cmd, "--k", why);
                forbid_flag(*construct_cmd, "--vertices", why);
                forbid_flag(*construct_cmd, "--l", why);
                if (o.mode == "weak") {
                    forbid_flag(*construct_cmd, "--factors", why);
                    forbid_flag(*construct_cmd, "--stride", why);
                }
                if (construct_cmd->count("--factors") != 0) {
                    parse_factors(o.factors);
                }
            }
        }
        if (search_cmd->parsed()) {
            if (o.target == "any-strong") {
                forbid_flag(*search_cmd, "--k", "with --target any-strong");
                require_flag(*search_cmd, "--max-size", "with --target any-strong");
            } else {
                require_flag(*search_cmd, "--k", "with --target " + o.target);
            }
        }
    } catch (const CLI::ParseError& e) {
        const auto code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n' << "Run with --help for more information.\n";
        return exit_usage;
    }

    try {
        if (verify_cmd->parsed()) {
            return do_verify(o, in, out);
        }
        if (construct_cmd->parsed()) {
            return do_construct(*construct_cmd, o, out, err);
        }
        if (search_cmd->parsed()) {
            return do_search(o, out, err);
        }
        if (reduce_cmd->parsed()) {
            return do_reduce(o, in, out, err);
        }
        return do_analyze(o, in, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
}

} // namespace iasi::cli
