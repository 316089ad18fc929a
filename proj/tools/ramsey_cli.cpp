// Command-line driver. Exit codes: 0 success or verification pass,
// 1 verification (or bound, or search) failure, 2 input or parse error.

#include "ramsey/blocks.hpp"
#include "ramsey/coloring_io.hpp"
#include "ramsey/extremal.hpp"
#include "ramsey/search.hpp"
#include "ramsey/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ramsey::InputError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ramsey::ColorMatrix load_coloring(const std::string& path)
{
    try {
        return ramsey::parse_coloring(read_input(path));
    } catch (const ramsey::ParseError& e) {
        throw ramsey::InputError((path.empty() || path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
    }
}

int cmd_construct(bool paper26)
{
    if (!paper26)
        throw ramsey::InputError("construct: only --paper-26 is available");
    std::cout << ramsey::serialize_coloring(ramsey::paper_four_coloring());
    return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& avoid)
{
    const auto spec = ramsey::parse_avoid_spec(avoid);
    const auto cm = load_coloring(path);
    const auto report = ramsey::verify(cm, spec);
    std::cout << "coloring of K_" << cm.n() << " with " << cm.colors() << " colors, avoiding "
              << ramsey::to_string(spec) << "\n"
              << report.summary();
    return report.passed() ? kExitOk : kExitFail;
}

struct BoundArgs {
    int n = 0;
    int colors = 0;
    std::string target = "C4";
    std::string method;
    std::optional<std::int64_t> ex_value;
    std::string ex_note;
};

int cmd_bound(const BoundArgs& args)
{
    if (args.target != "C4")
        throw ramsey::InputError("bound: only --target C4 is supported");
    ramsey::ExBound ex;
    if (args.method == "exact") {
        ex = ramsey::ex_c4_exact(args.n);
    } else if (args.method == "degree") {
        ex = ramsey::ex_c4_degree_relaxation(args.n);
    } else if (args.method == "kst") {
        ex = ramsey::ex_kst_formula(args.n);
    } else if (args.method == "external") {
        if (args.ex_value) {
            std::string note = args.ex_note;
            if (note.empty()) {
                auto known = ramsey::known_external_bound(args.n);
                note = known && known->value == *args.ex_value ? known->note : "user-supplied constant";
            }
            ex = ramsey::external_bound(args.n, *args.ex_value, note);
        } else if (auto known = ramsey::known_external_bound(args.n)) {
            ex = *known;
        } else {
            throw ramsey::InputError("bound: --method external needs --ex-value for n = " + std::to_string(args.n));
        }
    } else {
        throw ramsey::InputError("bound: unknown method '" + args.method + "'");
    }
    const auto result = ramsey::density_upper_bound(args.n, args.colors, ex);
    const char* relation = ex.method == ramsey::ExMethod::exact_exhaustive ? " = " : " <= ";
    std::cout << "ex(" << ex.n << ";C4)" << relation << ex.value << " [" << ramsey::to_string(ex.method) << ": " << ex.note
              << "]\n"
              << result.colors << "*" << result.ex_value << " = " << result.lhs << (result.holds ? " < " : " >= ")
              << result.rhs << " = C(" << result.n << ",2)\n"
              << result.statement << "\n";
    return result.holds ? kExitOk : kExitFail;
}

int cmd_search(ramsey::SearchConfig cfg, const std::string& avoid)
{
    cfg.spec = ramsey::parse_avoid_spec(avoid);
    const auto outcome = ramsey::run_search(cfg);
    if (!outcome.coloring) {
        std::cerr << "search: no coloring found within " << outcome.iterations
                  << " iterations (budget exhausted; this does not prove nonexistence)\n";
        return kExitFail;
    }
    std::cerr << "search: found on restart " << outcome.restart << " after " << outcome.iterations
              << " iterations\n";
    std::cout << ramsey::serialize_coloring(*outcome.coloring);
    return kExitOk;
}

int cmd_export(const std::string& path, const std::string& prefix)
{
    const auto cm = load_coloring(path);
    const auto graphs = ramsey::export_dot(cm);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (prefix.empty()) {
            std::cout << graphs[i];
            continue;
        }
        const std::string file = prefix + "-color" + std::to_string(i + 1) + ".dot";
        std::ofstream out(file, std::ios::binary);
        if (!(out << graphs[i]))
            throw ramsey::InputError("cannot write '" + file + "'");
        std::cerr << "wrote " << file << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Multicolor Ramsey certificates: construct, verify, bound, search, export"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "Emit a coloring certificate");
    bool paper26 = false;
    construct->add_flag("--paper-26", paper26, "The 4-coloring of K_26 avoiding K3,K3,C4,C4");

    auto* verify = app.add_subcommand("verify", "Verify a coloring certificate");
    std::string verify_path = "-";
    std::string verify_avoid;
    verify->add_option("file", verify_path, "Certificate file ('-' or omitted for stdin)");
    verify->add_option("--avoid", verify_avoid, "Per-color targets, e.g. K3,K3,C4,C4")->required();

    auto* bound = app.add_subcommand("bound", "Density upper bound for R_c(C4)");
    BoundArgs bound_args;
    bound->add_option("--n", bound_args.n, "Vertex count")->required();
    bound->add_option("--colors", bound_args.colors, "Color count")->required();
    bound->add_option("--target", bound_args.target, "Target subgraph (C4)");
    bound->add_option("--method", bound_args.method, "exact|degree|kst|external")
        ->required()
        ->check(CLI::IsMember({"exact", "degree", "kst", "external"}));
    bound->add_option("--ex-value", bound_args.ex_value, "External value of ex(n;C4)");
    bound->add_option("--ex-note", bound_args.ex_note, "Citation for the external value");

    auto* search = app.add_subcommand("search", "Heuristic search for an avoiding coloring");
    ramsey::SearchConfig cfg;
    std::string search_avoid;
    search->add_option("--n", cfg.n, "Vertex count")->required();
    search->add_option("--colors", cfg.colors, "Color count")->required();
    search->add_option("--avoid", search_avoid, "Per-color targets")->required();
    search->add_option("--seed", cfg.seed, "Base seed");
    search->add_option("--budget", cfg.budget, "Iterations per restart");
    search->add_option("--restarts", cfg.restarts, "Number of restarts");
    search->add_option("--tenure", cfg.tabu_tenure, "Tabu tenure in iterations");
    search->add_option("--window", cfg.stagnation_window, "Stagnation window before redrawing");
    search->add_option("--workers", cfg.workers, "Worker threads for restarts");

    auto* exporter = app.add_subcommand("export", "Export each color class as a DOT graph");
    std::string dot_path;
    std::string dot_prefix;
    exporter->add_option("--dot", dot_path, "Certificate file ('-' for stdin)")->required();
    exporter->add_option("--prefix", dot_prefix, "Write <prefix>-color<i>.dot instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*construct)
            return cmd_construct(paper26);
        if (*verify)
            return cmd_verify(verify_path, verify_avoid);
        if (*bound)
            return cmd_bound(bound_args);
        if (*search)
            return cmd_search(cfg, search_avoid);
        if (*exporter)
            return cmd_export(dot_path, dot_prefix);
    } catch (const ramsey::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
