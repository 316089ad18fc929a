// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: acceptance <path-to-ramsey-cli>

#include "oracles.hpp"

#include "ramsey/blocks.hpp"
#include "ramsey/coloring_io.hpp"
#include "ramsey/detect.hpp"
#include "ramsey/extremal.hpp"
#include "ramsey/isomorphism.hpp"
#include "ramsey/search.hpp"
#include "ramsey/verifier.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace ramsey;

namespace {

std::string g_cli;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Shell {
    int status = -1;
    std::string out;
};

Shell sh(const std::string& command)
{
    Shell r;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& haystack, const std::string& needle)
{
    return haystack.find(needle) != std::string::npos;
}

int g_failures = 0;

// Runs a criterion, checks its wall-clock limit (seconds, 0 = none) and
// prints a single result line.
void criterion(int id, const std::string& title, double limit, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && elapsed >= limit) {
        o.pass = false;
        o.detail += "; exceeded " + std::to_string(limit) + " s";
    }
    g_failures += !o.pass;
    std::printf("[%s] AC%-2d %s: %s (%.3f s)\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(),
                elapsed);
    std::fflush(stdout);
}

} // namespace

int main(int argc, char** argv)
{
    if (argc < 2) {
        std::cerr << "usage: acceptance <ramsey-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    criterion(1, "K_26 certificate avoids K3,K3,C4,C4", 1.0, [] {
        const Shell r = sh(g_cli + " construct --paper-26 | " + g_cli + " verify --avoid K3,K3,C4,C4");
        const bool sizes = contains(r.out, "class sizes: 125 125 40 35 (total 325)");
        const bool ok = r.status == 0 && contains(r.out, "result: PASS") && sizes && 125 + 125 + 40 + 35 == 26 * 25 / 2;
        return Outcome{ok, "exit " + std::to_string(r.status) + (sizes ? ", sizes 125+125+40+35=325" : ", sizes wrong")};
    });

    criterion(2, "density bound R_4(C4) <= 19", 0.1, [] {
        const Shell r = sh(g_cli + " bound --n 19 --colors 4 --target C4 --method external --ex-value 42");
        const bool ok = r.status == 0 && contains(r.out, "4*42 = 168 < 171 = C(19,2)") &&
                        contains(r.out, "hence R_4(C4) <= 19");
        const auto lib = density_upper_bound(19, 4, external_bound(19, 42, "cited"));
        return Outcome{ok && lib.lhs == 168 && lib.rhs == 171 && lib.holds,
                       "exit " + std::to_string(r.status) + ", 168 < 171"};
    });

    criterion(3, "neighbours of vertex 26 independent in colour 1", 0, [] {
        const SimpleGraph m1 = assemble_layout(paper_layout(1));
        const auto around = m1.neighbours(26);
        const int spanned = m1.induced(around).edge_count();
        return Outcome{around.size() == 5 && spanned == 0,
                       std::to_string(around.size()) + " neighbours spanning " + std::to_string(spanned) + " edges"};
    });

    criterion(4, "X + Y + I is the all-ones block", 0, [] {
        const Block x = base_block(BlockSymbol::X);
        const Block y = base_block(BlockSymbol::Y);
        const Block id = base_block(BlockSymbol::I);
        int wrong = 0;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                wrong += x[i][j] + y[i][j] + id[i][j] != 1;
        return Outcome{wrong == 0, std::to_string(wrong) + " entries differ from 1"};
    });

    criterion(5, "colour classes 1 and 2 are isomorphic", 10.0, [] {
        const SimpleGraph m1 = assemble_layout(paper_layout(1));
        const SimpleGraph m2 = assemble_layout(paper_layout(2));
        const auto mapping = is_isomorphic(m1, m2);
        if (!mapping)
            return Outcome{false, "no mapping found"};
        int preserved = 0;
        for (int u = 1; u <= 26; ++u)
            for (int v = u + 1; v <= 26; ++v)
                preserved += m1.adjacent(u, v) == m2.adjacent((*mapping)[u - 1], (*mapping)[v - 1]);
        return Outcome{preserved == 325 && is_isomorphism(m1, m2, *mapping),
                       "mapping preserves " + std::to_string(preserved) + "/325 pairs"};
    });

    criterion(6, "exact ex(n;C4) matches unpruned enumeration, n=3..6", 60.0, [] {
        const std::array<int, 4> expected{3, 4, 6, 7};
        bool ok = true;
        std::string values;
        for (int n = 3; n <= 6; ++n) {
            const auto exact = ex_c4_exact(n).value;
            const int naive = oracle::ex_c4(n);
            ok = ok && exact == naive && exact == expected[n - 3];
            values += (n > 3 ? "," : "") + std::to_string(exact);
        }
        return Outcome{ok, "values (" + values + ")"};
    });

    criterion(7, "exact <= degree relaxation <= KST", 0, [] {
        bool ok = true;
        for (int n = 2; n <= 8; ++n) {
            const auto e = ex_c4_exact(n).value;
            const auto d = ex_c4_degree_relaxation(n).value;
            const auto k = ex_kst_formula(n).value;
            ok = ok && e <= d && d <= k;
        }
        const auto d19 = ex_c4_degree_relaxation(19).value;
        const auto k19 = ex_kst_formula(19).value;
        ok = ok && d19 == 45 && k19 == 45 && d19 >= 42;
        return Outcome{ok, "n=2..8 nested; n=19: degree " + std::to_string(d19) + ", kst " + std::to_string(k19)};
    });

    criterion(8, "R(3,3) = 6 by exhaustive enumeration", 60.0, [] {
        const auto spec = parse_avoid_spec("K3,K3");
        const bool five = exhaustive_coloring_exists(5, 2, spec);
        const bool six = exhaustive_coloring_exists(6, 2, spec);
        return Outcome{five && !six, std::string("K_5 ") + (five ? "colourable" : "not colourable") + ", K_6 " +
                                         (six ? "colourable" : "not colourable")};
    });

    criterion(9, "fast detectors agree with subset enumeration", 0, [] {
        int disagreements = 0;
        int graphs = 0;
        auto check = [&](const SimpleGraph& g) {
            ++graphs;
            disagreements += has_four_cycle(g).has_value() != oracle::has_c4(g);
            disagreements += has_clique(g, 3).has_value() != oracle::has_clique(g, 3);
            if (g.n() >= 4)
                disagreements += has_clique(g, 4).has_value() != oracle::has_clique(g, 4);
        };
        for (std::uint64_t mask = 0; mask < 1024; ++mask)
            check(oracle::graph_from_mask(5, mask));
        std::mt19937_64 rng(20240601);
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 4 + static_cast<int>(rng() % 13);
            const double p = 0.05 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0;
            check(oracle::random_graph(rng, n, p));
        }
        return Outcome{disagreements == 0,
                       std::to_string(graphs) + " graphs, " + std::to_string(disagreements) + " disagreements"};
    });

    criterion(10, "recoloured edge (1,26) is caught", 0, [] {
        ColorMatrix cm = paper_four_coloring();
        cm.set_color(1, 26, 3);
        const auto report = verify(cm, parse_avoid_spec("K3,K3,C4,C4"));
        if (report.passed() || report.first_failing_color() != 3)
            return Outcome{false, "tampered certificate not rejected in colour 3"};
        const auto& w = *report.colors[2].witness;
        const bool valid = w.pattern == Pattern::cycle(4) && is_valid_witness(color_class(cm, 3), w);
        return Outcome{valid, "colour 3 witness " + to_string(w) + (valid ? " re-validates" : " is invalid")};
    });

    criterion(11, "search finds a C4,C4,C4 colouring of K_10", 0, [] {
        int successes = 0;
        std::string found;
        for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
            SearchConfig cfg;
            cfg.n = 10;
            cfg.colors = 3;
            cfg.spec = parse_avoid_spec("C4,C4,C4");
            cfg.seed = seed;
            cfg.budget = 1'000'000;
            cfg.restarts = 10;
            const auto outcome = run_search(cfg);
            if (outcome.coloring && verify(*outcome.coloring, cfg.spec).passed()) {
                ++successes;
                found += " " + std::to_string(seed);
            }
        }
        return Outcome{successes >= 1, std::to_string(successes) + "/5 seeds succeeded:" + found};
    });

    criterion(12, "certificate text round-trips byte for byte", 0, [] {
        const std::string text = serialize_coloring(paper_four_coloring());
        const std::string again = serialize_coloring(parse_coloring(text));
        return Outcome{text == again, std::to_string(text.size()) + " bytes"};
    });

    std::printf("%d of 12 criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
