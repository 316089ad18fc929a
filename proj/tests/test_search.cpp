#include "oracles.hpp"

#include "ramsey/isomorphism.hpp"
#include "ramsey/search.hpp"

#include <doctest.h>

#include <set>

using namespace ramsey;

namespace {

SearchConfig config(int n, int colors, const std::string& avoid, std::uint64_t seed)
{
    SearchConfig cfg;
    cfg.n = n;
    cfg.colors = colors;
    cfg.spec = parse_avoid_spec(avoid);
    cfg.seed = seed;
    cfg.budget = 20'000;
    cfg.restarts = 1;
    return cfg;
}

} // namespace

TEST_CASE("exhaustive decisions for R(3,3)")
{
    CHECK(exhaustive_coloring_exists(5, 2, parse_avoid_spec("K3,K3")));
    CHECK_FALSE(exhaustive_coloring_exists(6, 2, parse_avoid_spec("K3,K3")));
    CHECK_FALSE(exhaustive_coloring_exists(3, 1, parse_avoid_spec("K3")));
    CHECK(exhaustive_coloring_exists(2, 1, parse_avoid_spec("K3")));
    CHECK(exhaustive_coloring_exists(1, 1, parse_avoid_spec("C4")));
}

TEST_CASE("exhaustive decisions match full enumeration")
{
    const std::vector<std::pair<int, std::string>> cases = {
        {2, "K3,K3"}, {2, "C4,C4"}, {2, "K3,C4"}, {2, "C4,K3"}, {2, "C5,C5"}, {2, "K4,C3"},
        {2, "C3,K4"}, {2, "C6,C4"}, {3, "K3,K3,K3"}, {3, "C4,C4,C4"}, {3, "K3,C4,C4"}, {3, "C3,C3,C4"}};
    for (const auto& [colors, avoid] : cases) {
        const auto spec = parse_avoid_spec(avoid);
        for (int n = 2; n <= (colors == 2 ? 6 : 5); ++n) {
            CAPTURE(avoid);
            CAPTURE(n);
            CHECK(exhaustive_coloring_exists(n, colors, spec) == oracle::coloring_exists(n, colors, spec));
        }
    }
}

TEST_CASE("exhaustive search refuses oversized instances")
{
    CHECK_THROWS_AS(exhaustive_coloring_exists(8, 2, parse_avoid_spec("K3,K3")), InputError);
    CHECK_THROWS_AS(exhaustive_coloring_exists(7, 3, parse_avoid_spec("K3,K3,K3")), InputError);
    CHECK_THROWS_AS(exhaustive_coloring_exists(5, 2, parse_avoid_spec("K3")), InputError);
}

TEST_CASE("search finds the pentagon/pentagram colouring of K_5")
{
    const SimpleGraph c5 = SimpleGraph::cycle(5);
    for (std::uint64_t seed : {1u, 2u, 3u, 42u, 1234567u}) {
        const auto cm = search_coloring(config(5, 2, "K3,K3", seed));
        REQUIRE(cm);
        CHECK(verify(*cm, parse_avoid_spec("K3,K3")).passed());
        CHECK(is_isomorphic(color_class(*cm, 1), c5));
        CHECK(is_isomorphic(color_class(*cm, 2), c5));
    }
}

TEST_CASE("search never reports a colouring the exhaustive decision rules out")
{
    REQUIRE_FALSE(exhaustive_coloring_exists(6, 2, parse_avoid_spec("K3,K3")));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto cfg = config(6, 2, "K3,K3", seed);
        cfg.budget = 5'000;
        cfg.restarts = 2;
        CHECK_FALSE(search_coloring(cfg));
    }
}

TEST_CASE("returned colourings verify")
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto cfg = config(5, 2, "C4,C4", seed);
        cfg.restarts = 3;
        const auto cm = search_coloring(cfg);
        REQUIRE(cm);
        CHECK(verify(*cm, cfg.spec).passed());
        CHECK(oracle::coloring_avoids(*cm, cfg.spec));
    }
    // R(K3, C4) = 7, so K_6 is the largest clique with such a colouring.
    REQUIRE(exhaustive_coloring_exists(6, 2, parse_avoid_spec("K3,C4")));
    auto mixed = config(6, 2, "K3,C4", 9);
    mixed.restarts = 5;
    const auto cm = search_coloring(mixed);
    REQUIRE(cm);
    CHECK(oracle::coloring_avoids(*cm, mixed.spec));
}

TEST_CASE("search reaches a K3,K3,C4,C4 colouring of K_26")
{
    auto cfg = config(26, 4, "K3,K3,C4,C4", 1);
    cfg.budget = 300'000;
    cfg.restarts = 4;
    const auto cm = search_coloring(cfg);
    REQUIRE(cm);
    CHECK(verify(*cm, cfg.spec).passed());
}

TEST_CASE("search is deterministic")
{
    auto cfg = config(9, 3, "C4,C4,C4", 77);
    cfg.budget = 3'000;
    cfg.restarts = 3;
    const auto a = run_search(cfg);
    const auto b = run_search(cfg);
    CHECK(a.coloring == b.coloring);
    CHECK(a.restart == b.restart);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("worker count does not change the result")
{
    auto cfg = config(8, 3, "C4,C4,C4", 5);
    cfg.budget = 2'000;
    cfg.restarts = 8;
    const auto serial = run_search(cfg);
    for (int workers : {2, 4, 8}) {
        cfg.workers = workers;
        const auto parallel = run_search(cfg);
        CHECK(parallel.coloring == serial.coloring);
        CHECK(parallel.restart == serial.restart);
    }
}

TEST_CASE("restart seeds")
{
    CHECK(restart_seed(1, 0) == restart_seed(1, 0));
    std::set<std::uint64_t> seen;
    for (int r = 0; r < 100; ++r)
        seen.insert(restart_seed(12345, r));
    CHECK(seen.size() == 100);
    CHECK(restart_seed(1, 0) != restart_seed(2, 0));
}

TEST_CASE("search configuration is validated")
{
    auto cfg = config(5, 2, "K3,K3", 1);
    cfg.budget = 0;
    CHECK_THROWS_AS(run_search(cfg), InputError);
    cfg = config(5, 2, "K3,K3", 1);
    cfg.restarts = 0;
    CHECK_THROWS_AS(run_search(cfg), InputError);
    cfg = config(5, 2, "K3", 1);
    CHECK_THROWS_AS(run_search(cfg), InputError);
    cfg = config(65, 2, "K3,K3", 1);
    CHECK_THROWS_AS(run_search(cfg), InputError);
}
