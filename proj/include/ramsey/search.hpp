#pragma once

#include "ramsey/color_matrix.hpp"
#include "ramsey/verifier.hpp"

#include <cstdint>
#include <optional>

namespace ramsey {

struct SearchConfig {
    int n = 0;
    int colors = 0;
    AvoidSpec spec;
    std::uint64_t seed = 1;
    // Iterations per restart.
    std::int64_t budget = 1'000'000;
    int restarts = 1;
    int tabu_tenure = 10;
    // Iterations without a new best objective before the colouring is redrawn.
    std::int64_t stagnation_window = 20'000;
    int workers = 1;
};

void validate(const SearchConfig& cfg);

// Seed used by restart r (0-based): a SplitMix64 finaliser applied to
// seed + (r + 1) * 0x9E3779B97F4A7C15.
std::uint64_t restart_seed(std::uint64_t seed, int restart);

struct SearchOutcome {
    std::optional<ColorMatrix> coloring;
    // Restart index that produced the colouring, -1 if none.
    int restart = -1;
    // Iterations spent by that restart, or by all restarts when none succeeded.
    std::int64_t iterations = 0;
};

// Tabu min-conflicts over single-edge recolourings. The objective is the
// total number of monochromatic target copies; a returned colouring has been
// re-verified. No result means the budget ran out, not that none exists.
// With several workers the result is still the one from the lowest
// successful restart index.
SearchOutcome run_search(const SearchConfig& cfg);
std::optional<ColorMatrix> search_coloring(const SearchConfig& cfg);

// colors^(n(n-1)/2) must not exceed this before pruning.
inline constexpr std::uint64_t kExhaustiveColoringBudget = std::uint64_t{1} << 24;

// Complete backtracking decision: does some colouring of K_n avoid every
// target? Colours with identical targets are interchangeable, so edge (1,2)
// only tries the first colour of each such group.
bool exhaustive_coloring_exists(int n, int colors, const AvoidSpec& spec);

} // namespace ramsey
