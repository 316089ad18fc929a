#pragma once

#include "ramsey/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace ramsey {

enum class ExMethod { exact_exhaustive, degree_relaxation, kst_formula, external_constant };

std::string to_string(ExMethod m);

// A value of ex(n; C4), the maximum edge count of a C4-free graph on n
// vertices. Only exact_exhaustive values are exact; the others are upper
// bounds (external constants are as good as their citation).
struct ExBound {
    int n = 0;
    std::int64_t value = 0;
    ExMethod method = ExMethod::external_constant;
    std::string note;
    // Set for exact_exhaustive: a C4-free graph attaining value.
    std::optional<SimpleGraph> extremal_graph;
};

inline constexpr int kExhaustiveLimit = 8;
inline constexpr int kMaxBoundVertices = 1'000'000;

// Branch and bound over all graphs on n <= kExhaustiveLimit vertices.
ExBound ex_c4_exact(int n);

// Any two vertices of a C4-free graph share at most one neighbour, so
// sum_v C(d_v, 2) <= C(n, 2). Returns the largest edge count of an integer
// degree sequence (even sum, 0 <= d_v <= n-1) meeting that inequality.
ExBound ex_c4_degree_relaxation(int n);

// floor(n (1 + sqrt(4n - 3)) / 4) in exact integer arithmetic.
ExBound ex_kst_formula(int n);

// A constant taken from the literature. The note must say where it comes from.
ExBound external_bound(int n, std::int64_t value, std::string note);

// The cited constants this library knows about: ex(19; C4) = 42.
std::optional<ExBound> known_external_bound(int n);

struct BoundConclusion {
    int n = 0;
    int colors = 0;
    std::int64_t ex_value = 0;
    std::int64_t lhs = 0; // colors * ex_value
    std::int64_t rhs = 0; // n(n-1)/2
    bool holds = false;
    std::string statement;
};

// Pigeonhole: if colors * ex < C(n, 2), some colour class of any colouring of
// K_n has more than ex edges and so contains a C4, giving R_colors(C4) <= n.
BoundConclusion density_upper_bound(int n, int colors, const ExBound& ex);

// Floor of the square root, exact for all 64-bit inputs.
std::uint64_t isqrt(std::uint64_t x);

} // namespace ramsey
