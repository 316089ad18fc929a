#pragma once

#include "ramsey/color_matrix.hpp"
#include "ramsey/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

// Text certificate format, version 1:
//
//   ramsey-coloring v1
//   n=<n> c=<c>
//   <n rows of n integers separated by single spaces>
//
// Diagonal entries are 0, off-diagonal entries lie in 1..c, the matrix is
// symmetric and every line ends in '\n' with no trailing whitespace.

inline constexpr std::string_view kColoringHeader = "ramsey-coloring v1";

class ParseError : public InputError {
public:
    ParseError(int line, int column, const std::string& message);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

ColorMatrix parse_coloring(std::string_view text);
std::string serialize_coloring(const ColorMatrix& cm);

// Undirected DOT graph with vertices 1..n and one "u -- v" line per edge, u < v.
std::string export_dot(const SimpleGraph& g, const std::string& name = "G");

// One DOT graph per colour class, named color1, color2, ...
std::vector<std::string> export_dot(const ColorMatrix& cm);

} // namespace ramsey
