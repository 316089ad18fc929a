#pragma once

#include "ramsey/graph.hpp"

#include <optional>
#include <vector>

namespace ramsey {

// mapping[v - 1] is the image of vertex v.
using VertexMap = std::vector<int>;

// Finds an adjacency-preserving bijection from g1 onto g2 using colour
// refinement followed by backtracking. Intended for graphs of a few dozen
// vertices; there is no canonical labelling.
std::optional<VertexMap> is_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2);

// True iff mapping is a bijection that preserves both adjacency and
// non-adjacency.
bool is_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2, const VertexMap& mapping);

} // namespace ramsey
