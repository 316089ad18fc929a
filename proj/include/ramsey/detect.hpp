#pragma once

#include "ramsey/graph.hpp"

#include <cstdint>
#include <optional>

namespace ramsey {

// Forbidden-subgraph detectors. Every detector returns the lexicographically
// first witness in vertex order: cliques as an increasing vertex list, cycles
// as the traversal starting at the cycle's smallest vertex whose second
// vertex is smaller than its last.

// Requires 2 <= k <= g.n().
std::optional<SubgraphWitness> has_clique(const SimpleGraph& g, int k);

// A 4-cycle exists iff some pair of vertices has two common neighbours.
std::optional<SubgraphWitness> has_four_cycle(const SimpleGraph& g);

// Requires 3 <= l <= min(8, g.n()).
std::optional<SubgraphWitness> has_cycle(const SimpleGraph& g, int l);

// Range-tolerant dispatch used by the verifier and search: a pattern larger
// than the graph is simply absent.
std::optional<SubgraphWitness> find_pattern(const SimpleGraph& g, const Pattern& p);

// Copies of p in g + {u,v} that use the edge {u,v}. Whether {u,v} is
// currently an edge of g does not matter.
std::int64_t count_through_edge(const SimpleGraph& g, int u, int v, const Pattern& p);
bool any_through_edge(const SimpleGraph& g, int u, int v, const Pattern& p);

// Total number of (unlabelled) copies of p in g.
std::int64_t count_copies(const SimpleGraph& g, const Pattern& p);

} // namespace ramsey
