#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

// Every graph in the library fits in one 64-bit adjacency word per vertex.
inline constexpr int kMaxVertices = 64;

// Raised when an argument violates an operation's precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Undirected simple graph on vertices 1..n. Row v holds the neighbours of v
// with vertex u stored in bit u-1.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static SimpleGraph complete(int n);
    static SimpleGraph cycle(int n);

    int n() const { return n_; }

    bool adjacent(int u, int v) const
    {
        return (rows_[u - 1] >> (v - 1)) & 1u;
    }
    std::uint64_t row(int v) const { return rows_[v - 1]; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    int edge_count() const;
    std::vector<int> degrees() const;
    std::vector<int> neighbours(int v) const;

    // Edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    // Graph on the listed vertices, relabelled 1..k in list order.
    SimpleGraph induced(const std::vector<int>& vertices) const;

    // Mask with bits for vertices 1..n set.
    std::uint64_t vertex_mask() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    void check_pair(int u, int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

enum class PatternKind { clique, cycle };

// A forbidden subgraph: the complete graph K_k or the cycle C_l.
struct Pattern {
    PatternKind kind = PatternKind::clique;
    int size = 3;

    static Pattern clique(int k) { return {PatternKind::clique, k}; }
    static Pattern cycle(int l) { return {PatternKind::cycle, l}; }

    // Number of edges in one copy of the pattern.
    int edge_count() const;
    // "K3", "C4", ...
    std::string to_string() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;
};

// Parses "K<k>" or "C<l>"; throws InputError on anything else.
Pattern parse_pattern(const std::string& token);

struct SubgraphWitness {
    Pattern pattern;
    std::vector<int> vertices;

    friend bool operator==(const SubgraphWitness&, const SubgraphWitness&) = default;
};

// Checks the witness invariants against the host graph: clique vertices are
// distinct and pairwise adjacent, cycle vertices are distinct and cyclically
// consecutive ones are adjacent.
bool is_valid_witness(const SimpleGraph& g, const SubgraphWitness& w);

std::string to_string(const SubgraphWitness& w);

} // namespace ramsey
