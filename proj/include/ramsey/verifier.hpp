#pragma once

#include "ramsey/color_matrix.hpp"
#include "ramsey/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

// Entry i is the subgraph colour i must avoid.
using AvoidSpec = std::vector<Pattern>;

// Comma-separated K<k> / C<l> tokens, e.g. "K3,K3,C4,C4".
AvoidSpec parse_avoid_spec(const std::string& text);
std::string to_string(const AvoidSpec& spec);

struct PartitionCheck {
    std::vector<std::pair<int, int>> missing;
    std::vector<std::pair<int, int>> doubly_covered;

    bool ok() const { return missing.empty() && doubly_covered.empty(); }
    std::string describe() const;
};

// Checks that every unordered pair of the common vertex set is an edge of
// exactly one graph in the list.
PartitionCheck check_edge_partition(const std::vector<SimpleGraph>& graphs);

struct ColorStatus {
    int color = 0;
    Pattern target;
    int edges = 0;
    std::optional<SubgraphWitness> witness;

    bool clean() const { return !witness.has_value(); }
};

struct VerificationReport {
    PartitionCheck partition;
    std::vector<ColorStatus> colors;

    bool passed() const;
    // First colour carrying a witness, or 0.
    int first_failing_color() const;
    std::vector<int> class_sizes() const;
    std::string summary() const;
};

// Checks every colour class of cm against its target. The report covers all
// colours, in colour order, whatever order the checks ran in.
VerificationReport verify(const ColorMatrix& cm, const AvoidSpec& spec);

} // namespace ramsey
