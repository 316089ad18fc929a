#pragma once

#include "ramsey/color_matrix.hpp"
#include "ramsey/graph.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace ramsey {

// Alphabet for the 26x26 block matrices. X, Y, I and Z are 5x5 blocks,
// Ones and Zeros are the 5x1 border columns, S0 and S1 the corner scalar.
enum class BlockSymbol { X, Y, I, Z, Ones, Zeros, S0, S1 };

std::string to_string(BlockSymbol s);

using Block = std::array<std::array<std::uint8_t, 5>, 5>;

// X is the pentagon i ~ i±1, Y the pentagram i ~ i±2, I the identity and
// Z all zero. Border and corner symbols are not blocks.
Block base_block(BlockSymbol s);

// The 5-vertex graph whose adjacency matrix is base_block(s); s must not be I.
SimpleGraph block_graph(BlockSymbol s);

// Five groups of five vertices (group g holds vertices 5(g-1)+1 .. 5g)
// followed by vertex 26. border[g] connects vertex 26 to group g.
struct BlockLayout {
    std::array<std::array<BlockSymbol, 5>, 5> grid{};
    std::array<BlockSymbol, 5> border{};
    BlockSymbol corner = BlockSymbol::S0;
};

inline constexpr int kLayoutVertices = 26;

// Throws InputError naming the offending block or block pair when the
// expansion would not be a symmetric 0/1 matrix with zero diagonal.
void validate_layout(const BlockLayout& layout);

SimpleGraph assemble_layout(const BlockLayout& layout);

// The layouts of the four colour classes of the K_26 certificate, i in 1..4.
BlockLayout paper_layout(int i);

// The 4-colouring of K_26 whose colour-i class is assemble_layout(paper_layout(i)).
ColorMatrix paper_four_coloring();

// Replaces each vertex by m independent copies and each edge by K_{m,m}.
// Copy j of vertex u becomes vertex (u-1)*m + j.
SimpleGraph blow_up(const SimpleGraph& g, int m);

} // namespace ramsey
