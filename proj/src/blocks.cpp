#include "ramsey/blocks.hpp"

#include <stdexcept>

namespace ramsey {

namespace {

bool is_square_block(BlockSymbol s)
{
    return s == BlockSymbol::X || s == BlockSymbol::Y || s == BlockSymbol::I || s == BlockSymbol::Z;
}

std::string block_name(int g, int h)
{
    return "(" + std::to_string(g + 1) + "," + std::to_string(h + 1) + ")";
}

} // namespace

std::string to_string(BlockSymbol s)
{
    switch (s) {
    case BlockSymbol::X: return "X";
    case BlockSymbol::Y: return "Y";
    case BlockSymbol::I: return "I";
    case BlockSymbol::Z: return "0";
    case BlockSymbol::Ones: return "1bar";
    case BlockSymbol::Zeros: return "0bar";
    case BlockSymbol::S0: return "s0";
    case BlockSymbol::S1: return "s1";
    }
    return "?";
}

Block base_block(BlockSymbol s)
{
    if (!is_square_block(s))
        throw InputError("symbol " + to_string(s) + " is not a 5x5 block");
    Block b{};
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const int d = (j - i + 5) % 5;
            switch (s) {
            case BlockSymbol::X: b[i][j] = (d == 1 || d == 4); break;
            case BlockSymbol::Y: b[i][j] = (d == 2 || d == 3); break;
            case BlockSymbol::I: b[i][j] = (d == 0); break;
            default: break;
            }
        }
    }
    return b;
}

SimpleGraph block_graph(BlockSymbol s)
{
    if (s == BlockSymbol::I)
        throw InputError("block I has a nonzero diagonal and is not an adjacency matrix");
    const Block b = base_block(s);
    SimpleGraph g(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (b[i][j])
                g.add_edge(i + 1, j + 1);
    return g;
}

void validate_layout(const BlockLayout& layout)
{
    for (int g = 0; g < 5; ++g) {
        for (int h = 0; h < 5; ++h) {
            const BlockSymbol s = layout.grid[g][h];
            if (!is_square_block(s))
                throw InputError("block " + block_name(g, h) + " holds non-block symbol " + to_string(s));
            if (g == h && s == BlockSymbol::I)
                throw InputError("diagonal block " + block_name(g, h) + " is I, which puts loops on the diagonal");
            if (g < h && layout.grid[h][g] != s)
                throw InputError("blocks " + block_name(g, h) + " and " + block_name(h, g) +
                                 " are not transposes: " + to_string(s) + " vs " +
                                 to_string(layout.grid[h][g]));
        }
        const BlockSymbol b = layout.border[g];
        if (b != BlockSymbol::Ones && b != BlockSymbol::Zeros)
            throw InputError("border entry " + std::to_string(g + 1) + " holds non-column symbol " + to_string(b));
    }
    if (layout.corner != BlockSymbol::S0)
        throw InputError("corner must be 0: vertex 26 cannot be adjacent to itself");
}

SimpleGraph assemble_layout(const BlockLayout& layout)
{
    validate_layout(layout);
    SimpleGraph g(kLayoutVertices);
    for (int bg = 0; bg < 5; ++bg) {
        for (int bh = bg; bh < 5; ++bh) {
            const Block block = base_block(layout.grid[bg][bh]);
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) {
                    const int u = 5 * bg + i + 1;
                    const int v = 5 * bh + j + 1;
                    if (block[i][j] && u < v)
                        g.add_edge(u, v);
                }
        }
        if (layout.border[bg] == BlockSymbol::Ones)
            for (int i = 0; i < 5; ++i)
                g.add_edge(5 * bg + i + 1, kLayoutVertices);
    }
    return g;
}

BlockLayout paper_layout(int i)
{
    using enum BlockSymbol;
    BlockLayout l;
    switch (i) {
    case 1:
        l.grid = {{{Z, X, X, X, X},
                   {X, X, X, X, X},
                   {X, X, X, X, X},
                   {X, X, X, X, X},
                   {X, X, X, X, X}}};
        l.border = {Ones, Zeros, Zeros, Zeros, Zeros};
        break;
    case 2:
        l.grid = {{{Y, Y, Y, Y, Y},
                   {Y, Y, Y, Y, Y},
                   {Y, Y, Y, Y, Y},
                   {Y, Y, Y, Y, Y},
                   {Y, Y, Y, Y, Z}}};
        l.border = {Zeros, Zeros, Zeros, Zeros, Ones};
        break;
    case 3:
        l.grid = {{{X, I, Z, Z, I},
                   {I, Z, I, Z, Z},
                   {Z, I, Z, I, Z},
                   {Z, Z, I, Z, I},
                   {I, Z, Z, I, Z}}};
        l.border = {Zeros, Zeros, Ones, Ones, Zeros};
        break;
    case 4:
        l.grid = {{{Z, Z, I, I, Z},
                   {Z, Z, Z, I, I},
                   {I, Z, Z, Z, I},
                   {I, I, Z, Z, Z},
                   {Z, I, I, Z, Y}}};
        l.border = {Zeros, Ones, Zeros, Zeros, Zeros};
        break;
    default:
        throw InputError("paper layout index " + std::to_string(i) + " outside 1..4");
    }
    l.corner = S0;
    return l;
}

ColorMatrix paper_four_coloring()
{
    std::array<SimpleGraph, 4> classes;
    for (int i = 0; i < 4; ++i)
        classes[i] = assemble_layout(paper_layout(i + 1));
    ColorMatrix cm(kLayoutVertices, 4);
    for (int u = 1; u <= kLayoutVertices; ++u) {
        for (int v = u + 1; v <= kLayoutVertices; ++v) {
            int owner = 0;
            int hits = 0;
            for (int i = 0; i < 4; ++i)
                if (classes[i].adjacent(u, v)) {
                    owner = i + 1;
                    ++hits;
                }
            if (hits != 1)
                throw std::logic_error("block layouts cover pair (" + std::to_string(u) + "," +
                                       std::to_string(v) + ") " + std::to_string(hits) + " times");
            cm.set_color(u, v, owner);
        }
    }
    return cm;
}

SimpleGraph blow_up(const SimpleGraph& g, int m)
{
    if (m < 1)
        throw InputError("blow-up factor must be at least 1");
    if (static_cast<long long>(g.n()) * m > kMaxVertices)
        throw InputError("blow-up to " + std::to_string(static_cast<long long>(g.n()) * m) +
                         " vertices exceeds the cap of " + std::to_string(kMaxVertices));
    SimpleGraph out(g.n() * m);
    for (auto [u, v] : g.edges())
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                out.add_edge((u - 1) * m + i, (v - 1) * m + j);
    return out;
}

} // namespace ramsey
