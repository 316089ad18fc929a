#include "ramsey/color_matrix.hpp"

#include <string>

namespace ramsey {

ColorMatrix::ColorMatrix(int n, int colors) : n_(n), colors_(colors)
{
    if (n < 1 || n > kMaxVertices)
        throw InputError("vertex count " + std::to_string(n) + " outside 1.." +
                         std::to_string(kMaxVertices));
    if (colors < 1 || colors > kMaxColors)
        throw InputError("colour count " + std::to_string(colors) + " outside 1.." +
                         std::to_string(kMaxColors));
    cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 1);
    for (int v = 1; v <= n; ++v)
        cells_[index(v, v)] = 0;
}

void ColorMatrix::set_color(int u, int v, int color)
{
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v)
        throw InputError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ") in K_" +
                         std::to_string(n_));
    if (color < 1 || color > colors_)
        throw InputError("colour " + std::to_string(color) + " outside 1.." +
                         std::to_string(colors_));
    cells_[index(u, v)] = static_cast<std::uint8_t>(color);
    cells_[index(v, u)] = static_cast<std::uint8_t>(color);
}

SimpleGraph color_class(const ColorMatrix& cm, int i)
{
    if (i < 1 || i > cm.colors())
        throw InputError("colour " + std::to_string(i) + " outside 1.." +
                         std::to_string(cm.colors()));
    SimpleGraph g(cm.n());
    for (int u = 1; u <= cm.n(); ++u)
        for (int v = u + 1; v <= cm.n(); ++v)
            if (cm.color(u, v) == i)
                g.add_edge(u, v);
    return g;
}

std::vector<SimpleGraph> color_classes(const ColorMatrix& cm)
{
    std::vector<SimpleGraph> out;
    for (int i = 1; i <= cm.colors(); ++i)
        out.push_back(color_class(cm, i));
    return out;
}

ColorMatrix relabel(const ColorMatrix& cm, const std::vector<int>& perm)
{
    if (static_cast<int>(perm.size()) != cm.n())
        throw InputError("permutation length does not match vertex count");
    ColorMatrix out(cm.n(), cm.colors());
    std::vector<bool> seen(perm.size() + 1, false);
    for (int p : perm) {
        if (p < 1 || p > cm.n() || seen[p])
            throw InputError("not a permutation of 1..n");
        seen[p] = true;
    }
    for (int u = 1; u <= cm.n(); ++u)
        for (int v = u + 1; v <= cm.n(); ++v)
            out.set_color(perm[u - 1], perm[v - 1], cm.color(u, v));
    return out;
}

} // namespace ramsey
