#pragma once

#include "ramsey/graph.hpp"

#include <cstdint>
#include <vector>

namespace ramsey {

inline constexpr int kMaxColors = 255;

// A c-colouring of the edges of K_n. Every off-diagonal pair carries exactly
// one colour in 1..c, so the colour classes always partition K_n.
class ColorMatrix {
public:
    ColorMatrix() = default;
    // All edges start in colour 1.
    ColorMatrix(int n, int colors);

    int n() const { return n_; }
    int colors() const { return colors_; }

    int color(int u, int v) const { return cells_[index(u, v)]; }
    void set_color(int u, int v, int color);

    friend bool operator==(const ColorMatrix&, const ColorMatrix&) = default;

private:
    std::size_t index(int u, int v) const
    {
        return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v - 1);
    }

    int n_ = 0;
    int colors_ = 0;
    std::vector<std::uint8_t> cells_;
};

// Graph on cm.n() vertices holding exactly the edges of colour i.
SimpleGraph color_class(const ColorMatrix& cm, int i);

std::vector<SimpleGraph> color_classes(const ColorMatrix& cm);

// Same colouring with vertex v renamed perm[v - 1].
ColorMatrix relabel(const ColorMatrix& cm, const std::vector<int>& perm);

} // namespace ramsey
