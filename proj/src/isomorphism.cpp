#include "ramsey/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace ramsey {

namespace {

// Joint 1-dimensional Weisfeiler-Leman refinement, so colour ids are
// comparable across the two graphs.
std::pair<std::vector<int>, std::vector<int>> refine(const SimpleGraph& g1, const SimpleGraph& g2)
{
    const int n = g1.n();
    std::vector<int> c1 = g1.degrees();
    std::vector<int> c2 = g2.degrees();
    std::size_t classes = 0;
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        auto signature = [](const SimpleGraph& g, const std::vector<int>& colour, int v) {
            std::vector<int> around;
            for (int w : g.neighbours(v))
                around.push_back(colour[w - 1]);
            std::sort(around.begin(), around.end());
            return std::make_pair(colour[v - 1], std::move(around));
        };
        std::vector<std::pair<int, std::vector<int>>> s1, s2;
        for (int v = 1; v <= n; ++v) {
            s1.push_back(signature(g1, c1, v));
            s2.push_back(signature(g2, c2, v));
        }
        for (const auto& s : s1)
            ids.emplace(s, 0);
        for (const auto& s : s2)
            ids.emplace(s, 0);
        int next = 0;
        for (auto& [key, id] : ids)
            id = next++;
        for (int v = 0; v < n; ++v) {
            c1[v] = ids[s1[v]];
            c2[v] = ids[s2[v]];
        }
        if (ids.size() == classes)
            break;
        classes = ids.size();
    }
    return {std::move(c1), std::move(c2)};
}

class Matcher {
public:
    Matcher(const SimpleGraph& g1, const SimpleGraph& g2, std::vector<int> c1, std::vector<int> c2)
        : g1_(g1), g2_(g2), c1_(std::move(c1)), c2_(std::move(c2)),
          map_(static_cast<std::size_t>(g1.n()), 0), used_(static_cast<std::size_t>(g1.n()) + 1, false)
    {
        plan_order();
    }

    std::optional<VertexMap> run()
    {
        if (assign(0))
            return map_;
        return std::nullopt;
    }

private:
    // Next vertex: most already-ordered neighbours, then rarest colour, then
    // smallest label.
    void plan_order()
    {
        const int n = g1_.n();
        std::map<int, int> class_size;
        for (int c : c1_)
            ++class_size[c];
        std::vector<bool> placed(static_cast<std::size_t>(n) + 1, false);
        std::vector<int> links(static_cast<std::size_t>(n) + 1, 0);
        for (int step = 0; step < n; ++step) {
            int best = 0;
            for (int v = 1; v <= n; ++v) {
                if (placed[v])
                    continue;
                if (best == 0 || links[v] > links[best] ||
                    (links[v] == links[best] && class_size[c1_[v - 1]] < class_size[c1_[best - 1]]))
                    best = v;
            }
            placed[best] = true;
            order_.push_back(best);
            for (int w : g1_.neighbours(best))
                ++links[w];
        }
    }

    bool consistent(std::size_t depth, int v, int w) const
    {
        for (std::size_t i = 0; i < depth; ++i) {
            const int x = order_[i];
            if (g1_.adjacent(v, x) != g2_.adjacent(w, map_[x - 1]))
                return false;
        }
        return true;
    }

    bool assign(std::size_t depth)
    {
        if (depth == order_.size())
            return true;
        const int v = order_[depth];
        for (int w = 1; w <= g2_.n(); ++w) {
            if (used_[w] || c2_[w - 1] != c1_[v - 1] || !consistent(depth, v, w))
                continue;
            map_[v - 1] = w;
            used_[w] = true;
            if (assign(depth + 1))
                return true;
            used_[w] = false;
        }
        map_[v - 1] = 0;
        return false;
    }

    const SimpleGraph& g1_;
    const SimpleGraph& g2_;
    std::vector<int> c1_, c2_;
    std::vector<int> order_;
    VertexMap map_;
    std::vector<bool> used_;
};

} // namespace

std::optional<VertexMap> is_isomorphic(const SimpleGraph& g1, const SimpleGraph& g2)
{
    if (g1.n() != g2.n() || g1.edge_count() != g2.edge_count())
        return std::nullopt;
    auto [c1, c2] = refine(g1, g2);
    auto h1 = c1, h2 = c2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2)
        return std::nullopt;
    return Matcher(g1, g2, std::move(c1), std::move(c2)).run();
}

bool is_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2, const VertexMap& mapping)
{
    const int n = g1.n();
    if (g2.n() != n || static_cast<int>(mapping.size()) != n)
        return false;
    std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
    for (int w : mapping) {
        if (w < 1 || w > n || hit[w])
            return false;
        hit[w] = true;
    }
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (g1.adjacent(u, v) != g2.adjacent(mapping[u - 1], mapping[v - 1]))
                return false;
    return true;
}

} // namespace ramsey
