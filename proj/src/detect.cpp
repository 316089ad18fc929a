#include "ramsey/detect.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace ramsey {

namespace {

using Word = std::uint64_t;

constexpr Word bit(int v) { return Word{1} << (v - 1); }

// Vertices strictly greater than v.
constexpr Word above(int v) { return v >= 64 ? 0 : ~Word{0} << v; }

int lowest(Word w) { return std::countr_zero(w) + 1; }

bool extend_clique(const SimpleGraph& g, Word candidates, int remaining, std::vector<int>& chosen)
{
    if (remaining == 0)
        return true;
    if (std::popcount(candidates) < remaining)
        return false;
    for (Word c = candidates; c != 0; c &= c - 1) {
        const int v = lowest(c);
        chosen.push_back(v);
        if (extend_clique(g, candidates & g.row(v) & above(v), remaining - 1, chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

std::int64_t count_cliques_in(const SimpleGraph& g, Word candidates, int remaining)
{
    if (remaining == 0)
        return 1;
    if (remaining == 1)
        return std::popcount(candidates);
    if (std::popcount(candidates) < remaining)
        return 0;
    std::int64_t total = 0;
    for (Word c = candidates; c != 0; c &= c - 1) {
        const int v = lowest(c);
        total += count_cliques_in(g, candidates & g.row(v) & above(v), remaining - 1);
    }
    return total;
}

bool is_bipartite(const SimpleGraph& g)
{
    std::vector<int> side(static_cast<std::size_t>(g.n()) + 1, -1);
    std::vector<int> queue;
    for (int s = 1; s <= g.n(); ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int x = queue[head];
            for (Word r = g.row(x); r != 0; r &= r - 1) {
                const int y = lowest(r);
                if (side[y] < 0) {
                    side[y] = 1 - side[x];
                    queue.push_back(y);
                } else if (side[y] == side[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Lexicographically first l-cycle whose smallest vertex is `start`.
class CycleFinder {
public:
    CycleFinder(const SimpleGraph& g, int start, int length)
        : g_(g), start_(start), length_(length), allowed_(above(start) & g.vertex_mask())
    {
        // Distances to start inside the allowed region bound how far a partial
        // path may wander before it can no longer close in time.
        dist_.fill(kFar);
        dist_[start] = 0;
        std::vector<int> queue{start};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int x = queue[head];
            for (Word r = g.row(x) & allowed_; r != 0; r &= r - 1) {
                const int y = lowest(r);
                if (dist_[y] == kFar) {
                    dist_[y] = dist_[x] + 1;
                    queue.push_back(y);
                }
            }
        }
    }

    std::optional<std::vector<int>> find()
    {
        path_.assign(1, start_);
        if (extend(bit(start_)))
            return path_;
        return std::nullopt;
    }

private:
    static constexpr int kFar = 1 << 20;

    bool extend(Word visited)
    {
        const int placed = static_cast<int>(path_.size());
        const int last = path_.back();
        Word next = g_.row(last) & allowed_ & ~visited;
        if (placed == length_ - 1) {
            // Closing vertex: adjacent to start and larger than the second vertex.
            next &= g_.row(start_) & above(path_[1]);
            if (next == 0)
                return false;
            path_.push_back(lowest(next));
            return true;
        }
        const int edges_left_after = length_ - placed; // from the new vertex back to start
        for (Word c = next; c != 0; c &= c - 1) {
            const int v = lowest(c);
            if (dist_[v] > edges_left_after)
                continue;
            path_.push_back(v);
            if (extend(visited | bit(v)))
                return true;
            path_.pop_back();
        }
        return false;
    }

    const SimpleGraph& g_;
    int start_;
    int length_;
    Word allowed_;
    std::array<int, kMaxVertices + 1> dist_{};
    std::vector<int> path_;
};

std::optional<SubgraphWitness> first_cycle(const SimpleGraph& g, int l, int first_start)
{
    if (l % 2 == 1 && is_bipartite(g))
        return std::nullopt;
    for (int s = first_start; s <= g.n() - l + 1; ++s) {
        if (auto path = CycleFinder(g, s, l).find())
            return SubgraphWitness{Pattern::cycle(l), std::move(*path)};
    }
    return std::nullopt;
}

std::int64_t count_paths(const SimpleGraph& g, int from, int to, int internal_left, Word visited)
{
    const Word next = g.row(from) & ~visited;
    if (internal_left == 1)
        return std::popcount(next & g.row(to));
    std::int64_t total = 0;
    for (Word c = next; c != 0; c &= c - 1) {
        const int x = lowest(c);
        total += count_paths(g, x, to, internal_left - 1, visited | bit(x));
    }
    return total;
}

} // namespace

std::optional<SubgraphWitness> has_clique(const SimpleGraph& g, int k)
{
    if (k < 2 || k > g.n())
        throw InputError("clique size " + std::to_string(k) + " outside 2.." +
                         std::to_string(g.n()));
    std::vector<int> chosen;
    if (extend_clique(g, g.vertex_mask(), k, chosen))
        return SubgraphWitness{Pattern::clique(k), std::move(chosen)};
    return std::nullopt;
}

std::optional<SubgraphWitness> has_four_cycle(const SimpleGraph& g)
{
    // The smaller vertex of the first pair with two common neighbours is the
    // smallest vertex lying on any 4-cycle.
    for (int u = 1; u <= g.n(); ++u) {
        for (int v = u + 1; v <= g.n(); ++v) {
            if (std::popcount(g.row(u) & g.row(v)) >= 2)
                return first_cycle(g, 4, u);
        }
    }
    return std::nullopt;
}

std::optional<SubgraphWitness> has_cycle(const SimpleGraph& g, int l)
{
    if (l < 3 || l > std::min(8, g.n()))
        throw InputError("cycle length " + std::to_string(l) + " outside 3.." +
                         std::to_string(std::min(8, g.n())));
    return first_cycle(g, l, 1);
}

std::optional<SubgraphWitness> find_pattern(const SimpleGraph& g, const Pattern& p)
{
    if (p.size > g.n())
        return std::nullopt;
    if (p.kind == PatternKind::clique)
        return has_clique(g, p.size);
    if (p.size == 4)
        return has_four_cycle(g);
    return has_cycle(g, p.size);
}

std::int64_t count_through_edge(const SimpleGraph& g, int u, int v, const Pattern& p)
{
    const Word ends = bit(u) | bit(v);
    if (p.kind == PatternKind::clique)
        return count_cliques_in(g, g.row(u) & g.row(v) & ~ends, p.size - 2);
    if (p.size == 3)
        return std::popcount(g.row(u) & g.row(v) & ~ends);
    if (p.size == 4) {
        std::int64_t total = 0;
        for (Word a = g.row(u) & ~ends; a != 0; a &= a - 1)
            total += std::popcount(g.row(lowest(a)) & g.row(v) & ~ends);
        return total;
    }
    return count_paths(g, u, v, p.size - 2, ends);
}

bool any_through_edge(const SimpleGraph& g, int u, int v, const Pattern& p)
{
    const Word ends = bit(u) | bit(v);
    if (p.kind == PatternKind::clique) {
        std::vector<int> scratch;
        return extend_clique(g, g.row(u) & g.row(v) & ~ends, p.size - 2, scratch);
    }
    if (p.size <= 4)
        return count_through_edge(g, u, v, p) > 0;
    return count_paths(g, u, v, p.size - 2, ends) > 0;
}

std::int64_t count_copies(const SimpleGraph& g, const Pattern& p)
{
    if (p.size > g.n())
        return 0;
    if (p.kind == PatternKind::clique)
        return count_cliques_in(g, g.vertex_mask(), p.size);
    std::int64_t through = 0;
    for (auto [u, v] : g.edges())
        through += count_through_edge(g, u, v, p);
    return through / p.size;
}

} // namespace ramsey
