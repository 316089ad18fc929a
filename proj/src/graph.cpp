#include "ramsey/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace ramsey {

SimpleGraph::SimpleGraph(int n) : n_(n)
{
    if (n < 0 || n > kMaxVertices)
        throw InputError("graph size " + std::to_string(n) + " outside 0.." +
                         std::to_string(kMaxVertices));
    rows_.assign(static_cast<std::size_t>(n), 0);
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    SimpleGraph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::complete(int n)
{
    SimpleGraph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::cycle(int n)
{
    if (n < 3)
        throw InputError("a cycle needs at least 3 vertices");
    SimpleGraph g(n);
    for (int v = 1; v <= n; ++v)
        g.add_edge(v, v % n + 1);
    return g;
}

void SimpleGraph::check_pair(int u, int v) const
{
    if (u < 1 || u > n_ || v < 1 || v > n_)
        throw InputError("vertex out of range 1.." + std::to_string(n_));
    if (u == v)
        throw InputError("self-loop at vertex " + std::to_string(u));
}

void SimpleGraph::add_edge(int u, int v)
{
    check_pair(u, v);
    rows_[u - 1] |= std::uint64_t{1} << (v - 1);
    rows_[v - 1] |= std::uint64_t{1} << (u - 1);
}

void SimpleGraph::remove_edge(int u, int v)
{
    check_pair(u, v);
    rows_[u - 1] &= ~(std::uint64_t{1} << (v - 1));
    rows_[v - 1] &= ~(std::uint64_t{1} << (u - 1));
}

int SimpleGraph::degree(int v) const
{
    return std::popcount(rows_[v - 1]);
}

int SimpleGraph::edge_count() const
{
    int total = 0;
    for (auto r : rows_)
        total += std::popcount(r);
    return total / 2;
}

std::vector<int> SimpleGraph::degrees() const
{
    std::vector<int> d;
    d.reserve(rows_.size());
    for (auto r : rows_)
        d.push_back(std::popcount(r));
    return d;
}

std::vector<int> SimpleGraph::neighbours(int v) const
{
    std::vector<int> out;
    for (auto r = rows_[v - 1]; r != 0; r &= r - 1)
        out.push_back(std::countr_zero(r) + 1);
    return out;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
        for (int v : neighbours(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const
{
    SimpleGraph g(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                g.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return g;
}

std::uint64_t SimpleGraph::vertex_mask() const
{
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

int Pattern::edge_count() const
{
    return kind == PatternKind::clique ? size * (size - 1) / 2 : size;
}

std::string Pattern::to_string() const
{
    return (kind == PatternKind::clique ? "K" : "C") + std::to_string(size);
}

Pattern parse_pattern(const std::string& token)
{
    if (token.size() < 2 || (token[0] != 'K' && token[0] != 'C'))
        throw InputError("bad pattern '" + token + "': expected K<k> or C<l>");
    int size = 0;
    const char* first = token.data() + 1;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, size);
    if (ec != std::errc{} || ptr != last)
        throw InputError("bad pattern '" + token + "': expected K<k> or C<l>");
    if (token[0] == 'K') {
        if (size < 3 || size > kMaxVertices)
            throw InputError("clique size in '" + token + "' outside 3.." +
                             std::to_string(kMaxVertices));
        return Pattern::clique(size);
    }
    if (size < 3 || size > 8)
        throw InputError("cycle length in '" + token + "' outside 3..8");
    return Pattern::cycle(size);
}

bool is_valid_witness(const SimpleGraph& g, const SubgraphWitness& w)
{
    const auto& vs = w.vertices;
    if (static_cast<int>(vs.size()) != w.pattern.size)
        return false;
    for (int v : vs)
        if (v < 1 || v > g.n())
            return false;
    auto sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;

    const std::size_t k = vs.size();
    if (w.pattern.kind == PatternKind::clique) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (!g.adjacent(vs[i], vs[j]))
                    return false;
        return true;
    }
    if (k < 3)
        return false;
    for (std::size_t i = 0; i < k; ++i)
        if (!g.adjacent(vs[i], vs[(i + 1) % k]))
            return false;
    return true;
}

std::string to_string(const SubgraphWitness& w)
{
    std::ostringstream out;
    out << w.pattern.to_string() << " (";
    for (std::size_t i = 0; i < w.vertices.size(); ++i)
        out << (i ? "," : "") << w.vertices[i];
    out << ")";
    return out.str();
}

} // namespace ramsey
