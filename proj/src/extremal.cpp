#include "ramsey/extremal.hpp"

#include "ramsey/detect.hpp"

#include <bit>
#include <vector>

namespace ramsey {

namespace {

void check_bound_n(int n)
{
    if (n < 1 || n > kMaxBoundVertices)
        throw InputError("vertex count " + std::to_string(n) + " outside 1.." +
                         std::to_string(kMaxBoundVertices));
}

class ExactSearch {
public:
    explicit ExactSearch(int n) : n_(n), graph_(n), best_graph_(n)
    {
        for (int u = 2; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                pairs_.emplace_back(u, v);
    }

    void run()
    {
        // Vertex 1 may be taken to have maximum degree d with neighbours 2..d+1.
        for (int d = n_ - 1; d >= 1; --d) {
            if (n_ * d / 2 <= best_)
                break;
            graph_ = SimpleGraph(n_);
            for (int v = 2; v <= d + 1; ++v)
                graph_.add_edge(1, v);
            cap_ = d;
            branch(0, d);
        }
    }

    int best() const { return best_; }
    const SimpleGraph& best_graph() const { return best_graph_; }

private:
    void branch(std::size_t next, int edges)
    {
        if (edges > best_) {
            best_ = edges;
            best_graph_ = graph_;
        }
        if (next == pairs_.size())
            return;
        int slack = 0;
        for (int v = 2; v <= n_; ++v)
            slack += cap_ - graph_.degree(v);
        const int room = std::min<int>(static_cast<int>(pairs_.size() - next), slack / 2);
        if (edges + room <= best_)
            return;

        const auto [u, v] = pairs_[next];
        if (graph_.degree(u) < cap_ && graph_.degree(v) < cap_ &&
            !any_through_edge(graph_, u, v, Pattern::cycle(4))) {
            graph_.add_edge(u, v);
            branch(next + 1, edges + 1);
            graph_.remove_edge(u, v);
        }
        branch(next + 1, edges);
    }

    int n_;
    int cap_ = 0;
    int best_ = 0;
    SimpleGraph graph_;
    SimpleGraph best_graph_;
    std::vector<std::pair<int, int>> pairs_;
};

} // namespace

std::string to_string(ExMethod m)
{
    switch (m) {
    case ExMethod::exact_exhaustive: return "exact-exhaustive";
    case ExMethod::degree_relaxation: return "degree-relaxation";
    case ExMethod::kst_formula: return "kst-formula";
    case ExMethod::external_constant: return "external-constant";
    }
    return "?";
}

std::uint64_t isqrt(std::uint64_t x)
{
    std::uint64_t lo = 0;
    std::uint64_t hi = std::uint64_t{1} << 32;
    // Invariant: lo^2 <= x < hi^2; mid < 2^32 so mid^2 cannot overflow.
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (mid * mid <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

ExBound ex_c4_exact(int n)
{
    if (n < 1 || n > kExhaustiveLimit)
        throw InputError("exhaustive ex(n; C4) is limited to 1 <= n <= " + std::to_string(kExhaustiveLimit) +
                         "; use the degree relaxation, the KST formula or an external constant for n = " +
                         std::to_string(n));
    ExactSearch search(n);
    if (n > 1)
        search.run();
    return ExBound{n, search.best(), ExMethod::exact_exhaustive,
                   "branch and bound over all C4-free graphs on " + std::to_string(n) + " vertices",
                   search.best_graph()};
}

ExBound ex_c4_degree_relaxation(int n)
{
    check_bound_n(n);
    // n <= 10^6 keeps n^3 within 64 bits.
    using Wide = std::int64_t;
    const Wide N = n;
    const Wide budget = N * (N - 1) / 2;
    auto choose2 = [](Wide d) { return d * (d - 1) / 2; };
    // Minimum of sum C(d_v, 2) over sequences with total degree D is reached
    // by the balanced sequence.
    auto cheapest = [&](Wide total) {
        const Wide q = total / N;
        const Wide r = total % N;
        return r * choose2(q + 1) + (N - r) * choose2(q);
    };
    // Largest even total in [0, n(n-1)] whose balanced cost fits the budget.
    Wide lo = 0;
    Wide hi = N * (N - 1) / 2;
    while (lo < hi) {
        const Wide mid = (lo + hi + 1) / 2;
        if (cheapest(2 * mid) <= budget)
            lo = mid;
        else
            hi = mid - 1;
    }
    return ExBound{n, static_cast<std::int64_t>(lo), ExMethod::degree_relaxation,
                   "integer relaxation of sum C(d_v,2) <= C(n,2)", std::nullopt};
}

ExBound ex_kst_formula(int n)
{
    check_bound_n(n);
    const std::uint64_t N = static_cast<std::uint64_t>(n);
    // floor((n + x) / 4) == floor((n + floor(x)) / 4) for integer n, and
    // floor(n sqrt(4n-3)) == isqrt(n^2 (4n-3)).
    const std::uint64_t root = isqrt(N * N * (4 * N - 3));
    return ExBound{n, static_cast<std::int64_t>((N + root) / 4), ExMethod::kst_formula,
                   "floor(n(1+sqrt(4n-3))/4)", std::nullopt};
}

ExBound external_bound(int n, std::int64_t value, std::string note)
{
    check_bound_n(n);
    if (value < 0)
        throw InputError("ex value must be non-negative");
    if (note.empty())
        throw InputError("an external constant needs a citation note");
    return ExBound{n, value, ExMethod::external_constant, std::move(note), std::nullopt};
}

std::optional<ExBound> known_external_bound(int n)
{
    if (n == 19)
        return external_bound(19, 42,
                              "Clapham, Flockhart and Sheehan: a C4-free graph on 19 vertices has at most 42 edges");
    return std::nullopt;
}

BoundConclusion density_upper_bound(int n, int colors, const ExBound& ex)
{
    check_bound_n(n);
    if (colors < 1)
        throw InputError("colour count must be at least 1");
    if (ex.n != n)
        throw InputError("ex bound is for n = " + std::to_string(ex.n) + ", not n = " + std::to_string(n));
    BoundConclusion out;
    out.n = n;
    out.colors = colors;
    out.ex_value = ex.value;
    if (__builtin_mul_overflow(static_cast<std::int64_t>(colors), ex.value, &out.lhs))
        throw InputError("colors * ex overflows 64 bits");
    out.rhs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    out.holds = out.lhs < out.rhs;
    const std::string c = std::to_string(colors);
    const std::string ns = std::to_string(n);
    if (out.holds)
        out.statement = "every " + c + "-coloring of K_" + ns +
                        " contains a monochromatic C4, hence R_" + c + "(C4) <= " + ns;
    else
        out.statement = c + "*" + std::to_string(ex.value) + " >= C(" + ns +
                        ",2); the density argument is inconclusive";
    return out;
}

} // namespace ramsey
