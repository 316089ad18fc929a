#include "ramsey/search.hpp"

#include "ramsey/detect.hpp"

#include <atomic>
#include <climits>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

namespace ramsey {

namespace {

void check_spec(int colors, const AvoidSpec& spec)
{
    if (static_cast<int>(spec.size()) != colors)
        throw InputError("avoid spec has " + std::to_string(spec.size()) + " entries for " +
                         std::to_string(colors) + " colours");
    for (const auto& p : spec)
        if (p.size < 3 || (p.kind == PatternKind::cycle && p.size > 8))
            throw InputError("unsupported target " + p.to_string());
}

int draw_color(std::mt19937_64& rng, int colors)
{
    // Multiply-shift reduction: identical on every platform.
    return static_cast<int>(((rng() >> 32) * static_cast<std::uint64_t>(colors)) >> 32) + 1;
}

struct Edge {
    int u;
    int v;
};

class LocalSearch {
public:
    LocalSearch(const SearchConfig& cfg, int restart, const std::atomic<int>& found)
        : cfg_(cfg), restart_(restart), found_(found), rng_(restart_seed(cfg.seed, restart))
    {
        for (int v = 2; v <= cfg.n; ++v)
            for (int u = 1; u < v; ++u)
                edges_.push_back({u, v});
        tabu_until_.assign(edges_.size() * static_cast<std::size_t>(cfg.colors + 1), -1);
    }

    std::optional<ColorMatrix> run()
    {
        randomize();
        std::int64_t best = objective_;
        std::int64_t last_improvement = 0;
        for (iterations_ = 0; iterations_ < cfg_.budget; ++iterations_) {
            if (objective_ == 0) {
                ColorMatrix cm = to_matrix();
                if (verify(cm, cfg_.spec).passed())
                    return cm;
            }
            if ((iterations_ & 1023) == 0 && found_.load(std::memory_order_relaxed) < restart_)
                return std::nullopt;
            if (!step(best))
                break;
            if (objective_ < best) {
                best = objective_;
                last_improvement = iterations_;
            } else if (iterations_ - last_improvement > cfg_.stagnation_window) {
                randomize();
                best = objective_;
                last_improvement = iterations_;
            }
        }
        if (objective_ == 0) {
            ColorMatrix cm = to_matrix();
            if (verify(cm, cfg_.spec).passed())
                return cm;
        }
        return std::nullopt;
    }

    std::int64_t iterations() const { return iterations_; }

private:
    std::int64_t through(int color, const Edge& e) const
    {
        return count_through_edge(classes_[color - 1], e.u, e.v, cfg_.spec[color - 1]);
    }

    void randomize()
    {
        classes_.assign(static_cast<std::size_t>(cfg_.colors), SimpleGraph(cfg_.n));
        color_.assign(edges_.size(), 0);
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            color_[i] = draw_color(rng_, cfg_.colors);
            classes_[color_[i] - 1].add_edge(edges_[i].u, edges_[i].v);
        }
        objective_ = 0;
        for (int c = 1; c <= cfg_.colors; ++c)
            objective_ += count_copies(classes_[c - 1], cfg_.spec[c - 1]);
        std::fill(tabu_until_.begin(), tabu_until_.end(), -1);
    }

    // Applies the best admissible move; ties go to the lowest (u, v, colour).
    bool step(std::int64_t best)
    {
        const int colors = cfg_.colors;
        std::int64_t best_delta = std::numeric_limits<std::int64_t>::max();
        std::int64_t fallback_delta = std::numeric_limits<std::int64_t>::max();
        std::size_t pick = 0, fallback = 0;
        int pick_color = 0, fallback_color = 0;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const int old = color_[i];
            const std::int64_t loss = through(old, edges_[i]);
            if (loss == 0)
                continue;
            for (int c = 1; c <= colors; ++c) {
                if (c == old)
                    continue;
                const std::int64_t delta = through(c, edges_[i]) - loss;
                if (delta < fallback_delta) {
                    fallback_delta = delta;
                    fallback = i;
                    fallback_color = c;
                }
                const bool tabu = tabu_until_[i * (colors + 1) + c] > iterations_;
                if (tabu && objective_ + delta >= best)
                    continue;
                if (delta < best_delta) {
                    best_delta = delta;
                    pick = i;
                    pick_color = c;
                }
            }
        }
        if (pick_color == 0) {
            if (fallback_color == 0)
                return false;
            pick = fallback;
            pick_color = fallback_color;
            best_delta = fallback_delta;
        }
        const Edge& e = edges_[pick];
        const int old = color_[pick];
        classes_[old - 1].remove_edge(e.u, e.v);
        classes_[pick_color - 1].add_edge(e.u, e.v);
        color_[pick] = pick_color;
        objective_ += best_delta;
        tabu_until_[pick * (colors + 1) + old] = iterations_ + cfg_.tabu_tenure;
        return true;
    }

    ColorMatrix to_matrix() const
    {
        ColorMatrix cm(cfg_.n, cfg_.colors);
        for (std::size_t i = 0; i < edges_.size(); ++i)
            cm.set_color(edges_[i].u, edges_[i].v, color_[i]);
        return cm;
    }

    const SearchConfig& cfg_;
    int restart_;
    const std::atomic<int>& found_;
    std::mt19937_64 rng_;
    std::vector<Edge> edges_;
    std::vector<int> color_;
    std::vector<SimpleGraph> classes_;
    std::vector<std::int64_t> tabu_until_;
    std::int64_t objective_ = 0;
    std::int64_t iterations_ = 0;
};

class Enumerator {
public:
    Enumerator(int n, int colors, const AvoidSpec& spec)
        : colors_(colors), spec_(spec), classes_(static_cast<std::size_t>(colors), SimpleGraph(n))
    {
        for (int v = 2; v <= n; ++v)
            for (int u = 1; u < v; ++u)
                edges_.push_back({u, v});
        for (int c = 1; c <= colors; ++c) {
            bool fresh = true;
            for (int b = 1; b < c; ++b)
                fresh = fresh && !(spec[b - 1] == spec[c - 1]);
            if (fresh)
                first_edge_colors_.push_back(c);
        }
    }

    bool run() { return assign(0); }

private:
    bool assign(std::size_t i)
    {
        if (i == edges_.size())
            return true;
        const Edge& e = edges_[i];
        auto attempt = [&](int c) {
            SimpleGraph& g = classes_[c - 1];
            if (any_through_edge(g, e.u, e.v, spec_[c - 1]))
                return false;
            g.add_edge(e.u, e.v);
            const bool ok = assign(i + 1);
            g.remove_edge(e.u, e.v);
            return ok;
        };
        if (i == 0) {
            for (int c : first_edge_colors_)
                if (attempt(c))
                    return true;
            return false;
        }
        for (int c = 1; c <= colors_; ++c)
            if (attempt(c))
                return true;
        return false;
    }

    int colors_;
    const AvoidSpec& spec_;
    std::vector<SimpleGraph> classes_;
    std::vector<Edge> edges_;
    std::vector<int> first_edge_colors_;
};

} // namespace

void validate(const SearchConfig& cfg)
{
    if (cfg.n < 1 || cfg.n > kMaxVertices)
        throw InputError("n = " + std::to_string(cfg.n) + " outside 1.." + std::to_string(kMaxVertices));
    if (cfg.colors < 1 || cfg.colors > kMaxColors)
        throw InputError("colour count outside 1.." + std::to_string(kMaxColors));
    check_spec(cfg.colors, cfg.spec);
    if (cfg.budget < 1)
        throw InputError("budget must be at least 1");
    if (cfg.restarts < 1)
        throw InputError("restarts must be at least 1");
    if (cfg.tabu_tenure < 0)
        throw InputError("tabu tenure must be non-negative");
    if (cfg.stagnation_window < 1)
        throw InputError("stagnation window must be at least 1");
    if (cfg.workers < 1)
        throw InputError("workers must be at least 1");
}

std::uint64_t restart_seed(std::uint64_t seed, int restart)
{
    std::uint64_t z = seed + (static_cast<std::uint64_t>(restart) + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SearchOutcome run_search(const SearchConfig& cfg)
{
    validate(cfg);
    std::atomic<int> next{0};
    std::atomic<int> found{INT_MAX};
    std::mutex guard;
    SearchOutcome outcome;
    std::int64_t spent = 0;

    auto worker = [&] {
        while (true) {
            const int r = next.fetch_add(1);
            if (r >= cfg.restarts || r > found.load())
                return;
            LocalSearch search(cfg, r, found);
            auto result = search.run();
            std::lock_guard lock(guard);
            spent += search.iterations();
            if (result && r < found.load()) {
                found.store(r);
                outcome.coloring = std::move(result);
                outcome.restart = r;
                outcome.iterations = search.iterations();
            }
        }
    };

    const int threads = std::min(cfg.workers, cfg.restarts);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (!outcome.coloring)
        outcome.iterations = spent;
    return outcome;
}

std::optional<ColorMatrix> search_coloring(const SearchConfig& cfg)
{
    return run_search(cfg).coloring;
}

bool exhaustive_coloring_exists(int n, int colors, const AvoidSpec& spec)
{
    if (n < 1 || n > kMaxVertices)
        throw InputError("n = " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices));
    if (colors < 1 || colors > kMaxColors)
        throw InputError("colour count outside 1.." + std::to_string(kMaxColors));
    check_spec(colors, spec);
    const int edge_count = n * (n - 1) / 2;
    std::uint64_t space = 1;
    for (int i = 0; i < edge_count; ++i) {
        space *= static_cast<std::uint64_t>(colors);
        if (space > kExhaustiveColoringBudget)
            throw InputError(std::to_string(colors) + "-colourings of K_" + std::to_string(n) +
                             " exceed the exhaustive budget of 2^24");
    }
    return Enumerator(n, colors, spec).run();
}

} // namespace ramsey
