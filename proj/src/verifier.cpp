#include "ramsey/verifier.hpp"

#include "ramsey/detect.hpp"

#include <sstream>

namespace ramsey {

AvoidSpec parse_avoid_spec(const std::string& text)
{
    AvoidSpec spec;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (token.empty())
            throw InputError("empty entry in avoid spec '" + text + "'");
        spec.push_back(parse_pattern(token));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return spec;
}

std::string to_string(const AvoidSpec& spec)
{
    std::string out;
    for (std::size_t i = 0; i < spec.size(); ++i)
        out += (i ? "," : "") + spec[i].to_string();
    return out;
}

std::string PartitionCheck::describe() const
{
    if (ok())
        return "ok";
    std::ostringstream out;
    auto list = [&out](const std::vector<std::pair<int, int>>& pairs) {
        const std::size_t shown = std::min<std::size_t>(pairs.size(), 5);
        for (std::size_t i = 0; i < shown; ++i)
            out << (i ? " " : "") << "(" << pairs[i].first << "," << pairs[i].second << ")";
        if (pairs.size() > shown)
            out << " ...";
    };
    if (!missing.empty()) {
        out << missing.size() << " missing pairs: ";
        list(missing);
    }
    if (!doubly_covered.empty()) {
        if (!missing.empty())
            out << "; ";
        out << doubly_covered.size() << " doubly-covered pairs: ";
        list(doubly_covered);
    }
    return out.str();
}

PartitionCheck check_edge_partition(const std::vector<SimpleGraph>& graphs)
{
    if (graphs.empty())
        throw InputError("edge partition check needs at least one graph");
    const int n = graphs.front().n();
    for (const auto& g : graphs)
        if (g.n() != n)
            throw InputError("graphs in an edge partition must share the vertex count");
    PartitionCheck result;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            int hits = 0;
            for (const auto& g : graphs)
                hits += g.adjacent(u, v);
            if (hits == 0)
                result.missing.emplace_back(u, v);
            else if (hits > 1)
                result.doubly_covered.emplace_back(u, v);
        }
    return result;
}

bool VerificationReport::passed() const
{
    if (!partition.ok())
        return false;
    for (const auto& c : colors)
        if (!c.clean())
            return false;
    return true;
}

int VerificationReport::first_failing_color() const
{
    for (const auto& c : colors)
        if (!c.clean())
            return c.color;
    return 0;
}

std::vector<int> VerificationReport::class_sizes() const
{
    std::vector<int> sizes;
    for (const auto& c : colors)
        sizes.push_back(c.edges);
    return sizes;
}

std::string VerificationReport::summary() const
{
    std::ostringstream out;
    out << "partition: " << partition.describe() << "\n";
    int total = 0;
    for (const auto& c : colors) {
        total += c.edges;
        out << "color " << c.color << ": avoid " << c.target.to_string() << ", " << c.edges << " edges, ";
        if (c.clean())
            out << "clean\n";
        else
            out << "contains " << to_string(*c.witness) << "\n";
    }
    out << "class sizes:";
    for (const auto& c : colors)
        out << " " << c.edges;
    out << " (total " << total << ")\n";
    out << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

VerificationReport verify(const ColorMatrix& cm, const AvoidSpec& spec)
{
    if (static_cast<int>(spec.size()) != cm.colors())
        throw InputError("avoid spec has " + std::to_string(spec.size()) + " entries but the colouring uses " +
                         std::to_string(cm.colors()) + " colours");
    for (const auto& p : spec)
        if (p.size < 3 || (p.kind == PatternKind::cycle && p.size > 8))
            throw InputError("unsupported target " + p.to_string());

    VerificationReport report;
    const auto classes = color_classes(cm);
    report.partition = check_edge_partition(classes);

    for (int i = 1; i <= cm.colors(); ++i) {
        const SimpleGraph& g = classes[i - 1];
        report.colors.push_back(ColorStatus{i, spec[i - 1], g.edge_count(), find_pattern(g, spec[i - 1])});
    }
    return report;
}

} // namespace ramsey
