#include "ramsey/coloring_io.hpp"

#include <charconv>
#include <sstream>

namespace ramsey {

namespace {

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    // Next '\n'-terminated line without its terminator.
    std::string_view next()
    {
        ++line_;
        if (pos_ >= text_.size())
            throw ParseError(line_, 1, "unexpected end of file");
        const std::size_t end = text_.find('\n', pos_);
        if (end == std::string_view::npos)
            throw ParseError(line_, static_cast<int>(text_.size() - pos_) + 1, "missing final newline");
        std::string_view line = text_.substr(pos_, end - pos_);
        pos_ = end + 1;
        return line;
    }

    bool done() const { return pos_ >= text_.size(); }
    int line() const { return line_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 0;
};

// Reads a decimal number starting at line[pos]; column is 1-based.
int read_number(std::string_view line, std::size_t& pos, int line_no, const char* what)
{
    const int column = static_cast<int>(pos) + 1;
    if (pos >= line.size() || line[pos] < '0' || line[pos] > '9')
        throw ParseError(line_no, column, std::string("expected ") + what);
    if (line[pos] == '0' && pos + 1 < line.size() && line[pos + 1] >= '0' && line[pos + 1] <= '9')
        throw ParseError(line_no, column, std::string("leading zero in ") + what);
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{})
        throw ParseError(line_no, column, std::string(what) + " out of range");
    pos = static_cast<std::size_t>(ptr - line.data());
    return value;
}

void expect_literal(std::string_view line, std::size_t& pos, std::string_view lit, int line_no)
{
    if (line.substr(pos, lit.size()) != lit)
        throw ParseError(line_no, static_cast<int>(pos) + 1, "expected '" + std::string(lit) + "'");
    pos += lit.size();
}

std::string pair_text(int u, int v)
{
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column)
{
}

ColorMatrix parse_coloring(std::string_view text)
{
    LineReader reader(text);
    if (reader.next() != kColoringHeader)
        throw ParseError(1, 1, "bad header, expected '" + std::string(kColoringHeader) + "'");

    const std::string_view dims = reader.next();
    std::size_t pos = 0;
    expect_literal(dims, pos, "n=", 2);
    const std::size_t n_col = pos;
    const int n = read_number(dims, pos, 2, "vertex count");
    expect_literal(dims, pos, " c=", 2);
    const std::size_t c_col = pos;
    const int c = read_number(dims, pos, 2, "colour count");
    if (pos != dims.size())
        throw ParseError(2, static_cast<int>(pos) + 1, "unexpected trailing characters");
    if (n < 1 || n > kMaxVertices)
        throw ParseError(2, static_cast<int>(n_col) + 1, "vertex count outside 1.." + std::to_string(kMaxVertices));
    if (c < 1 || c > kMaxColors)
        throw ParseError(2, static_cast<int>(c_col) + 1, "colour count outside 1.." + std::to_string(kMaxColors));

    ColorMatrix cm(n, c);
    std::vector<int> upper(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int u = 1; u <= n; ++u) {
        const std::string_view row = reader.next();
        const int line_no = reader.line();
        pos = 0;
        for (int v = 1; v <= n; ++v) {
            if (v > 1) {
                if (pos >= row.size())
                    throw ParseError(line_no, static_cast<int>(pos) + 1,
                                     "row has " + std::to_string(v - 1) + " entries, expected " + std::to_string(n));
                if (row[pos] != ' ')
                    throw ParseError(line_no, static_cast<int>(pos) + 1, "expected a single space");
                ++pos;
            }
            const int column = static_cast<int>(pos) + 1;
            const int value = read_number(row, pos, line_no, "colour");
            if (u == v) {
                if (value != 0)
                    throw ParseError(line_no, column, "nonzero diagonal at " + pair_text(u, v));
                continue;
            }
            if (value < 1 || value > c)
                throw ParseError(line_no, column, "color out of range at " + pair_text(u, v));
            if (u < v) {
                upper[static_cast<std::size_t>(u - 1) * n + (v - 1)] = value;
                cm.set_color(u, v, value);
            } else if (upper[static_cast<std::size_t>(v - 1) * n + (u - 1)] != value) {
                throw ParseError(line_no, column, "asymmetric at " + pair_text(u, v));
            }
        }
        if (pos != row.size())
            throw ParseError(line_no, static_cast<int>(pos) + 1,
                             row.find_first_not_of(" \t\r", pos) == std::string_view::npos
                                 ? "trailing whitespace"
                                 : "row has more than " + std::to_string(n) + " entries");
    }
    if (!reader.done())
        throw ParseError(reader.line() + 1, 1, "unexpected content after the matrix");
    return cm;
}

std::string serialize_coloring(const ColorMatrix& cm)
{
    std::string out(kColoringHeader);
    out += "\nn=" + std::to_string(cm.n()) + " c=" + std::to_string(cm.colors()) + "\n";
    for (int u = 1; u <= cm.n(); ++u) {
        for (int v = 1; v <= cm.n(); ++v) {
            if (v > 1)
                out += ' ';
            out += std::to_string(u == v ? 0 : cm.color(u, v));
        }
        out += '\n';
    }
    return out;
}

std::string export_dot(const SimpleGraph& g, const std::string& name)
{
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 1; v <= g.n(); ++v)
        out << "  " << v << "\n";
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << "\n";
    out << "}\n";
    return out.str();
}

std::vector<std::string> export_dot(const ColorMatrix& cm)
{
    std::vector<std::string> out;
    for (int i = 1; i <= cm.colors(); ++i)
        out.push_back(export_dot(color_class(cm, i), "color" + std::to_string(i)));
    return out;
}

} // namespace ramsey
