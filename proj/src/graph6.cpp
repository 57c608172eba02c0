#include "critgraph/graph6.hpp"

namespace critgraph {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

bool is_data_byte(unsigned char c) { return c >= 63 && c <= 126; }

class Reader {
public:
    Reader(std::string_view text, std::size_t base) : text_(text), base_(base) {}

    int next()
    {
        if (pos_ >= text_.size())
            throw Graph6Error("unexpected end of graph6 data", base_ + pos_);
        const auto c = static_cast<unsigned char>(text_[pos_]);
        if (!is_data_byte(c))
            throw Graph6Error("byte " + std::to_string(int(c)) + " is outside the graph6 range 63..126",
                              base_ + pos_);
        ++pos_;
        return c - kBias;
    }

    std::size_t pos() const { return pos_; }
    std::size_t absolute() const { return base_ + pos_; }
    bool done() const { return pos_ >= text_.size(); }

private:
    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

long long read_order(Reader& r)
{
    const std::size_t start = r.absolute();
    const int first = r.next();
    if (first < 63)
        return first;
    long long n = 0;
    int groups = 3;
    if (r.done())
        throw Graph6Error("truncated vertex-count header", r.absolute());
    // 126 126 introduces the 36-bit form.
    Reader peek = r;
    if (peek.next() == 63) {
        r.next();
        groups = 6;
    }
    for (int i = 0; i < groups; ++i)
        n = (n << 6) | r.next();
    if ((groups == 3 && n < 63) || (groups == 6 && n < 258048))
        throw Graph6Error("non-canonical vertex-count header", start);
    return n;
}

void append_order(std::string& out, int n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
        return;
    }
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
        out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
}

} // namespace

Graph6Error::Graph6Error(const std::string& message, std::size_t offset)
    : GraphError("graph6 parse error at byte " + std::to_string(offset) + ": " + message), offset_(offset)
{
}

Graph parse_graph6(std::string_view text)
{
    std::size_t base = 0;
    if (text.starts_with(kHeader)) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    if (text.ends_with('\n'))
        text.remove_suffix(1);
    if (text.ends_with('\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw Graph6Error("empty graph6 line", base);

    Reader r(text, base);
    const long long n = read_order(r);
    if (n > Graph::kMaxVertices)
        throw Graph6Error("vertex count " + std::to_string(n) + " exceeds "
                              + std::to_string(Graph::kMaxVertices),
                          base);
    const int order = static_cast<int>(n);

    std::vector<VertexSet> rows(order, VertexSet(order));
    int chunk = 0;
    int remaining = 0;
    std::size_t chunk_at = 0;
    // Upper triangle, column-major: (0,1),(0,2),(1,2),(0,3),...
    for (int j = 1; j < order; ++j)
        for (int i = 0; i < j; ++i) {
            if (remaining == 0) {
                chunk_at = r.absolute();
                chunk = r.next();
                remaining = 6;
            }
            --remaining;
            if (((chunk >> remaining) & 1) != 0) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    if (remaining > 0 && (chunk & ((1 << remaining) - 1)) != 0)
        throw Graph6Error("non-zero padding bit", chunk_at);
    if (!r.done())
        throw Graph6Error("trailing characters after graph6 data", r.absolute());
    return Graph::from_rows(std::move(rows));
}

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    append_order(out, n);
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph6Line> read_graph6_lines(std::istream& in)
{
    std::vector<Graph6Line> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        Graph6Line entry;
        entry.line_number = number;
        entry.text = line;
        try {
            entry.graph = parse_graph6(line);
        } catch (const GraphError& e) {
            entry.error = e.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace critgraph
