#include "gfree/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "gfree/errors.hpp"

namespace gfree {
namespace {

constexpr int kG6Offset = 63;
constexpr char kG6Max = 126;

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view token, std::string_view context)
{
    int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("edge-list: expected integer in " + std::string(context) + ", got '" + std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text)
{
    text = trim(text);
    if (text.empty()) throw ParseError("edge-list: empty input");

    std::size_t header_end = 0;
    while (header_end < text.size() && !std::isspace(static_cast<unsigned char>(text[header_end])) &&
           text[header_end] != ';' && text[header_end] != ',') {
        ++header_end;
    }
    const int n = parse_int(text.substr(0, header_end), "header");
    if (n < 0) throw ParseError("edge-list: negative vertex count");
    Graph g(n);

    std::string_view rest = trim(text.substr(header_end));
    if (!rest.empty() && rest.front() == ';') rest = trim(rest.substr(1));

    std::size_t start = 0;
    while (start <= rest.size()) {
        std::size_t stop = rest.find_first_of(",\n", start);
        if (stop == std::string_view::npos) stop = rest.size();
        const auto tokens = split_ws(rest.substr(start, stop - start));
        if (!tokens.empty()) {
            if (tokens.size() != 2) {
                throw ParseError("edge-list: pair '" + std::string(trim(rest.substr(start, stop - start))) +
                                 "' must have exactly two endpoints");
            }
            g.add_edge(parse_int(tokens[0], "pair"), parse_int(tokens[1], "pair"));
        }
        start = stop + 1;
    }
    return g;
}

Graph parse_graph6(std::string_view text)
{
    text = trim(text);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw ParseError("graph6: empty input");
    for (char c : text) {
        if (c < kG6Offset || c > kG6Max) throw ParseError("graph6: byte outside 63..126");
    }

    std::size_t pos = 0;
    int n = 0;
    if (text[0] != kG6Max) {
        n = text[0] - kG6Offset;
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == kG6Max) throw ParseError("graph6: unsupported or truncated size header");
        n = ((text[1] - kG6Offset) << 12) | ((text[2] - kG6Offset) << 6) | (text[3] - kG6Offset);
        pos = 4;
    }
    if (n > kMaxVertices) {
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds supported maximum " +
                         std::to_string(kMaxVertices));
    }

    const std::size_t bit_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    if (text.size() - pos != byte_count) {
        throw ParseError("graph6: expected " + std::to_string(byte_count) + " adjacency bytes for n=" +
                         std::to_string(n) + ", got " + std::to_string(text.size() - pos));
    }

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + k / 6] - kG6Offset;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

Graph parse_graph(std::string_view text, GraphFormat format)
{
    return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n < kG6Max - kG6Offset) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else {
        out.push_back(kG6Max);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Offset));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Offset));
        out.push_back(static_cast<char>((n & 0x3f) + kG6Offset));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kG6Offset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Offset));
    return out;
}

std::string to_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.order()) + ";";
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        out += first ? " " : ", ";
        out += std::to_string(u) + " " + std::to_string(v);
        first = false;
    }
    return out;
}

}  // namespace gfree
