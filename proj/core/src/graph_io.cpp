#include "chroma/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "chroma/error.hpp"

namespace chroma {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool is_graph6_byte(char c) { return c >= 63 && c <= 126; }

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        lines.push_back(text.substr(0, nl));
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

int parse_index(std::string_view token, std::size_t line_no) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(token) +
                         "' is not an integer");
    }
    if (value < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": negative vertex index " +
                         std::string(token));
    }
    if (value >= kMaxVertices) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex index " + std::string(token) +
                         " exceeds the supported maximum " + std::to_string(kMaxVertices - 1));
    }
    return static_cast<int>(value);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    if (text.empty()) throw ParseError("graph6: empty input");

    for (char c : text) {
        if (!is_graph6_byte(c)) {
            throw ParseError("graph6: byte " + std::to_string(static_cast<unsigned char>(c)) +
                             " outside 63..126");
        }
    }
    if (text[0] == 126) {
        throw ParseError("graph6: long-form length prefix (n > 62) is not supported");
    }
    const int n = text[0] - kBias;
    const std::string_view body = text.substr(1);

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (body.size() < need) {
        throw ParseError("graph6: bit region has " + std::to_string(body.size()) + " bytes, need " +
                         std::to_string(need) + " for n=" + std::to_string(n));
    }
    if (body.size() > need) {
        throw ParseError("graph6: " + std::to_string(body.size() - need) + " trailing bytes after bit region");
    }

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = body[k / 6] - kBias;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxGraph6Order) {
        throw Error("graph6: order " + std::to_string(n) + " needs the long form, which is unsupported");
    }
    std::string out(1, static_cast<char>(n + kBias));
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    int declared = -1;
    int max_index = -1;
    bool seen_data = false;
    std::size_t line_no = 0;
    for (std::string_view raw : split_lines(text)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto tokens = split_ws(line);
        if (tokens.size() == 2 && tokens[0] == "n") {
            if (seen_data) {
                throw ParseError("line " + std::to_string(line_no) + ": 'n' header must come first");
            }
            declared = static_cast<int>(parse_index(tokens[1], line_no));
            seen_data = true;
            continue;
        }
        seen_data = true;
        if (tokens.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
        }
        const int u = parse_index(tokens[0], line_no);
        const int v = parse_index(tokens[1], line_no);
        if (u == v) {
            throw ParseError("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
        }
        edges.emplace_back(u, v);
        max_index = std::max({max_index, u, v});
    }
    const int n = declared >= 0 ? declared : max_index + 1;
    if (max_index >= n) {
        throw ParseError("vertex index " + std::to_string(max_index) + " outside declared order " +
                         std::to_string(n));
    }
    return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph parse_graph_auto(std::string_view text) {
    for (std::string_view raw : split_lines(text)) {
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const bool graph6 =
            line.starts_with(kHeader) ||
            (line.find_first_of(" \t") == std::string_view::npos &&
             std::all_of(line.begin(), line.end(), is_graph6_byte));
        return graph6 ? parse_graph6(line) : parse_edge_list(text);
    }
    throw ParseError("no graph found in input");
}

}  // namespace chroma
