#include "improper/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "improper/errors.hpp"

namespace improper {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long parse_int(std::string_view word, std::size_t line_no) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size()) {
        throw ParseError(line_no, "expected an integer, got '" + std::string(word) + "'");
    }
    return value;
}

}  // namespace

Graph from_edge_list(std::string_view text) {
    std::size_t line_no = 0;
    long n = -1;
    long m = -1;
    std::vector<Edge> edges;
    std::vector<VertexSet> seen;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto words = split_words(line);
        if (words.empty() || words[0] == "c") continue;

        if (words[0] == "p") {
            if (n >= 0) throw ParseError(line_no, "duplicate 'p' header");
            if (words.size() != 3) throw ParseError(line_no, "malformed header, expected 'p <n> <m>'");
            n = parse_int(words[1], line_no);
            m = parse_int(words[2], line_no);
            if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
            if (n > static_cast<long>(kMaxVertices)) {
                throw ParseError(line_no, "too many vertices (limit " + std::to_string(kMaxVertices) + ")");
            }
            seen.assign(static_cast<std::size_t>(n), 0);
        } else if (words[0] == "e") {
            if (n < 0) throw ParseError(line_no, "edge before 'p' header");
            if (words.size() != 3) throw ParseError(line_no, "malformed edge, expected 'e <u> <v>'");
            long u = parse_int(words[1], line_no);
            long v = parse_int(words[2], line_no);
            if (u < 0 || v < 0 || u >= n || v >= n) {
                throw ParseError(line_no, "vertex id out of range [0," + std::to_string(n) + ")");
            }
            if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            if ((seen[u] >> v) & 1u) {
                throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            }
            seen[u] |= bit(static_cast<Vertex>(v));
            seen[v] |= bit(static_cast<Vertex>(u));
            if (static_cast<long>(edges.size()) == m) {
                throw ParseError(line_no, "more edges than declared (" + std::to_string(m) + ")");
            }
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else {
            throw ParseError(line_no, "malformed line '" + std::string(line) + "'");
        }
        if (end == text.size()) break;
    }
    if (n < 0) throw ParseError(line_no, "missing 'p' header");
    if (static_cast<long>(edges.size()) != m) {
        throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    }
    return Graph(static_cast<std::size_t>(n), edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

Graph from_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) {
        line.remove_suffix(1);
    }
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.empty()) throw GraphError("graph6: empty input");
    const unsigned char head = static_cast<unsigned char>(line[0]);
    if (head < 63 || head > 125) {
        throw GraphError("graph6: bad header byte " + std::to_string(static_cast<int>(head)) +
                         (head == 126 ? " (long form not supported)" : ""));
    }
    const std::size_t n = head - 63;
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (line.size() != 1 + bytes) {
        throw GraphError("graph6: expected " + std::to_string(bytes) + " payload bytes, found " +
                         std::to_string(line.size() - 1));
    }
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const unsigned char c = static_cast<unsigned char>(line[1 + k / 6]);
            if (c < 63 || c > 126) throw GraphError("graph6: bad payload byte at offset " + std::to_string(1 + k / 6));
            if (((c - 63) >> (5 - k % 6)) & 1) {
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 62) throw GraphError("graph6: long form (n > 62) not supported");
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

Graph parse_graph(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\r' || text[i] == '\t')) ++i;
    if (i < text.size() && (text[i] == 'p' || text[i] == 'c') &&
        (i + 1 == text.size() || text[i + 1] == ' ' || text[i + 1] == '\t' || text[i + 1] == '\n')) {
        return from_edge_list(text);
    }
    auto rest = text.substr(i);
    auto nl = rest.find('\n');
    return from_graph6(rest.substr(0, nl));
}

}  // namespace improper
