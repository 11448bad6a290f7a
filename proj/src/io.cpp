#include "msc/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace msc {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        ++number;
        std::string line = text.substr(pos, end - pos);
        pos = end + 1;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            if (pos > text.size()) break;
            continue;
        }
        out.push_back({number, line});
        if (end == text.size()) break;
    }
    return out;
}

long long parse_int_token(const std::string& tok, int line) {
    if (tok.empty()) throw InvalidInput("expected integer at line " + std::to_string(line));
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InvalidInput("expected integer, got '" + tok + "' at line " + std::to_string(line));
    if (tok.size() > 12) throw InvalidInput("integer too large at line " + std::to_string(line));
    return std::stoll(tok);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw InvalidInput("empty input: missing \"n m\" header");
    auto header = tokens_of(lines[0].text);
    if (header.size() != 2)
        throw InvalidInput("malformed header at line " + std::to_string(lines[0].number) +
                           ": expected \"n m\"");
    long long n = parse_int_token(header[0], lines[0].number);
    long long m = parse_int_token(header[1], lines[0].number);
    if (static_cast<long long>(lines.size()) - 1 < m)
        throw InvalidInput("expected " + std::to_string(m) + " edge lines, found " +
                           std::to_string(lines.size() - 1));
    if (static_cast<long long>(lines.size()) - 1 > m)
        throw InvalidInput("unexpected content at line " +
                           std::to_string(lines[static_cast<size_t>(m) + 1].number));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 1; i <= m; ++i) {
        const auto& ln = lines[static_cast<size_t>(i)];
        auto toks = tokens_of(ln.text);
        if (toks.size() != 2)
            throw InvalidInput("malformed edge at line " + std::to_string(ln.number) +
                               ": expected \"u v\"");
        long long u = parse_int_token(toks[0], ln.number);
        long long v = parse_int_token(toks[1], ln.number);
        if (u >= n || v >= n)
            throw InvalidInput("vertex id out of range at line " + std::to_string(ln.number));
        if (u == v) throw InvalidInput("self-loop at line " + std::to_string(ln.number));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.empty()) throw InvalidInput("empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126) throw InvalidInput("invalid graph6 character");
    if (s[0] == 126) throw InvalidInput("graph6 sizes above 62 are not supported");
    int n = s[0] - 63;
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    long long need = (bits + 5) / 6;
    if (static_cast<long long>(s.size()) - 1 < need)
        throw InvalidInput("truncated graph6 bit field");
    if (static_cast<long long>(s.size()) - 1 > need)
        throw InvalidInput("unexpected trailing graph6 characters");
    std::vector<std::pair<int, int>> edges;
    long long idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++idx) {
            int chunk = s[static_cast<size_t>(1 + idx / 6)] - 63;
            if ((chunk >> (5 - idx % 6)) & 1) edges.emplace_back(u, v);
        }
    return Graph::from_edge_list(n, edges);
}

std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw InvalidInput("graph6 sizes above 62 are not supported");
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    std::string s(1 + static_cast<size_t>((bits + 5) / 6), static_cast<char>(63));
    s[0] = static_cast<char>(63 + n);
    long long idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if (g.has_edge(u, v)) s[static_cast<size_t>(1 + idx / 6)] += static_cast<char>(1 << (5 - idx % 6));
    return s;
}

WeightMap parse_weights(const std::string& text, int n) {
    struct Entry {
        int vertex;
        long long whole;
        std::string frac;
        int line;
    };
    auto lines = content_lines(text);
    std::vector<Entry> entries;
    size_t max_frac = 0;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (const auto& ln : lines) {
        auto toks = tokens_of(ln.text);
        if (toks.size() != 2)
            throw InvalidInput("malformed weight line " + std::to_string(ln.number) +
                               ": expected \"v w\"");
        long long v = parse_int_token(toks[0], ln.number);
        if (v >= n)
            throw InvalidInput("vertex id out of range at line " + std::to_string(ln.number));
        if (seen[static_cast<size_t>(v)])
            throw InvalidInput("duplicate weight for vertex " + std::to_string(v) + " at line " +
                               std::to_string(ln.number));
        seen[static_cast<size_t>(v)] = 1;
        const std::string& w = toks[1];
        size_t dot = w.find('.');
        std::string whole = dot == std::string::npos ? w : w.substr(0, dot);
        std::string frac = dot == std::string::npos ? "" : w.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw InvalidInput("expected decimal weight at line " + std::to_string(ln.number));
        for (char c : whole + frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw InvalidInput("expected decimal weight, got '" + w + "' at line " +
                                   std::to_string(ln.number));
        if (frac.size() > 9)
            throw InvalidInput("weight has more than 9 decimal places at line " +
                               std::to_string(ln.number));
        long long whole_v = whole.empty() ? 0 : parse_int_token(whole, ln.number);
        bool positive = whole_v > 0;
        for (char c : frac) positive |= c != '0';
        if (!positive) throw InvalidInput("weight must be positive at line " + std::to_string(ln.number));
        max_frac = std::max(max_frac, frac.size());
        entries.push_back({static_cast<int>(v), whole_v, frac, ln.number});
    }
    long long scale = 1;
    for (size_t i = 0; i < max_frac; ++i) scale *= 10;
    WeightMap map(n, scale);
    for (const auto& e : entries) {
        long long frac_v = 0;
        for (char c : e.frac) frac_v = frac_v * 10 + (c - '0');
        for (size_t i = e.frac.size(); i < max_frac; ++i) frac_v *= 10;
        if (e.whole > 4000000000000000000LL / scale)
            throw InvalidInput("weight too large at line " + std::to_string(e.line));
        map.set_scaled(e.vertex, e.whole * scale + frac_v);
    }
    return map;
}

} // namespace msc
