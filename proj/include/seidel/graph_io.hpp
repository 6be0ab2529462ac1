#pragma once

// Text formats for looped graphs.
//
// graph6 (McKay) carries the simple graph. Loops are not expressible in
// graph6, so an optional sidecar ":v1,v2,..." listing 0-based loop vertices
// may follow the graph6 body, e.g. "A_:0" is K_2 with a loop at vertex 0.
//
// The edge-list format is line based:
//   n <count>
//   <u> <v>        one edge per line, 0-based
//   loop <v>       one loop per line
// Blank lines and lines starting with '#' are ignored.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seidel/looped_graph.hpp"

namespace seidel {

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class GraphFormat { graph6, edgelist };

struct GraphDocument {
    std::string source;
    LoopedGraph graph;
    GraphFormat format = GraphFormat::graph6;
};

namespace detail {

inline std::string_view trim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::size_t parse_index(std::string_view token, const char* what) {
    std::size_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last)
        throw ParseError(std::string(what) + ": expected a non-negative integer, got '" + std::string(token) + "'");
    return value;
}

inline void append_graph6_size(std::string& out, std::size_t n) {
    auto put_bits = [&](std::uint64_t value, int groups) {
        for (int k = groups - 1; k >= 0; --k) out.push_back(static_cast<char>(63 + ((value >> (6 * k)) & 0x3F)));
    };
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        put_bits(n, 3);
    } else {
        out += "~~";
        put_bits(n, 6);
    }
}

} // namespace detail

inline LoopedGraph parse_graph6(std::string_view text) {
    text = detail::trim_view(text);
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());

    std::string_view body = text;
    std::string_view sidecar;
    bool has_sidecar = false;
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
        body = text.substr(0, colon);
        sidecar = text.substr(colon + 1);
        has_sidecar = true;
    }

    for (char ch : body)
        if (static_cast<unsigned char>(ch) < 63 || static_cast<unsigned char>(ch) > 126)
            throw ParseError("graph6: byte " + std::to_string(static_cast<unsigned char>(ch)) +
                             " outside [63,126]");
    if (body.empty()) throw ParseError("graph6: empty input");

    auto byte = [&](std::size_t i) { return static_cast<std::uint64_t>(static_cast<unsigned char>(body[i]) - 63); };
    std::size_t n = 0;
    std::size_t pos = 0;
    if (body[0] != '~') {
        n = static_cast<std::size_t>(byte(0));
        pos = 1;
    } else if (body.size() >= 2 && body[1] == '~') {
        if (body.size() < 8) throw ParseError("graph6: truncated 8-byte size field");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
        pos = 8;
    } else {
        if (body.size() < 4) throw ParseError("graph6: truncated 4-byte size field");
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | byte(i);
        pos = 4;
    }

    const std::size_t bits = LoopedGraph::pair_count(n);
    const std::size_t expected = (bits + 5) / 6;
    if (body.size() - pos != expected)
        throw ParseError("graph6: malformed length: order " + std::to_string(n) + " needs " +
                         std::to_string(expected) + " data bytes, found " + std::to_string(body.size() - pos));

    LoopedGraph g(n);
    for (std::size_t k = 0; k < expected * 6; ++k) {
        const bool bit = ((byte(pos + k / 6) >> (5 - k % 6)) & 1U) != 0;
        if (k >= bits) {
            if (bit) throw ParseError("graph6: non-zero padding bits");
            continue;
        }
        if (bit) g.set_pair_bit(k, true);
    }

    if (has_sidecar) {
        VertexSet loops(n);
        std::string_view rest = sidecar;
        while (!rest.empty()) {
            auto comma = rest.find(',');
            auto token = detail::trim_view(rest.substr(0, comma));
            const auto v = detail::parse_index(token, "graph6 loop sidecar");
            if (v >= n)
                throw ParseError("graph6 loop sidecar: vertex " + std::to_string(v) + " out of range for order " +
                                 std::to_string(n));
            loops.insert(v);
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
            if (rest.empty()) throw ParseError("graph6 loop sidecar: trailing comma");
        }
        g.set_loops(loops);
    }
    return g;
}

// Canonical graph6 text; the loop sidecar is appended only when W is non-empty.
inline std::string emit_graph6(const LoopedGraph& g) {
    std::string out;
    detail::append_graph6_size(out, g.order());
    const std::size_t bits = LoopedGraph::pair_count(g.order());
    for (std::size_t k = 0; k < bits; k += 6) {
        unsigned value = 0;
        for (std::size_t b = 0; b < 6; ++b) {
            value <<= 1;
            if (k + b < bits && g.pair_bit(k + b)) value |= 1U;
        }
        out.push_back(static_cast<char>(63 + value));
    }
    if (g.loop_count() > 0) {
        out.push_back(':');
        bool first = true;
        for (auto v : g.loops().members()) {
            if (!first) out.push_back(',');
            out += std::to_string(v);
            first = false;
        }
    }
    return out;
}

inline LoopedGraph parse_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<LoopedGraph> g;
    VertexSet loops;
    while (std::getline(in, line)) {
        ++line_no;
        auto view = detail::trim_view(line);
        if (view.empty() || view.front() == '#') continue;
        std::istringstream fields{std::string(view)};
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        auto where = [&] { return "edgelist line " + std::to_string(line_no); };

        if (!g) {
            if (tok.size() != 2 || tok[0] != "n") throw ParseError(where() + ": expected 'n <count>' header");
            const auto n = detail::parse_index(tok[1], "edgelist header");
            g.emplace(n);
            loops = VertexSet(n);
            continue;
        }
        const auto n = g->order();
        if (tok.size() == 2 && tok[0] == "loop") {
            const auto v = detail::parse_index(tok[1], "edgelist loop");
            if (v >= n) throw ParseError(where() + ": loop vertex " + std::to_string(v) + " out of range");
            loops.insert(v);
        } else if (tok.size() == 2) {
            const auto u = detail::parse_index(tok[0], "edgelist edge");
            const auto v = detail::parse_index(tok[1], "edgelist edge");
            if (u >= n || v >= n) throw ParseError(where() + ": endpoint out of range");
            if (u == v) throw ParseError(where() + ": self-pair; use 'loop " + std::to_string(u) + "'");
            g->add_edge(u, v);
        } else {
            throw ParseError(where() + ": malformed line '" + std::string(view) + "'");
        }
    }
    if (!g) throw ParseError("edgelist: missing 'n <count>' header");
    g->set_loops(loops);
    return *g;
}

inline std::string emit_edgelist(const LoopedGraph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    for (auto v : g.loops().members()) out += "loop " + std::to_string(v) + "\n";
    return out;
}

// Edge lists start with the "n" header; anything else is read as graph6.
inline GraphFormat detect_format(std::string_view text) {
    auto t = detail::trim_view(text);
    while (t.starts_with('#')) {
        auto nl = t.find('\n');
        if (nl == std::string_view::npos) return GraphFormat::edgelist;
        t = detail::trim_view(t.substr(nl + 1));
    }
    return (t.size() >= 2 && t[0] == 'n' && std::isspace(static_cast<unsigned char>(t[1]))) ? GraphFormat::edgelist
                                                                                              : GraphFormat::graph6;
}

inline GraphDocument parse_graph_document(std::string text) {
    GraphDocument doc;
    doc.format = detect_format(text);
    doc.graph = doc.format == GraphFormat::graph6 ? parse_graph6(text) : parse_edgelist(text);
    doc.source = std::move(text);
    return doc;
}

} // namespace seidel
