#pragma once

// Plain-text instance formats.
//
// Graph:       "n m", then m lines "u v" (0-based). Self-loops and duplicate
//              edges are rejected.
// Hypergraph:  "n m", then m lines, each the space-separated vertices of one
//              edge. Line order defines edge indices.
// Sequence:    one line of space-separated vertex indices.
// Provenance:  one line "<index> <tag>" per gadget vertex.
//
// Lines whose first non-blank character is '#' and blank lines are skipped
// in all input formats.

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "hypergraph.hpp"
#include "reductions.hpp"

namespace grundy {

namespace detail {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-comment, non-blank line; false at end of input.
    bool next(std::string& line)
    {
        while (std::getline(in_, line)) {
            ++line_no_;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') {
                continue;
            }
            return true;
        }
        return false;
    }

    std::size_t line_no() const noexcept { return line_no_; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError("line " + std::to_string(line_no_) + ": " + what);
    }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

// Whitespace-separated unsigned integers; anything else is an error.
inline std::vector<std::size_t> parse_numbers(std::string_view line, const LineReader& reader)
{
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
            ++pos;
        }
        if (pos == line.size()) {
            break;
        }
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
        if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' &&
                                  *ptr != '\t' && *ptr != '\r')) {
            reader.fail("expected non-negative integers, got '" + std::string(line) + "'");
        }
        out.push_back(value);
        pos = static_cast<std::size_t>(ptr - line.data());
    }
    return out;
}

inline std::pair<std::size_t, std::size_t> read_header(LineReader& reader, const char* what)
{
    std::string line;
    if (!reader.next(line)) {
        throw InputError(std::string("empty ") + what + " file");
    }
    const auto header = parse_numbers(line, reader);
    if (header.size() != 2) {
        reader.fail(std::string(what) + " header must be 'n m'");
    }
    return {header[0], header[1]};
}

inline void expect_end(LineReader& reader, std::size_t m)
{
    std::string line;
    if (reader.next(line)) {
        reader.fail("more than the declared " + std::to_string(m) + " entries");
    }
}

inline std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    return in;
}

inline std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write '" + path + "'");
    }
    return out;
}

}  // namespace detail

inline Graph read_graph(std::istream& in)
{
    detail::LineReader reader(in);
    const auto [n, m] = detail::read_header(reader, "graph");
    std::vector<Edge> edges;
    edges.reserve(m);
    std::string line;
    for (std::size_t i = 0; i < m; ++i) {
        if (!reader.next(line)) {
            throw InputError("graph declares " + std::to_string(m) + " edges but has " +
                             std::to_string(i));
        }
        const auto uv = detail::parse_numbers(line, reader);
        if (uv.size() != 2) {
            reader.fail("edge line must be 'u v'");
        }
        if (uv[0] >= n || uv[1] >= n) {
            reader.fail("vertex index out of range (n=" + std::to_string(n) + ")");
        }
        edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
    }
    detail::expect_end(reader, m);
    return Graph::from_edges(n, edges);
}

inline void write_graph(std::ostream& out, const Graph& g)
{
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

inline Hypergraph read_hypergraph(std::istream& in)
{
    detail::LineReader reader(in);
    const auto [n, m] = detail::read_header(reader, "hypergraph");
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(m);
    std::string line;
    for (std::size_t i = 0; i < m; ++i) {
        if (!reader.next(line)) {
            throw InputError("hypergraph declares " + std::to_string(m) + " edges but has " +
                             std::to_string(i));
        }
        auto& e = edges.emplace_back();
        for (const auto v : detail::parse_numbers(line, reader)) {
            if (v >= n) {
                reader.fail("vertex index out of range (n=" + std::to_string(n) + ")");
            }
            e.push_back(static_cast<Vertex>(v));
        }
    }
    detail::expect_end(reader, m);
    return Hypergraph(n, std::move(edges));
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& h)
{
    out << h.size() << ' ' << h.edge_count() << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            out << (i ? " " : "") << e[i];
        }
        out << '\n';
    }
}

// Parentheses and commas are accepted as separators, so "(0, 2)" reads as 0 2.
inline std::vector<Vertex> read_sequence(std::istream& in)
{
    detail::LineReader reader(in);
    std::string line;
    if (!reader.next(line)) {
        return {};
    }
    for (char& c : line) {
        if (c == '(' || c == ')' || c == ',') {
            c = ' ';
        }
    }
    std::vector<Vertex> out;
    for (const auto v : detail::parse_numbers(line, reader)) {
        out.push_back(static_cast<Vertex>(v));
    }
    std::string extra;
    if (reader.next(extra)) {
        reader.fail("sequence must be a single line");
    }
    return out;
}

inline void write_sequence(std::ostream& out, std::span<const Vertex> seq)
{
    for (std::size_t i = 0; i < seq.size(); ++i) {
        out << (i ? " " : "") << seq[i];
    }
    out << '\n';
}

inline void write_provenance(std::ostream& out, const ReductionMap& map)
{
    for (std::size_t v = 0; v < map.role_of.size(); ++v) {
        out << v << ' ' << role_tag(map.role_of[v]) << '\n';
    }
}

inline Graph load_graph(const std::string& path)
{
    auto in = detail::open_input(path);
    return read_graph(in);
}

inline Hypergraph load_hypergraph(const std::string& path)
{
    auto in = detail::open_input(path);
    return read_hypergraph(in);
}

inline std::vector<Vertex> load_sequence(const std::string& path)
{
    auto in = detail::open_input(path);
    return read_sequence(in);
}

inline void save_graph(const std::string& path, const Graph& g)
{
    auto out = detail::open_output(path);
    write_graph(out, g);
}

inline void save_hypergraph(const std::string& path, const Hypergraph& h)
{
    auto out = detail::open_output(path);
    write_hypergraph(out, h);
}

inline void save_provenance(const std::string& path, const ReductionMap& map)
{
    auto out = detail::open_output(path);
    write_provenance(out, map);
}

}  // namespace grundy
