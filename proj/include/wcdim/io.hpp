#pragma once

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "families.hpp"
#include "graph.hpp"

// Edge-list graph files:
//
//   # comment
//   n m
//   u v      (m lines, 0-based, whitespace separated)
//
// Blank lines and lines starting with '#' are ignored.
namespace wcdim::io {

namespace detail {

inline bool is_skippable(std::string_view line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string_view::npos || line[first] == '#';
}

inline std::vector<std::size_t> parse_numbers(const std::string& line, std::size_t lineno) {
    std::istringstream is(line);
    std::vector<std::size_t> out;
    std::string tok;
    while (is >> tok) {
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw InputError("line " + std::to_string(lineno) + ": expected a non-negative integer, got '" +
                             tok + "'");
        }
        out.push_back(value);
    }
    return out;
}

}  // namespace detail

inline Graph read_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::size_t n = 0, m = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_skippable(line)) continue;
        const auto nums = detail::parse_numbers(line, lineno);
        if (nums.size() != 2) {
            throw InputError("line " + std::to_string(lineno) + ": expected two integers, got " +
                             std::to_string(nums.size()));
        }
        if (!have_header) {
            n = nums[0];
            m = nums[1];
            have_header = true;
            continue;
        }
        const Vertex u = nums[0], v = nums[1];
        if (edges.size() == m) {
            throw InputError("line " + std::to_string(lineno) + ": more edge lines than the declared " +
                             std::to_string(m));
        }
        if (u >= n || v >= n) {
            throw InputError("line " + std::to_string(lineno) + ": vertex index out of range for n=" +
                             std::to_string(n));
        }
        if (u == v) throw InputError("line " + std::to_string(lineno) + ": self-loop at vertex " + std::to_string(u));
        const Edge key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second) {
            throw InputError("line " + std::to_string(lineno) + ": duplicate edge " + std::to_string(u) + " " +
                             std::to_string(v));
        }
        edges.emplace_back(u, v);
    }
    if (!have_header) throw InputError("line " + std::to_string(lineno) + ": missing 'n m' header");
    if (edges.size() != m) {
        throw InputError("line " + std::to_string(lineno) + ": header declares " + std::to_string(m) +
                         " edges, found " + std::to_string(edges.size()));
    }
    return Graph(n, edges);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    const auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

struct LoadedGraph {
    Graph graph;
    // Family spec in canonical form, or the file path.
    std::string label;
    bool outside_formula_range = false;
};

/// An existing file is read as a graph file; anything else must be a family spec.
inline LoadedGraph load_graph(const std::string& source) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(source, ec)) {
        std::ifstream in(source);
        if (!in) throw InputError("cannot open '" + source + "'");
        try {
            return {read_graph(in), source, false};
        } catch (const InputError& e) {
            throw InputError(source + ": " + e.what());
        }
    }
    families::FamilySpec spec;
    try {
        spec = families::parse_family(source);
    } catch (const InputError& e) {
        if (source.find(':') == std::string::npos && source.find_first_of("/.") != std::string::npos) {
            throw InputError("'" + source + "' is neither a readable graph file nor a family spec");
        }
        throw;
    }
    auto built = families::build(spec);
    return {std::move(built.graph), families::to_string(spec), built.outside_formula_range};
}

}  // namespace wcdim::io
