#pragma once

#include <array>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace wcdim::families {

inline Graph complete(std::size_t n) {
    if (n == 0) throw InputError("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

inline Graph empty_graph(std::size_t n) {
    if (n == 0) throw InputError("empty graph needs n >= 1");
    return Graph(n);
}

/// Block i occupies a contiguous index range, blocks in input order.
inline Graph complete_multipartite(std::span<const std::size_t> sizes) {
    if (sizes.empty()) throw InputError("complete multipartite graph needs at least one block");
    std::vector<Vertex> block_of;
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        if (sizes[b] == 0) throw InputError("multipartite block sizes must be positive");
        block_of.insert(block_of.end(), sizes[b], b);
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < block_of.size(); ++u) {
        for (Vertex v = u + 1; v < block_of.size(); ++v) {
            if (block_of[u] != block_of[v]) edges.emplace_back(u, v);
        }
    }
    return Graph(block_of.size(), edges);
}

inline Graph complete_multipartite(std::initializer_list<std::size_t> sizes) {
    return complete_multipartite(std::span<const std::size_t>(sizes.begin(), sizes.size()));
}

/// (n mod r) blocks of ceil(n/r) followed by r - (n mod r) blocks of floor(n/r).
inline std::vector<std::size_t> turan_block_sizes(std::size_t n, std::size_t r) {
    if (r == 0 || r > n) {
        throw InputError("Turan graph needs 1 <= r <= n, got n=" + std::to_string(n) +
                         " r=" + std::to_string(r));
    }
    const std::size_t big = n % r;
    std::vector<std::size_t> sizes(big, n / r + 1);
    sizes.insert(sizes.end(), r - big, n / r);
    return sizes;
}

inline Graph turan(std::size_t n, std::size_t r) {
    return complete_multipartite(turan_block_sizes(n, r));
}

/// K_{n,n} minus a perfect matching: a_i = i, b_i = n + i, a_i ~ b_j iff i != j.
/// Defined for n >= 1; closed forms assume n >= 3.
inline Graph crown(std::size_t n) {
    if (n == 0) throw InputError("crown graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) {
            if (i != j) edges.emplace_back(i, n + j);
        }
    }
    return Graph(2 * n, edges);
}

inline Graph path(std::size_t n) {
    if (n == 0) throw InputError("path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

inline Graph cycle(std::size_t n) {
    if (n < 3) throw InputError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

/// Rim 0..2n-1 as a cycle, hub 2n joined to the even rim vertices.
inline Graph gear(std::size_t n) {
    if (n < 3) throw InputError("gear graph needs n >= 3");
    const std::size_t rim = 2 * n;
    std::vector<Edge> edges;
    for (Vertex i = 0; i < rim; ++i) edges.emplace_back(i, (i + 1) % rim);
    for (Vertex i = 0; i < rim; i += 2) edges.emplace_back(i, rim);
    return Graph(rim + 1, edges);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- 5+i.
inline Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return Graph(10, edges);
}

enum class Kind { complete, empty, complete_multipartite, turan, crown, path, cycle, gear, petersen };

struct KindInfo {
    Kind kind;
    std::string_view token;
    std::string_view usage;
    std::string_view summary;
};

inline constexpr std::array<KindInfo, 9> kind_table{{
    {Kind::complete, "complete", "complete:N", "complete graph K_N"},
    {Kind::empty, "empty", "empty:N", "edgeless graph on N vertices"},
    {Kind::complete_multipartite, "kpartite", "kpartite:N1,N2,...", "complete multipartite graph"},
    {Kind::turan, "turan", "turan:N,R", "Turan graph T(N,R)"},
    {Kind::crown, "crown", "crown:N", "K_{N,N} minus a perfect matching"},
    {Kind::path, "path", "path:N", "path on N vertices"},
    {Kind::cycle, "cycle", "cycle:N", "cycle on N vertices"},
    {Kind::gear, "gear", "gear:N", "gear graph on 2N+1 vertices"},
    {Kind::petersen, "petersen", "petersen", "Petersen graph"},
}};

inline std::string_view token(Kind kind) {
    for (const auto& info : kind_table) {
        if (info.kind == kind) return info.token;
    }
    return "?";
}

inline std::optional<Kind> kind_from_token(std::string_view tok) {
    for (const auto& info : kind_table) {
        if (info.token == tok) return info.kind;
    }
    return std::nullopt;
}

struct FamilySpec {
    Kind kind = Kind::complete;
    std::vector<std::size_t> params;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Canonical textual form, e.g. "crown:5", "kpartite:2,3,4", "petersen".
inline std::string to_string(const FamilySpec& spec) {
    std::string out(token(spec.kind));
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        out += (i == 0 ? ':' : ',');
        out += std::to_string(spec.params[i]);
    }
    return out;
}

namespace detail {

inline void expect_arity(const FamilySpec& spec, std::size_t arity) {
    if (spec.params.size() != arity) {
        throw InputError("family '" + std::string(token(spec.kind)) + "' expects " +
                         std::to_string(arity) + " parameter(s), got " +
                         std::to_string(spec.params.size()));
    }
}

}  // namespace detail

/// Parses `kind:p1,p2,...`. Throws InputError on unknown kinds or malformed numbers.
inline FamilySpec parse_family(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view tok = text.substr(0, colon);
    const auto kind = kind_from_token(tok);
    if (!kind) throw InputError("unknown graph family '" + std::string(tok) + "'");

    FamilySpec spec{*kind, {}};
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (true) {
            const auto comma = rest.find(',');
            const std::string_view item = rest.substr(0, comma);
            std::size_t value = 0;
            const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
                throw InputError("bad family parameter '" + std::string(item) + "' in '" +
                                 std::string(text) + "'");
            }
            spec.params.push_back(value);
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }

    switch (spec.kind) {
        case Kind::petersen: detail::expect_arity(spec, 0); break;
        case Kind::turan: detail::expect_arity(spec, 2); break;
        case Kind::complete_multipartite:
            if (spec.params.empty()) throw InputError("kpartite needs at least one block size");
            break;
        default: detail::expect_arity(spec, 1); break;
    }
    return spec;
}

struct FamilyGraph {
    Graph graph;
    // Parameters are constructible but below the range the closed forms cover.
    bool outside_formula_range = false;
};

inline FamilyGraph build(const FamilySpec& spec) {
    const auto& p = spec.params;
    switch (spec.kind) {
        case Kind::complete: detail::expect_arity(spec, 1); return {complete(p[0])};
        case Kind::empty: detail::expect_arity(spec, 1); return {empty_graph(p[0])};
        case Kind::complete_multipartite: return {complete_multipartite(p)};
        case Kind::turan: detail::expect_arity(spec, 2); return {turan(p[0], p[1])};
        case Kind::crown: detail::expect_arity(spec, 1); return {crown(p[0]), p[0] < 3};
        case Kind::path: detail::expect_arity(spec, 1); return {path(p[0])};
        case Kind::cycle: detail::expect_arity(spec, 1); return {cycle(p[0])};
        case Kind::gear: detail::expect_arity(spec, 1); return {gear(p[0])};
        case Kind::petersen: detail::expect_arity(spec, 0); return {petersen()};
    }
    throw InputError("unhandled family kind");
}

}  // namespace wcdim::families
