#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace wcdim {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on vertices 0..n-1 stored as sorted neighbor lists.
///
/// Immutable once built; every construction below returns a new graph.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate pairs (in either orientation)
    /// collapse to one edge. Throws InputError on an out-of-range index or a loop.
    Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
        for (auto [u, v] : edges) {
            if (u >= n || v >= n) {
                throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") out of range for n=" + std::to_string(n));
            }
            if (u == v) {
                throw InputError("self-loop at vertex " + std::to_string(u));
            }
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nbrs : adj_) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        }
    }

    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    explicit Graph(std::size_t n) : adj_(n) {}

    std::size_t order() const noexcept { return adj_.size(); }

    std::size_t size() const noexcept {
        std::size_t twice = 0;
        for (const auto& nbrs : adj_) twice += nbrs.size();
        return twice / 2;
    }

    const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }

    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

    bool adjacent(Vertex u, Vertex v) const {
        const auto& nbrs = adj_.at(u);
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < adj_.size(); ++u) {
            for (Vertex v : adj_[u]) {
                if (u < v) out.emplace_back(u, v);
            }
        }
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> adj_;
};

/// Compact reproducible descriptor, e.g. "n=4;0-1,1-2,2-3,0-3".
inline std::string describe(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.order() << ';';
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first) os << ',';
        os << u << '-' << v;
        first = false;
    }
    return os.str();
}

inline Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

/// Vertices of h are shifted by |V(g)|.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    const std::size_t offset = g.order();
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + offset, v + offset);
    return Graph(offset + h.order(), edges);
}

/// Image of g under the vertex map v -> perm[v]. perm must be a permutation of 0..n-1.
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order()) throw InputError("permutation length mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (Vertex p : perm) {
        if (p >= perm.size() || seen[p]) throw InputError("not a permutation");
        seen[p] = true;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

/// A blown-up graph together with origin[x], the input vertex that x descends from.
struct TrackedGraph {
    Graph graph;
    std::vector<Vertex> origin;
};

namespace detail {

// Blows up vertex v of g into t twins and applies the same relabeling to `origin`.
inline TrackedGraph blowup_tracked(const Graph& g, std::vector<Vertex> origin, Vertex v, std::size_t t) {
    const std::size_t n = g.order();
    if (v >= n) throw InputError("blowup vertex " + std::to_string(v) + " out of range");
    if (t == 0) throw InputError("blowup multiplicity must be positive");

    // v moves to the last slot n-1 and the old last vertex takes v's index.
    const Vertex last = n - 1;
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), Vertex{0});
    std::swap(label[v], label[last]);

    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) edges.emplace_back(label[a], label[b]);
    std::swap(origin[v], origin[last]);

    // Twins n..n+t-2 copy the neighborhood of v (now at n-1).
    const Vertex twin_origin = origin[last];
    for (std::size_t c = 1; c < t; ++c) {
        const Vertex twin = last + c;
        for (Vertex w : g.neighbors(v)) edges.emplace_back(twin, label[w]);
        origin.push_back(twin_origin);
    }
    return {Graph(n + t - 1, edges), std::move(origin)};
}

}  // namespace detail

/// Replaces v by an independent set of t twins sharing v's neighborhood.
///
/// Labeling: v is swapped with the last vertex n-1, which keeps that slot, and the
/// extra twins are appended as n..n+t-2. All other labels are unchanged.
inline Graph blowup(const Graph& g, Vertex v, std::size_t t) {
    std::vector<Vertex> origin(g.order());
    std::iota(origin.begin(), origin.end(), Vertex{0});
    return detail::blowup_tracked(g, std::move(origin), v, t).graph;
}

/// Blows up every original vertex i by ts[i], processing originals in ascending order.
inline TrackedGraph multi_blowup_tracked(const Graph& g, std::span<const std::size_t> ts) {
    const std::size_t n = g.order();
    if (ts.size() != n) {
        throw InputError("multi_blowup expects " + std::to_string(n) + " multiplicities, got " +
                         std::to_string(ts.size()));
    }
    for (std::size_t t : ts) {
        if (t == 0) throw InputError("blowup multiplicity must be positive");
    }
    TrackedGraph cur{g, std::vector<Vertex>(n)};
    std::iota(cur.origin.begin(), cur.origin.end(), Vertex{0});
    for (Vertex i = 0; i < n; ++i) {
        // Each unprocessed original occupies exactly one slot; processed ones only
        // have twins, whose origin is < i.
        const auto at = static_cast<Vertex>(
            std::find(cur.origin.begin(), cur.origin.end(), i) - cur.origin.begin());
        cur = detail::blowup_tracked(cur.graph, std::move(cur.origin), at, ts[i]);
    }
    return cur;
}

inline Graph multi_blowup(const Graph& g, std::span<const std::size_t> ts) {
    return multi_blowup_tracked(g, ts).graph;
}

/// Lexicographic product; vertex (u, w) is flattened to u * |V(h)| + w.
inline Graph lex_product(const Graph& g, const Graph& h) {
    const std::size_t a = g.order();
    const std::size_t b = h.order();
    std::vector<Edge> edges;
    for (auto [u, u2] : g.edges()) {
        for (Vertex w = 0; w < b; ++w) {
            for (Vertex w2 = 0; w2 < b; ++w2) edges.emplace_back(u * b + w, u2 * b + w2);
        }
    }
    for (Vertex u = 0; u < a; ++u) {
        for (auto [w, w2] : h.edges()) edges.emplace_back(u * b + w, u * b + w2);
    }
    return Graph(a * b, edges);
}

/// Exact rational edge probability num/den.
class Probability {
public:
    Probability(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
        if (den == 0 || num > den) {
            throw InputError("edge probability " + std::to_string(num) + "/" + std::to_string(den) +
                             " outside [0,1]");
        }
    }
    std::uint64_t num() const noexcept { return num_; }
    std::uint64_t den() const noexcept { return den_; }

private:
    std::uint64_t num_;
    std::uint64_t den_;
};

/// G(n, p) on the mt19937_64 stream seeded by `seed`, pairs visited in lexicographic order.
inline Graph random_graph(std::size_t n, Probability p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            // Raw engine output keeps the stream identical across standard libraries.
            if (rng() % p.den() < p.num()) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

}  // namespace wcdim
