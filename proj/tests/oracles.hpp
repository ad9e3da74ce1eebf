#pragma once

// Test-only oracles. Each one recomputes a quantity by a route that shares no code
// with the library path it checks: subset enumeration instead of pivoting search,
// textbook fraction Gauss elimination instead of Bareiss, and solution counting
// instead of RREF over GF(p).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "wcdim/exactlin.hpp"
#include "wcdim/graph.hpp"

namespace oracle {

using wcdim::Graph;
using wcdim::Vertex;
using wcdim::VertexSet;

// All maximal independent sets by checking every subset; n <= 20.
inline std::vector<VertexSet> brute_force_mis(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::uint32_t> nbr(n, 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= 1u << v;
        nbr[v] |= 1u << u;
    }
    std::vector<VertexSet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        std::uint32_t covered = mask;
        for (Vertex v = 0; v < n && ok; ++v) {
            if (mask >> v & 1) {
                if (nbr[v] & mask) ok = false;
                covered |= nbr[v];
            }
        }
        if (!ok || covered != (n == 32 ? ~0u : (1u << n) - 1)) continue;
        VertexSet s;
        for (Vertex v = 0; v < n; ++v) {
            if (mask >> v & 1) s.push_back(v);
        }
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Rank over Q by plain Gauss elimination on fractions.
inline std::size_t rational_rank(const wcdim::ExactMatrix& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < a.size(); ++r) {
            if (a[r][c] == 0) continue;
            const mpq_class f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Nullity over GF(p) from the number of solutions of m x = 0, counted over all
// p^cols vectors. Only for tiny matrices.
inline std::size_t counted_nullity(const wcdim::ExactMatrix& m, std::uint64_t p) {
    const std::size_t n = m.cols();
    std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(n));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const mpz_class num = m(r, c).get_num();
            a[r][c] = ((num.get_si() % static_cast<std::int64_t>(p)) + p) % p;
        }
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    std::uint64_t solutions = 0;
    std::vector<std::int64_t> x(n, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = static_cast<std::int64_t>(c % p);
            c /= p;
        }
        bool zero = true;
        for (std::size_t r = 0; r < m.rows() && zero; ++r) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < n; ++i) s += a[r][i] * x[i];
            zero = s % static_cast<std::int64_t>(p) == 0;
        }
        solutions += zero;
    }
    std::size_t nullity = 0;
    while (solutions > 1) {
        solutions /= p;
        ++nullity;
    }
    return nullity;
}

// Weight-sums over the brute-force MIS list all agree, modulo p when p > 0.
inline bool brute_force_weighting(const Graph& g, const std::vector<mpq_class>& w, std::uint64_t p) {
    const auto sets = brute_force_mis(g);
    std::vector<mpq_class> sums;
    for (const auto& s : sets) {
        mpq_class sum = 0;
        for (Vertex v : s) sum += w[v];
        sums.push_back(sum);
    }
    for (const auto& s : sums) {
        const mpq_class d = s - sums.front();
        if (p == 0) {
            if (d != 0) return false;
        } else {
            // d is an integer combination of residues here.
            mpz_class num = d.get_num();
            if (d.get_den() != 1 || num % mpz_class(static_cast<unsigned long>(p)) != 0) return false;
        }
    }
    return true;
}

// Breadth-first girth.
inline std::size_t girth(const Graph& g) {
    std::size_t best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        std::vector<long> dist(g.order(), -1), parent(g.order(), -1);
        std::vector<Vertex> queue{s};
        dist[s] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const Vertex u = queue[qi];
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = static_cast<long>(u);
                    queue.push_back(w);
                } else if (parent[u] != static_cast<long>(w)) {
                    const auto len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

}  // namespace oracle
