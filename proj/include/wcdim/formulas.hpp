#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

// Closed-form well-covered dimensions. Pure integer arithmetic; nothing here
// enumerates independent sets or touches a matrix.
namespace wcdim::formula {

struct Prediction {
    // Signed so that a formula evaluated outside its valid range can be reported
    // as-is instead of wrapped around.
    std::int64_t value = 0;
    std::string source;
    std::vector<std::string> conditions;

    friend bool operator==(const Prediction&, const Prediction&) = default;
};

namespace detail {

inline std::int64_t to_signed(std::size_t x) {
    return static_cast<std::int64_t>(x);
}

}  // namespace detail

inline Prediction disjoint_union(std::size_t d1, std::size_t d2) {
    return {detail::to_signed(d1 + d2), "union-additivity", {}};
}

inline Prediction complete(std::size_t n) {
    if (n == 0) throw InputError("complete graph needs n >= 1");
    return {1, "complete-graph", {}};
}

inline Prediction empty(std::size_t n) {
    if (n == 0) throw InputError("empty graph needs n >= 1");
    return {detail::to_signed(n), "empty-graph", {}};
}

inline Prediction petersen() {
    return {0, "petersen-example", {}};
}

/// n if char(F) = p > 0 divides n - 2, else n - 1. Requires n >= 3.
inline Prediction crown(std::size_t n, const FieldSpec& f) {
    if (n < 3) throw HypothesisError("crown formula requires n >= 3, got " + std::to_string(n));
    const std::uint64_t p = f.characteristic();
    if (p != 0 && (n - 2) % p == 0) {
        return {detail::to_signed(n), "crown-formula", {"p | n-2"}};
    }
    return {detail::to_signed(n - 1), "crown-formula", {p == 0 ? "char 0" : "p does not divide n-2"}};
}

/// Sum of block sizes minus (k - 1).
inline Prediction complete_multipartite(std::span<const std::size_t> sizes) {
    if (sizes.empty()) throw InputError("multipartite formula needs at least one block");
    std::size_t total = 0;
    for (std::size_t s : sizes) {
        if (s == 0) throw InputError("multipartite block sizes must be positive");
        total += s;
    }
    return {detail::to_signed(total) - detail::to_signed(sizes.size() - 1), "multipartite-formula", {}};
}

inline Prediction turan(std::size_t n, std::size_t r) {
    if (r == 0 || r > n) {
        throw InputError("Turan formula needs 1 <= r <= n, got n=" + std::to_string(n) +
                         " r=" + std::to_string(r));
    }
    const std::size_t rem = n % r;
    const std::size_t ceil_q = (n + r - 1) / r;
    const std::size_t floor_q = n / r;
    const std::int64_t value = detail::to_signed(rem * ceil_q + (r - rem) * floor_q) - detail::to_signed(r - 1);
    std::vector<std::string> conditions;
    if (rem == 0) conditions.push_back("r | n");
    return {value, "turan-formula", conditions};
}

/// 1 for n in {1, 2}, 2 for n >= 3.
inline Prediction path(std::size_t n) {
    if (n == 0) throw InputError("path formula needs n >= 1");
    return {n <= 2 ? 1 : 2, "path-formula", {n <= 2 ? "n <= 2" : "n >= 3"}};
}

inline Prediction cycle(std::size_t n) {
    if (n < 3) throw InputError("cycle formula needs n >= 3");
    if (n >= 8) return {0, "cycle-formula", {"n >= 8"}};
    if (n == 4) return {3, "cycle-formula", {"n = 4"}};
    if (n == 6) return {2, "cycle-formula", {"n = 6"}};
    return {1, "cycle-formula", {"n in {3,5,7}"}};
}

inline Prediction gear(std::size_t n) {
    if (n < 3) throw InputError("gear formula needs n >= 3");
    return {n == 3 ? 3 : 0, "gear-formula", {n == 3 ? "n = 3" : "n > 3"}};
}

/// Single-vertex blowup: m + t - 1.
inline Prediction blowup(std::size_t m, std::size_t t) {
    if (t == 0) throw InputError("blowup multiplicity must be positive");
    return {detail::to_signed(m + t) - 1, "blowup-formula", {}};
}

/// (m - n) + sum of the multiplicities, n = number of base vertices.
inline Prediction multi_blowup(std::size_t m, std::size_t n, std::span<const std::size_t> ts) {
    if (ts.size() != n) throw InputError("multi_blowup formula expects one multiplicity per vertex");
    std::size_t total = 0;
    for (std::size_t t : ts) {
        if (t == 0) throw InputError("blowup multiplicity must be positive");
        total += t;
    }
    return {detail::to_signed(m) - detail::to_signed(n) + detail::to_signed(total), "multi-blowup-formula", {}};
}

/// Product with an edgeless graph on t vertices: m + n (t - 1).
inline Prediction lex_blowup(std::size_t m, std::size_t n_vertices, std::size_t t) {
    if (t == 0) throw InputError("lex blowup needs t >= 1");
    return {detail::to_signed(m + n_vertices * (t - 1)), "lex-empty-formula", {}};
}

/// Lexicographic product G.H with |V(G)| = a, |V(H)| = b, wcdim(G) = n, wcdim(H) = m,
/// i MIS in H and j MIS in G:
///   nb + am - nm, plus (n - a) when i = b - m + 1, plus (m - b) when j = a - n + 1.
inline Prediction lex(std::size_t a, std::size_t b, std::size_t n, std::size_t m, std::size_t i, std::size_t j) {
    if (a == 0 || b == 0) throw InputError("lex formula needs nonempty factors");
    if (n > a || m > b) throw InputError("lex formula needs wcdim <= vertex count");
    if (i == 0 || j == 0) throw InputError("lex formula needs at least one MIS per factor");
    const auto sa = detail::to_signed(a), sb = detail::to_signed(b);
    const auto sn = detail::to_signed(n), sm = detail::to_signed(m);
    std::int64_t value = sn * sb + sa * sm - sn * sm;
    std::vector<std::string> conditions;
    if (detail::to_signed(i) == sb - sm + 1) {
        value += sn - sa;
        conditions.push_back("i = b-m+1");
    }
    if (detail::to_signed(j) == sa - sn + 1) {
        value += sm - sb;
        conditions.push_back("j = a-n+1");
    }
    return {value, "lex-case-table", conditions};
}

/// Predicted rank of C, the first-row reduction of a Kronecker product M (x) A, where
/// k and q are the ranks of the first-row reductions of M and A.
inline Prediction kron_rank_case(std::size_t k, std::size_t q, bool m_dependent, bool a_dependent) {
    const auto sk = detail::to_signed(k), sq = detail::to_signed(q);
    if (m_dependent && a_dependent) return {sk * sq, "kronecker-rank-table", {"M dependent", "A dependent"}};
    if (m_dependent) return {sk * (sq + 1), "kronecker-rank-table", {"M dependent", "A independent"}};
    if (a_dependent) return {(sk + 1) * sq, "kronecker-rank-table", {"M independent", "A dependent"}};
    return {(sk + 1) * (sq + 1) - 1, "kronecker-rank-table", {"M independent", "A independent"}};
}

}  // namespace wcdim::formula
