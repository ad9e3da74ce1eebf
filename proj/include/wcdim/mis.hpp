#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace wcdim {

/// All maximal independent sets of a graph, each sorted, the list in lexicographic order.
struct MisList {
    std::vector<VertexSet> sets;
    std::size_t graph_n = 0;

    std::size_t size() const noexcept { return sets.size(); }
    const VertexSet& operator[](std::size_t i) const { return sets[i]; }

    friend bool operator==(const MisList&, const MisList&) = default;
};

struct MisOptions {
    std::size_t max_sets = 1'000'000;
};

namespace detail {

class Bitset {
public:
    explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    std::size_t count_and(const Bitset& o) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & o.words_[k]);
        return c;
    }

    Bitset operator&(const Bitset& o) const {
        Bitset r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
        return r;
    }

    Bitset minus(const Bitset& o) const {
        Bitset r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= ~o.words_[k];
        return r;
    }

    Bitset operator|(const Bitset& o) const {
        Bitset r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] |= o.words_[k];
        return r;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

// Bron-Kerbosch with Tomita pivoting over the complement graph: a maximal clique of
// the complement is a maximal independent set of the original.
class MisEnumerator {
public:
    MisEnumerator(const Graph& g, const MisOptions& opts) : n_(g.order()), opts_(opts) {
        non_adj_.reserve(n_);
        for (Vertex v = 0; v < n_; ++v) {
            Bitset b(n_);
            for (Vertex u = 0; u < n_; ++u) {
                if (u != v && !g.adjacent(u, v)) b.set(u);
            }
            non_adj_.push_back(std::move(b));
        }
    }

    std::vector<VertexSet> run() {
        Bitset all(n_);
        for (Vertex v = 0; v < n_; ++v) all.set(v);
        VertexSet current;
        expand(current, all, Bitset(n_));
        return std::move(out_);
    }

private:
    void expand(VertexSet& current, Bitset candidates, Bitset excluded) {
        if (candidates.none()) {
            if (excluded.none()) emit(current);
            return;
        }
        Vertex pivot = 0;
        std::size_t best = 0;
        bool have_pivot = false;
        (candidates | excluded).for_each([&](std::size_t u) {
            const std::size_t c = candidates.count_and(non_adj_[u]);
            if (!have_pivot || c > best) {
                pivot = u;
                best = c;
                have_pivot = true;
            }
        });
        const Bitset branch = candidates.minus(non_adj_[pivot]);
        branch.for_each([&](std::size_t v) {
            current.push_back(v);
            expand(current, candidates & non_adj_[v], excluded & non_adj_[v]);
            current.pop_back();
            candidates.reset(v);
            excluded.set(v);
        });
    }

    void emit(const VertexSet& current) {
        if (out_.size() >= opts_.max_sets) {
            throw CapacityError("more than " + std::to_string(opts_.max_sets) +
                                " maximal independent sets");
        }
        VertexSet s = current;
        std::sort(s.begin(), s.end());
        out_.push_back(std::move(s));
    }

    std::size_t n_;
    MisOptions opts_;
    std::vector<Bitset> non_adj_;
    std::vector<VertexSet> out_;
};

inline void check_in_range(const Graph& g, const VertexSet& s) {
    for (Vertex v : s) {
        if (v >= g.order()) {
            throw InputError("vertex " + std::to_string(v) + " out of range for n=" +
                             std::to_string(g.order()));
        }
    }
}

}  // namespace detail

/// Complete, canonically ordered list of maximal independent sets.
/// The graph with no vertices has exactly one, the empty set.
/// Throws CapacityError once more than opts.max_sets sets are found.
inline MisList enumerate_mis(const Graph& g, const MisOptions& opts = {}) {
    MisList list;
    list.graph_n = g.order();
    list.sets = detail::MisEnumerator(g, opts).run();
    std::sort(list.sets.begin(), list.sets.end());
    return list;
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
    detail::check_in_range(g, s);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (g.adjacent(s[i], s[j])) return false;
        }
    }
    return true;
}

inline bool is_maximal_independent(const Graph& g, const VertexSet& s) {
    if (!is_independent(g, s)) return false;
    std::vector<bool> covered(g.order(), false);
    for (Vertex v : s) {
        covered[v] = true;
        for (Vertex w : g.neighbors(v)) covered[w] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

inline bool is_well_covered(const MisList& mis) {
    return std::all_of(mis.sets.begin(), mis.sets.end(),
                       [&](const VertexSet& s) { return s.size() == mis.sets.front().size(); });
}

inline bool is_well_covered(const Graph& g, const MisOptions& opts = {}) {
    return is_well_covered(enumerate_mis(g, opts));
}

}  // namespace wcdim
