#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exactlin.hpp"
#include "families.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "mis.hpp"

namespace wcdim {

/// Result of a well-covered dimension computation over one field.
struct WcdimReport {
    std::size_t n = 0;
    FieldSpec field;
    std::size_t mis_count = 0;
    std::size_t wcdim = 0;
    // Canonical nullspace basis of the difference system; |basis| == wcdim.
    std::vector<ExactVector> basis;
    std::size_t difference_rank = 0;
    std::size_t sum_rank = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// Rows M_i - M_baseline for every i != baseline, as a (k-1) x n matrix.
inline ExactMatrix build_difference_system(const MisList& mis, std::size_t baseline = 0) {
    if (mis.sets.empty()) throw InputError("difference system needs at least one independent set");
    if (baseline >= mis.size()) throw InputError("baseline index out of range");
    const std::size_t n = mis.graph_n;
    ExactMatrix a(mis.size() - 1, n);
    std::size_t r = 0;
    for (std::size_t i = 0; i < mis.size(); ++i) {
        if (i == baseline) continue;
        for (Vertex v : mis[i]) a(r, v) += 1;
        for (Vertex v : mis[baseline]) a(r, v) -= 1;
        ++r;
    }
    return a;
}

/// k x n incidence matrix; row i is the indicator of M_i.
inline ExactMatrix build_sum_system(const MisList& mis) {
    if (mis.sets.empty()) throw InputError("sum system needs at least one independent set");
    ExactMatrix a(mis.size(), mis.graph_n);
    for (std::size_t i = 0; i < mis.size(); ++i) {
        for (Vertex v : mis[i]) a(i, v) = 1;
    }
    return a;
}

/// Well-covered dimension from a precomputed MIS list.
inline WcdimReport compute_wcdim(const MisList& mis, const FieldSpec& f) {
    const auto start = std::chrono::steady_clock::now();
    WcdimReport report;
    report.n = mis.graph_n;
    report.field = f;
    report.mis_count = mis.size();
    if (mis.graph_n > 0) {
        const ExactMatrix diff = build_difference_system(mis);
        report.difference_rank = rank(diff, f);
        report.sum_rank = rank(build_sum_system(mis), f);
        report.basis = nullspace_basis(diff, f);
        report.wcdim = report.n - report.difference_rank;
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

/// wcdim(G, F) = n - rank of the MIS difference system, plus the canonical basis of
/// the well-covered space. A graph with no vertices has dimension 0.
inline WcdimReport compute_wcdim(const Graph& g, const FieldSpec& f, const MisOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    WcdimReport report = compute_wcdim(enumerate_mis(g, opts), f);
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

inline std::vector<WcdimReport> compute_wcdim(const Graph& g, std::span<const FieldSpec> fields,
                                              const MisOptions& opts = {}) {
    const MisList mis = enumerate_mis(g, opts);
    std::vector<WcdimReport> out;
    out.reserve(fields.size());
    for (const auto& f : fields) out.push_back(compute_wcdim(mis, f));
    return out;
}

/// Every MIS weight-sum agrees in f.
inline bool is_well_covered_weighting(const MisList& mis, std::span<const mpq_class> w, const FieldSpec& f) {
    if (w.size() != mis.graph_n) {
        throw InputError("weight vector has length " + std::to_string(w.size()) + ", graph has " +
                         std::to_string(mis.graph_n) + " vertices");
    }
    std::optional<mpq_class> common;
    for (const auto& s : mis.sets) {
        mpq_class sum = 0;
        for (Vertex v : s) sum += w[v];
        sum = f.reduce(sum);
        if (!common) {
            common = sum;
        } else if (*common != sum) {
            return false;
        }
    }
    return true;
}

inline bool is_well_covered_weighting(const Graph& g, std::span<const mpq_class> w, const FieldSpec& f,
                                      const MisOptions& opts = {}) {
    if (w.size() != g.order()) {
        throw InputError("weight vector has length " + std::to_string(w.size()) + ", graph has " +
                         std::to_string(g.order()) + " vertices");
    }
    return is_well_covered_weighting(enumerate_mis(g, opts), w, f);
}

struct PathStructureResult {
    bool pass = false;
    std::size_t wcdim = 0;
    std::vector<ExactVector> basis;
    // Describes the first violating basis vector when pass is false.
    std::string witness;
};

/// Checks that every well-covered weighting of P_n (n >= 5) has w1 = w2,
/// w3 = ... = w_{n-2} = 0 and w_{n-1} = w_n, by testing the canonical basis.
inline PathStructureResult path_weight_structure(const Graph& g, const FieldSpec& f) {
    const std::size_t n = g.order();
    if (n < 5) throw InputError("path weight structure needs n >= 5");
    if (g != families::path(n)) throw InputError("graph is not the path 0-1-...-(n-1)");

    const WcdimReport report = compute_wcdim(g, f);
    PathStructureResult result{true, report.wcdim, report.basis, {}};
    for (std::size_t b = 0; b < report.basis.size() && result.pass; ++b) {
        const auto& w = report.basis[b];
        auto fail = [&](const std::string& why) {
            result.pass = false;
            result.witness = "basis vector " + std::to_string(b) + ": " + why;
        };
        if (w[0] != w[1]) {
            fail("w(v1) != w(v2)");
        } else if (w[n - 2] != w[n - 1]) {
            fail("w(v_{n-1}) != w(v_n)");
        } else {
            for (Vertex i = 2; i + 2 < n; ++i) {
                if (sgn(w[i]) != 0) {
                    fail("w(v" + std::to_string(i + 1) + ") = " + w[i].get_str() + " != 0");
                    break;
                }
            }
        }
    }
    return result;
}

}  // namespace wcdim
