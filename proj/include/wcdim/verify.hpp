#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "engine.hpp"
#include "errors.hpp"
#include "exactlin.hpp"
#include "families.hpp"
#include "field.hpp"
#include "formulas.hpp"
#include "graph.hpp"
#include "mis.hpp"

// Oracle harness: every closed form is compared against the engine on the same
// instance. Both sides are exact integers, so comparisons carry no tolerance.
namespace wcdim::verify {

enum class Verdict { pass, fail, skip };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skip: return "skip";
    }
    return "?";
}

inline std::optional<Verdict> verdict_from_string(std::string_view s) {
    if (s == "pass") return Verdict::pass;
    if (s == "fail") return Verdict::fail;
    if (s == "skip") return Verdict::skip;
    return std::nullopt;
}

/// One check on one instance. predicted[k] is compared with engine[k]; entries are
/// grouped per characteristic in the order of `characteristics`, `values_per_char`
/// entries each.
struct CheckReport {
    std::string check;
    // Reproduces the instance on its own: family spec or explicit edge lists.
    std::string instance;
    std::vector<std::uint64_t> characteristics;
    std::size_t values_per_char = 1;
    std::vector<std::int64_t> predicted;
    std::vector<std::int64_t> engine;
    Verdict verdict = Verdict::skip;
    // Skip reason, or the first mismatch for failures.
    std::string detail;

    friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

namespace detail {

inline std::vector<std::uint64_t> characteristics_of(std::span<const FieldSpec> fields) {
    std::vector<std::uint64_t> out;
    for (const auto& f : fields) out.push_back(f.characteristic());
    return out;
}

inline void finish(CheckReport& r) {
    r.verdict = Verdict::pass;
    for (std::size_t k = 0; k < r.predicted.size(); ++k) {
        if (r.predicted[k] != r.engine[k]) {
            r.verdict = Verdict::fail;
            const std::size_t per = r.values_per_char == 0 ? 1 : r.values_per_char;
            std::ostringstream os;
            os << "char " << r.characteristics[k / per] << " value " << k % per << ": predicted "
               << r.predicted[k] << ", engine " << r.engine[k];
            r.detail = os.str();
            return;
        }
    }
}

inline CheckReport start_report(std::string check, std::string instance, std::span<const FieldSpec> fields) {
    CheckReport r;
    r.check = std::move(check);
    r.instance = std::move(instance);
    r.characteristics = characteristics_of(fields);
    return r;
}

inline CheckReport skipped(CheckReport r, const std::string& why) {
    r.verdict = Verdict::skip;
    r.detail = why;
    r.predicted.clear();
    r.engine.clear();
    return r;
}

inline std::int64_t as_int(std::size_t x) {
    return static_cast<std::int64_t>(x);
}

}  // namespace detail

/// Engine versus the matching closed form for one family instance, per characteristic.
/// Paths with n >= 5 additionally run the weight-structure check (a failed structure
/// check shows up as engine value -1 against predicted 0 in the second slot).
inline CheckReport check_family(const families::FamilySpec& spec, std::span<const FieldSpec> chars) {
    using families::Kind;
    CheckReport r = detail::start_report("family", families::to_string(spec), chars);
    const bool with_structure = spec.kind == Kind::path && !spec.params.empty() && spec.params[0] >= 5;
    r.values_per_char = with_structure ? 2 : 1;
    try {
        const auto built = families::build(spec);
        const auto reports = compute_wcdim(built.graph, chars);
        const auto& p = spec.params;
        for (std::size_t c = 0; c < chars.size(); ++c) {
            formula::Prediction pred;
            switch (spec.kind) {
                case Kind::complete: pred = formula::complete(p[0]); break;
                case Kind::empty: pred = formula::empty(p[0]); break;
                case Kind::complete_multipartite: pred = formula::complete_multipartite(p); break;
                case Kind::turan: pred = formula::turan(p[0], p[1]); break;
                case Kind::crown: pred = formula::crown(p[0], chars[c]); break;
                case Kind::path: pred = formula::path(p[0]); break;
                case Kind::cycle: pred = formula::cycle(p[0]); break;
                case Kind::gear: pred = formula::gear(p[0]); break;
                case Kind::petersen: pred = formula::petersen(); break;
            }
            r.predicted.push_back(pred.value);
            r.engine.push_back(detail::as_int(reports[c].wcdim));
            if (with_structure) {
                const auto structure = path_weight_structure(built.graph, chars[c]);
                r.predicted.push_back(0);
                r.engine.push_back(structure.pass ? 0 : -1);
                if (!structure.pass) r.detail = structure.witness;
            }
        }
    } catch (const HypothesisError& e) {
        return detail::skipped(std::move(r), e.what());
    } catch (const CapacityError& e) {
        return detail::skipped(std::move(r), e.what());
    }
    const std::string structure_note = r.detail;
    detail::finish(r);
    if (r.verdict == Verdict::fail && !structure_note.empty()) r.detail += "; " + structure_note;
    return r;
}

inline CheckReport check_blowup(const Graph& g, Vertex v, std::size_t t, std::span<const FieldSpec> chars) {
    CheckReport r = detail::start_report(
        "blowup", "g=" + describe(g) + " v=" + std::to_string(v) + " t=" + std::to_string(t), chars);
    try {
        const Graph h = blowup(g, v, t);
        const auto base = compute_wcdim(g, chars);
        const auto blown = compute_wcdim(h, chars);
        for (std::size_t c = 0; c < chars.size(); ++c) {
            r.predicted.push_back(formula::blowup(base[c].wcdim, t).value);
            r.engine.push_back(detail::as_int(blown[c].wcdim));
        }
    } catch (const CapacityError& e) {
        return detail::skipped(std::move(r), e.what());
    }
    detail::finish(r);
    return r;
}

inline CheckReport check_multi_blowup(const Graph& g, std::span<const std::size_t> ts,
                                      std::span<const FieldSpec> chars) {
    std::string tss;
    for (std::size_t i = 0; i < ts.size(); ++i) tss += (i ? "," : "") + std::to_string(ts[i]);
    CheckReport r = detail::start_report("multi-blowup", "g=" + describe(g) + " ts=" + tss, chars);
    try {
        const Graph h = multi_blowup(g, ts);
        const auto base = compute_wcdim(g, chars);
        const auto blown = compute_wcdim(h, chars);
        for (std::size_t c = 0; c < chars.size(); ++c) {
            r.predicted.push_back(formula::multi_blowup(base[c].wcdim, g.order(), ts).value);
            r.engine.push_back(detail::as_int(blown[c].wcdim));
        }
    } catch (const CapacityError& e) {
        return detail::skipped(std::move(r), e.what());
    }
    detail::finish(r);
    return r;
}

/// Engine on g.h versus the lexicographic-product formula fed by engine values
/// for the factors. When h is edgeless a second slot compares against m + n(t-1).
inline CheckReport check_lex(const Graph& g, const Graph& h, std::span<const FieldSpec> chars) {
    CheckReport r = detail::start_report("lex", "g=" + describe(g) + " h=" + describe(h), chars);
    const bool h_edgeless = h.size() == 0 && h.order() > 0;
    r.values_per_char = h_edgeless ? 2 : 1;
    try {
        const MisList mis_g = enumerate_mis(g);
        const MisList mis_h = enumerate_mis(h);
        const MisList mis_gh = enumerate_mis(lex_product(g, h));
        for (const auto& f : chars) {
            const std::size_t n = compute_wcdim(mis_g, f).wcdim;
            const std::size_t m = compute_wcdim(mis_h, f).wcdim;
            const std::size_t got = compute_wcdim(mis_gh, f).wcdim;
            r.predicted.push_back(formula::lex(g.order(), h.order(), n, m, mis_h.size(), mis_g.size()).value);
            r.engine.push_back(detail::as_int(got));
            if (h_edgeless) {
                r.predicted.push_back(formula::lex_blowup(n, g.order(), h.order()).value);
                r.engine.push_back(detail::as_int(got));
            }
        }
    } catch (const CapacityError& e) {
        return detail::skipped(std::move(r), e.what());
    }
    detail::finish(r);
    return r;
}

inline CheckReport check_union(const Graph& g, const Graph& h, std::span<const FieldSpec> chars) {
    CheckReport r = detail::start_report("union", "g=" + describe(g) + " h=" + describe(h), chars);
    try {
        const auto dg = compute_wcdim(g, chars);
        const auto dh = compute_wcdim(h, chars);
        const auto du = compute_wcdim(disjoint_union(g, h), chars);
        for (std::size_t c = 0; c < chars.size(); ++c) {
            r.predicted.push_back(formula::disjoint_union(dg[c].wcdim, dh[c].wcdim).value);
            r.engine.push_back(detail::as_int(du[c].wcdim));
        }
    } catch (const CapacityError& e) {
        return detail::skipped(std::move(r), e.what());
    }
    detail::finish(r);
    return r;
}

/// Kronecker rank case table. Per characteristic two slots:
///   0: kron_rank_case(k, q, ...) versus rank(C), C = reduce_first_row(A (x) M);
///   1: |V(g)||V(h)| - rank(C) versus the engine's wcdim(g.h).
/// M and A are the MIS sum systems of g and h, each with a dependent row moved to
/// the front where one exists (the same policy is applied to A (x) M).
inline CheckReport check_kronecker_rank(const Graph& g, const Graph& h, std::span<const FieldSpec> chars) {
    CheckReport r = detail::start_report("kron", "g=" + describe(g) + " h=" + describe(h), chars);
    r.values_per_char = 2;
    try {
        const MisList mis_g = enumerate_mis(g);
        const MisList mis_h = enumerate_mis(h);
        const MisList mis_gh = enumerate_mis(lex_product(g, h));
        for (const auto& f : chars) {
            const ExactMatrix m = move_dependent_row_first(build_sum_system(mis_g), f);
            const ExactMatrix a = move_dependent_row_first(build_sum_system(mis_h), f);
            const ExactMatrix prod = move_dependent_row_first(kronecker(a, m), f);
            const std::size_t rank_c = rank(reduce_first_row(prod), f);

            const std::size_t k = rank(reduce_first_row(m), f);
            const std::size_t q = rank(reduce_first_row(a), f);
            const bool m_dep = has_dependent_rows(m, f);
            const bool a_dep = has_dependent_rows(a, f);
            r.predicted.push_back(formula::kron_rank_case(k, q, m_dep, a_dep).value);
            r.engine.push_back(detail::as_int(rank_c));

            r.predicted.push_back(detail::as_int(g.order() * h.order()) - detail::as_int(rank_c));
            r.engine.push_back(detail::as_int(compute_wcdim(mis_gh, f).wcdim));
        }
    } catch (const CapacityError& e) {
        return detail::skipped(std::move(r), e.what());
    }
    detail::finish(r);
    return r;
}

// ---- seeded instance generation ----

/// A G(n, p) instance that can be rebuilt from its parameters.
struct RandomGraphSpec {
    std::size_t n = 0;
    std::uint64_t prob_num = 0;
    std::uint64_t prob_den = 1;
    std::uint64_t seed = 0;

    Graph build() const { return random_graph(n, Probability(prob_num, prob_den), seed); }
};

struct BlowupInstance {
    RandomGraphSpec base;
    Vertex v = 0;
    std::size_t t = 1;
};

struct MultiBlowupInstance {
    RandomGraphSpec base;
    std::vector<std::size_t> ts;
};

struct PairInstance {
    RandomGraphSpec g;
    RandomGraphSpec h;
};

namespace detail {

// Stream salts keep the instance groups independent under one suite seed.
inline constexpr std::uint64_t salt_multipartite = 0x6d70;
inline constexpr std::uint64_t salt_blowup = 0x626c;
inline constexpr std::uint64_t salt_multi_blowup = 0x6d62;
inline constexpr std::uint64_t salt_lex = 0x6c78;
inline constexpr std::uint64_t salt_kron = 0x6b72;
inline constexpr std::uint64_t salt_union = 0x756e;

inline std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

inline RandomGraphSpec random_spec(std::mt19937_64& rng, std::size_t max_n) {
    RandomGraphSpec s;
    s.n = uniform(rng, 1, max_n);
    s.prob_num = uniform(rng, 1, 7);
    s.prob_den = 8;
    s.seed = rng();
    return s;
}

inline std::vector<PairInstance> pair_instances(std::uint64_t seed, std::uint64_t salt, std::size_t trials,
                                                std::size_t max_n) {
    std::mt19937_64 rng(seed ^ salt);
    std::vector<PairInstance> out;
    for (std::size_t i = 0; i < trials; ++i) {
        PairInstance p;
        p.g = random_spec(rng, max_n);
        p.h = random_spec(rng, max_n);
        out.push_back(p);
    }
    return out;
}

}  // namespace detail

inline std::vector<std::vector<std::size_t>> multipartite_instances(std::uint64_t seed, std::size_t trials,
                                                                    std::size_t max_blocks = 5,
                                                                    std::size_t max_size = 4) {
    std::mt19937_64 rng(seed ^ detail::salt_multipartite);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < trials; ++i) {
        std::vector<std::size_t> sizes(detail::uniform(rng, 1, max_blocks));
        for (auto& s : sizes) s = detail::uniform(rng, 1, max_size);
        out.push_back(std::move(sizes));
    }
    return out;
}

inline std::vector<BlowupInstance> blowup_instances(std::uint64_t seed, std::size_t trials, std::size_t max_n,
                                                    std::size_t max_t = 3) {
    std::mt19937_64 rng(seed ^ detail::salt_blowup);
    std::vector<BlowupInstance> out;
    for (std::size_t i = 0; i < trials; ++i) {
        BlowupInstance b;
        b.base = detail::random_spec(rng, max_n);
        b.v = detail::uniform(rng, 0, b.base.n - 1);
        b.t = detail::uniform(rng, 1, max_t);
        out.push_back(b);
    }
    return out;
}

inline std::vector<MultiBlowupInstance> multi_blowup_instances(std::uint64_t seed, std::size_t trials,
                                                               std::size_t max_n, std::size_t max_t = 3) {
    std::mt19937_64 rng(seed ^ detail::salt_multi_blowup);
    std::vector<MultiBlowupInstance> out;
    for (std::size_t i = 0; i < trials; ++i) {
        MultiBlowupInstance b;
        b.base = detail::random_spec(rng, max_n);
        b.ts.resize(b.base.n);
        for (auto& t : b.ts) t = detail::uniform(rng, 1, max_t);
        out.push_back(std::move(b));
    }
    return out;
}

inline std::vector<PairInstance> lex_instances(std::uint64_t seed, std::size_t trials, std::size_t max_n) {
    return detail::pair_instances(seed, detail::salt_lex, trials, max_n);
}

inline std::vector<PairInstance> kron_instances(std::uint64_t seed, std::size_t trials, std::size_t max_n) {
    return detail::pair_instances(seed, detail::salt_kron, trials, max_n);
}

inline std::vector<PairInstance> union_instances(std::uint64_t seed, std::size_t trials, std::size_t max_n) {
    return detail::pair_instances(seed, detail::salt_union, trials, max_n);
}

/// Hand-picked lexicographic pairs with known values 1, 3 and 7.
inline std::vector<std::pair<Graph, Graph>> designed_lex_pairs() {
    using namespace families;
    return {{complete(2), complete(2)}, {complete(2), empty_graph(2)}, {cycle(4), empty_graph(2)}};
}

inline std::vector<std::pair<Graph, Graph>> designed_kron_pairs() {
    using namespace families;
    return {{complete(2), complete(2)}, {complete(2), empty_graph(2)}};
}

// ---- suite ----

inline std::vector<FieldSpec> fields(std::initializer_list<std::uint64_t> chars) {
    std::vector<FieldSpec> out;
    for (auto c : chars) out.emplace_back(c);
    return out;
}

/// Sizes and characteristics for every group. A zero bound or count disables a group.
struct SuiteConfig {
    std::uint64_t seed = 1;

    bool petersen = true;
    std::size_t complete_max_n = 8;   // complete and empty graphs 1..max
    std::size_t crown_max_n = 9;      // 3..max
    std::size_t turan_max_n = 10;     // all 1 <= r <= n <= max
    std::size_t path_max_n = 10;      // 1..max
    std::size_t cycle_max_n = 12;     // 3..max
    std::size_t gear_max_n = 6;       // 3..max
    std::size_t multipartite_trials = 20;

    std::size_t blowup_trials = 100;
    std::size_t multi_blowup_trials = 50;
    std::size_t lex_trials = 50;
    std::size_t kron_trials = 30;
    std::size_t union_trials = 50;
    std::size_t max_random_n = 7;
    std::size_t max_lex_n = 4;
    bool designed_pairs = true;

    std::vector<FieldSpec> family_chars = fields({0, 2, 3, 5, 7});
    std::vector<FieldSpec> petersen_chars = fields({0, 2, 3, 5});
    std::vector<FieldSpec> multipartite_chars = fields({0, 2, 3});
    std::vector<FieldSpec> blowup_chars = fields({0, 2, 3});
    std::vector<FieldSpec> lex_chars = fields({0, 2});
    std::vector<FieldSpec> kron_chars = fields({0, 2, 3});
    std::vector<FieldSpec> union_chars = fields({0, 2, 5});

    /// Every group disabled.
    static SuiteConfig none() {
        SuiteConfig c;
        c.petersen = false;
        c.complete_max_n = c.crown_max_n = c.turan_max_n = c.path_max_n = c.cycle_max_n = c.gear_max_n = 0;
        c.multipartite_trials = c.blowup_trials = c.multi_blowup_trials = 0;
        c.lex_trials = c.kron_trials = c.union_trials = 0;
        c.designed_pairs = false;
        return c;
    }

    void set_all_chars(const std::vector<FieldSpec>& chars) {
        family_chars = petersen_chars = multipartite_chars = blowup_chars = chars;
        lex_chars = kron_chars = union_chars = chars;
    }
};

inline std::vector<families::FamilySpec> family_sweep(const SuiteConfig& c) {
    using families::Kind;
    std::vector<families::FamilySpec> out;
    if (c.petersen) out.push_back({Kind::petersen, {}});
    for (std::size_t n = 1; n <= c.complete_max_n; ++n) out.push_back({Kind::complete, {n}});
    for (std::size_t n = 1; n <= c.complete_max_n; ++n) out.push_back({Kind::empty, {n}});
    for (std::size_t n = 3; n <= c.crown_max_n; ++n) out.push_back({Kind::crown, {n}});
    for (std::size_t n = 1; n <= c.turan_max_n; ++n) {
        for (std::size_t r = 1; r <= n; ++r) out.push_back({Kind::turan, {n, r}});
    }
    for (std::size_t n = 1; n <= c.path_max_n; ++n) out.push_back({Kind::path, {n}});
    for (std::size_t n = 3; n <= c.cycle_max_n; ++n) out.push_back({Kind::cycle, {n}});
    for (std::size_t n = 3; n <= c.gear_max_n; ++n) out.push_back({Kind::gear, {n}});
    for (auto& sizes : multipartite_instances(c.seed, c.multipartite_trials)) {
        out.push_back({Kind::complete_multipartite, std::move(sizes)});
    }
    return out;
}

/// Runs every enabled group; report order is group order, then instance order.
inline std::vector<CheckReport> run_suite(const SuiteConfig& c) {
    using families::Kind;
    std::vector<CheckReport> out;
    for (const auto& spec : family_sweep(c)) {
        const auto& chars = spec.kind == Kind::petersen                ? c.petersen_chars
                            : spec.kind == Kind::complete_multipartite ? c.multipartite_chars
                                                                       : c.family_chars;
        out.push_back(check_family(spec, chars));
    }
    for (const auto& b : blowup_instances(c.seed, c.blowup_trials, c.max_random_n)) {
        auto r = check_blowup(b.base.build(), b.v, b.t, c.blowup_chars);
        r.instance = "seed=" + std::to_string(b.base.seed) + " " + r.instance;
        out.push_back(std::move(r));
    }
    for (const auto& b : multi_blowup_instances(c.seed, c.multi_blowup_trials, c.max_random_n)) {
        out.push_back(check_multi_blowup(b.base.build(), b.ts, c.blowup_chars));
    }
    if (c.designed_pairs && c.lex_trials > 0) {
        for (const auto& [g, h] : designed_lex_pairs()) out.push_back(check_lex(g, h, c.lex_chars));
    }
    for (const auto& p : lex_instances(c.seed, c.lex_trials, c.max_lex_n)) {
        out.push_back(check_lex(p.g.build(), p.h.build(), c.lex_chars));
    }
    if (c.designed_pairs && c.kron_trials > 0) {
        for (const auto& [g, h] : designed_kron_pairs()) out.push_back(check_kronecker_rank(g, h, c.kron_chars));
    }
    for (const auto& p : kron_instances(c.seed, c.kron_trials, c.max_lex_n)) {
        out.push_back(check_kronecker_rank(p.g.build(), p.h.build(), c.kron_chars));
    }
    for (const auto& p : union_instances(c.seed, c.union_trials, c.max_random_n)) {
        out.push_back(check_union(p.g.build(), p.h.build(), c.union_chars));
    }
    return out;
}

struct Tally {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

inline Tally tally(std::span<const CheckReport> reports) {
    Tally t;
    for (const auto& r : reports) {
        switch (r.verdict) {
            case Verdict::pass: ++t.passed; break;
            case Verdict::fail: ++t.failed; break;
            case Verdict::skip: ++t.skipped; break;
        }
    }
    return t;
}

}  // namespace wcdim::verify
