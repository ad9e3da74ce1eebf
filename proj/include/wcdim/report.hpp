#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "engine.hpp"
#include "errors.hpp"
#include "exactlin.hpp"
#include "verify.hpp"

// Report documents and their two renderings: a human-readable text form and a
// line-oriented `key=value` form that parses back losslessly. Timings are left
// out of the key-value form so identical runs give identical bytes.
namespace wcdim::report {

struct ComputeSection {
    std::uint64_t characteristic = 0;
    std::size_t mis_count = 0;
    std::size_t wcdim = 0;
    std::optional<std::size_t> difference_rank;
    std::optional<std::size_t> sum_rank;
    std::optional<std::vector<ExactVector>> basis;

    friend bool operator==(const ComputeSection&, const ComputeSection&) = default;
};

struct ComputeDocument {
    std::string graph;
    std::size_t n = 0;
    std::size_t edges = 0;
    std::vector<ComputeSection> sections;

    friend bool operator==(const ComputeDocument&, const ComputeDocument&) = default;
};

struct VerifyDocument {
    std::string selector;
    std::uint64_t seed = 0;
    std::vector<verify::CheckReport> checks;

    friend bool operator==(const VerifyDocument&, const VerifyDocument&) = default;
};

inline ComputeSection make_section(const WcdimReport& r, bool with_basis, bool verbose) {
    ComputeSection s{r.field.characteristic(), r.mis_count, r.wcdim, {}, {}, {}};
    if (verbose) {
        s.difference_rank = r.difference_rank;
        s.sum_rank = r.sum_rank;
    }
    if (with_basis) s.basis = r.basis;
    return s;
}

namespace detail {

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << sep;
        os << xs[i];
    }
    return os.str();
}

inline std::string join_exact(const ExactVector& v, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i].get_str();
    }
    return out;
}

inline std::string field_name(std::uint64_t c) {
    return FieldSpec(c).name();
}

class KeyValues {
public:
    explicit KeyValues(std::istream& in) {
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw InputError("report line " + std::to_string(lineno) + ": missing '='");
            values_[line.substr(0, eq)] = line.substr(eq + 1);
        }
    }

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    const std::string& str(const std::string& key) const {
        const auto it = values_.find(key);
        if (it == values_.end()) throw InputError("report is missing key '" + key + "'");
        return it->second;
    }

    std::uint64_t num(const std::string& key) const {
        try {
            std::size_t pos = 0;
            const auto v = std::stoull(str(key), &pos);
            if (pos != str(key).size()) throw std::invalid_argument(key);
            return v;
        } catch (const std::logic_error&) {
            throw InputError("report key '" + key + "' is not a number");
        }
    }

    template <class T>
    std::vector<T> list(const std::string& key) const {
        std::istringstream is(str(key));
        std::vector<T> out;
        T x;
        while (is >> x) out.push_back(x);
        return out;
    }

    ExactVector exact_list(const std::string& key) const {
        std::istringstream is(str(key));
        ExactVector out;
        std::string tok;
        while (is >> tok) {
            mpq_class q;
            if (q.set_str(tok, 10) != 0) throw InputError("report key '" + key + "' has bad scalar '" + tok + "'");
            q.canonicalize();
            out.push_back(q);
        }
        return out;
    }

private:
    std::map<std::string, std::string> values_;
};

}  // namespace detail

// ---- compute ----

inline void write_kv(std::ostream& out, const ComputeDocument& doc) {
    out << "document=compute\n";
    out << "graph=" << doc.graph << '\n';
    out << "n=" << doc.n << '\n';
    out << "edges=" << doc.edges << '\n';
    out << "sections=" << doc.sections.size() << '\n';
    for (std::size_t i = 0; i < doc.sections.size(); ++i) {
        const auto& s = doc.sections[i];
        const std::string p = "section." + std::to_string(i) + ".";
        out << p << "char=" << s.characteristic << '\n';
        out << p << "mis_count=" << s.mis_count << '\n';
        out << p << "wcdim=" << s.wcdim << '\n';
        if (s.difference_rank) out << p << "difference_rank=" << *s.difference_rank << '\n';
        if (s.sum_rank) out << p << "sum_rank=" << *s.sum_rank << '\n';
        if (s.basis) {
            out << p << "basis.count=" << s.basis->size() << '\n';
            for (std::size_t b = 0; b < s.basis->size(); ++b) {
                out << p << "basis." << b << '=' << detail::join_exact((*s.basis)[b]) << '\n';
            }
        }
    }
}

inline ComputeDocument read_compute_kv(std::istream& in) {
    const detail::KeyValues kv(in);
    if (kv.str("document") != "compute") throw InputError("not a compute report");
    ComputeDocument doc;
    doc.graph = kv.str("graph");
    doc.n = kv.num("n");
    doc.edges = kv.num("edges");
    const std::size_t count = kv.num("sections");
    for (std::size_t i = 0; i < count; ++i) {
        const std::string p = "section." + std::to_string(i) + ".";
        ComputeSection s;
        s.characteristic = kv.num(p + "char");
        s.mis_count = kv.num(p + "mis_count");
        s.wcdim = kv.num(p + "wcdim");
        if (kv.has(p + "difference_rank")) s.difference_rank = kv.num(p + "difference_rank");
        if (kv.has(p + "sum_rank")) s.sum_rank = kv.num(p + "sum_rank");
        if (kv.has(p + "basis.count")) {
            std::vector<ExactVector> basis;
            const std::size_t nb = kv.num(p + "basis.count");
            for (std::size_t b = 0; b < nb; ++b) basis.push_back(kv.exact_list(p + "basis." + std::to_string(b)));
            s.basis = std::move(basis);
        }
        doc.sections.push_back(std::move(s));
    }
    return doc;
}

inline void write_text(std::ostream& out, const ComputeDocument& doc) {
    out << "graph " << doc.graph << " (n=" << doc.n << ", edges=" << doc.edges << ")\n";
    for (const auto& s : doc.sections) {
        out << "  over " << detail::field_name(s.characteristic) << ": wcdim = " << s.wcdim << '\n';
        if (s.difference_rank) {
            out << "    maximal independent sets: " << s.mis_count << '\n';
            out << "    rank(difference system) = " << *s.difference_rank << ", rank(sum system) = " << *s.sum_rank
                << '\n';
        }
        if (s.basis) {
            out << "    basis (" << s.basis->size() << " vectors):\n";
            for (const auto& v : *s.basis) out << "      [" << detail::join_exact(v, ", ") << "]\n";
        }
    }
}

// ---- verify ----

inline void write_kv(std::ostream& out, const VerifyDocument& doc) {
    out << "document=verify\n";
    out << "selector=" << doc.selector << '\n';
    out << "seed=" << doc.seed << '\n';
    out << "checks=" << doc.checks.size() << '\n';
    for (std::size_t i = 0; i < doc.checks.size(); ++i) {
        const auto& c = doc.checks[i];
        const std::string p = "check." + std::to_string(i) + ".";
        out << p << "name=" << c.check << '\n';
        out << p << "instance=" << c.instance << '\n';
        out << p << "chars=" << detail::join(c.characteristics) << '\n';
        out << p << "values_per_char=" << c.values_per_char << '\n';
        out << p << "predicted=" << detail::join(c.predicted) << '\n';
        out << p << "engine=" << detail::join(c.engine) << '\n';
        out << p << "verdict=" << verify::to_string(c.verdict) << '\n';
        out << p << "detail=" << c.detail << '\n';
    }
    const auto t = verify::tally(doc.checks);
    out << "passed=" << t.passed << '\n';
    out << "failed=" << t.failed << '\n';
    out << "skipped=" << t.skipped << '\n';
}

inline VerifyDocument read_verify_kv(std::istream& in) {
    const detail::KeyValues kv(in);
    if (kv.str("document") != "verify") throw InputError("not a verify report");
    VerifyDocument doc;
    doc.selector = kv.str("selector");
    doc.seed = kv.num("seed");
    const std::size_t count = kv.num("checks");
    for (std::size_t i = 0; i < count; ++i) {
        const std::string p = "check." + std::to_string(i) + ".";
        verify::CheckReport c;
        c.check = kv.str(p + "name");
        c.instance = kv.str(p + "instance");
        c.characteristics = kv.list<std::uint64_t>(p + "chars");
        c.values_per_char = kv.num(p + "values_per_char");
        c.predicted = kv.list<std::int64_t>(p + "predicted");
        c.engine = kv.list<std::int64_t>(p + "engine");
        const auto verdict = verify::verdict_from_string(kv.str(p + "verdict"));
        if (!verdict) throw InputError("report key '" + p + "verdict' is not a verdict");
        c.verdict = *verdict;
        c.detail = kv.str(p + "detail");
        doc.checks.push_back(std::move(c));
    }
    return doc;
}

inline void write_text(std::ostream& out, const VerifyDocument& doc) {
    out << "verify " << doc.selector << " (seed " << doc.seed << ")\n";
    for (const auto& c : doc.checks) {
        std::string tag(verify::to_string(c.verdict));
        for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        out << std::left << std::setw(5) << tag << ' ' << std::setw(13) << c.check << ' ' << c.instance;
        if (!c.characteristics.empty()) out << "  chars=" << detail::join(c.characteristics, ",");
        if (!c.predicted.empty()) {
            out << "  predicted=" << detail::join(c.predicted, ",") << "  engine=" << detail::join(c.engine, ",");
        }
        if (!c.detail.empty()) out << "  [" << c.detail << ']';
        out << '\n';
    }
    const auto t = verify::tally(doc.checks);
    out << "passed " << t.passed << ", failed " << t.failed << ", skipped " << t.skipped << '\n';
}

}  // namespace wcdim::report
