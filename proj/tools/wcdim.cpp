// Command-line front end: compute well-covered dimensions and run the oracle suite.
//
//   wcdim compute <file|family> [--char P]... [--basis] [--verbose] [--format text|kv]
//   wcdim verify <all|family|blowup|multi-blowup|lex|kron|union> [kind] [--seed S] ...
//   wcdim families
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 capacity error.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wcdim.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_input = 2;
constexpr int exit_capacity = 3;

std::vector<wcdim::FieldSpec> to_fields(const std::vector<std::uint64_t>& chars) {
    std::vector<wcdim::FieldSpec> out;
    for (auto c : chars) out.emplace_back(c);
    if (out.empty()) out.emplace_back(0);
    return out;
}

struct ComputeArgs {
    std::string input;
    std::vector<std::uint64_t> chars;
    bool basis = false;
    bool verbose = false;
    std::string format = "text";
    std::size_t max_mis = wcdim::MisOptions{}.max_sets;
};

int run_compute(const ComputeArgs& args) {
    const auto loaded = wcdim::io::load_graph(args.input);
    const auto fields = to_fields(args.chars);
    const auto reports = wcdim::compute_wcdim(loaded.graph, fields, wcdim::MisOptions{args.max_mis});

    wcdim::report::ComputeDocument doc{loaded.label, loaded.graph.order(), loaded.graph.size(), {}};
    for (const auto& r : reports) doc.sections.push_back(wcdim::report::make_section(r, args.basis, args.verbose));

    if (args.format == "kv") {
        wcdim::report::write_kv(std::cout, doc);
    } else {
        if (loaded.outside_formula_range) {
            std::cerr << "note: " << loaded.label << " is below the parameter range of its closed form\n";
        }
        wcdim::report::write_text(std::cout, doc);
    }
    return exit_ok;
}

struct VerifyArgs {
    std::string selector = "all";
    std::string kind;
    std::uint64_t seed = 1;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> max_n;
    std::vector<std::uint64_t> chars;
    std::string format = "text";
};

wcdim::verify::SuiteConfig select_suite(const VerifyArgs& args) {
    using wcdim::families::Kind;
    const wcdim::verify::SuiteConfig defaults;
    auto cfg = args.selector == "all" ? defaults : wcdim::verify::SuiteConfig::none();
    cfg.seed = args.seed;
    const auto& s = args.selector;

    if (s == "all") {
        if (args.trials) {
            cfg.multipartite_trials = cfg.blowup_trials = cfg.multi_blowup_trials = *args.trials;
            cfg.lex_trials = cfg.kron_trials = cfg.union_trials = *args.trials;
        }
        if (args.max_n) cfg.max_random_n = *args.max_n;
    } else if (s == "family") {
        if (args.kind.empty()) throw wcdim::InputError("verify family needs a family kind (see `wcdim families`)");
        const auto kind = wcdim::families::kind_from_token(args.kind);
        if (!kind) throw wcdim::InputError("unknown graph family '" + args.kind + "'");
        auto bound = [&](std::size_t def) { return args.max_n.value_or(def); };
        switch (*kind) {
            case Kind::complete:
            case Kind::empty: cfg.complete_max_n = bound(defaults.complete_max_n); break;
            case Kind::complete_multipartite:
                cfg.multipartite_trials = args.trials.value_or(defaults.multipartite_trials);
                break;
            case Kind::turan: cfg.turan_max_n = bound(defaults.turan_max_n); break;
            case Kind::crown: cfg.crown_max_n = bound(defaults.crown_max_n); break;
            case Kind::path: cfg.path_max_n = bound(defaults.path_max_n); break;
            case Kind::cycle: cfg.cycle_max_n = bound(defaults.cycle_max_n); break;
            case Kind::gear: cfg.gear_max_n = bound(defaults.gear_max_n); break;
            case Kind::petersen: cfg.petersen = true; break;
        }
    } else if (s == "blowup") {
        cfg.blowup_trials = args.trials.value_or(defaults.blowup_trials);
        cfg.max_random_n = args.max_n.value_or(defaults.max_random_n);
    } else if (s == "multi-blowup") {
        cfg.multi_blowup_trials = args.trials.value_or(defaults.multi_blowup_trials);
        cfg.max_random_n = args.max_n.value_or(defaults.max_random_n);
    } else if (s == "lex") {
        cfg.lex_trials = args.trials.value_or(defaults.lex_trials);
        cfg.max_lex_n = args.max_n.value_or(defaults.max_lex_n);
        cfg.designed_pairs = true;
    } else if (s == "kron") {
        cfg.kron_trials = args.trials.value_or(defaults.kron_trials);
        cfg.max_lex_n = args.max_n.value_or(defaults.max_lex_n);
        cfg.designed_pairs = true;
    } else if (s == "union") {
        cfg.union_trials = args.trials.value_or(defaults.union_trials);
        cfg.max_random_n = args.max_n.value_or(defaults.max_random_n);
    } else {
        throw wcdim::InputError("unknown verify selector '" + s + "'");
    }
    if (cfg.max_random_n == 0 || cfg.max_lex_n == 0) throw wcdim::InputError("--max-n must be positive");
    if (!args.chars.empty()) cfg.set_all_chars(to_fields(args.chars));
    return cfg;
}

int run_verify(const VerifyArgs& args) {
    const auto cfg = select_suite(args);
    std::string selector = args.selector;
    if (!args.kind.empty()) selector += " " + args.kind;
    const wcdim::report::VerifyDocument doc{selector, args.seed, wcdim::verify::run_suite(cfg)};

    if (args.format == "kv") {
        wcdim::report::write_kv(std::cout, doc);
    } else {
        wcdim::report::write_text(std::cout, doc);
    }
    const auto t = wcdim::verify::tally(doc.checks);
    return t.failed == 0 && t.skipped == 0 ? exit_ok : exit_verify_failed;
}

int run_families() {
    for (const auto& info : wcdim::families::kind_table) {
        std::cout << std::left << std::setw(20) << info.usage << info.summary << '\n';
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Well-covered dimension of graphs over fields of any characteristic"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* compute_cmd = app.add_subcommand("compute", "compute wcdim of a graph file or family spec");
    compute_cmd->add_option("input", compute.input, "graph file or family spec such as crown:5")->required();
    compute_cmd->add_option("--char", compute.chars, "field characteristic, 0 or a prime (repeatable)");
    compute_cmd->add_flag("--basis", compute.basis, "print the well-covered space basis");
    compute_cmd->add_flag("--verbose", compute.verbose, "print MIS count and both system ranks");
    compute_cmd->add_option("--format", compute.format, "output format")->check(CLI::IsMember({"text", "kv"}));
    compute_cmd->add_option("--max-mis", compute.max_mis, "abort above this many maximal independent sets");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "check closed forms against the engine");
    verify_cmd->add_option("selector", verify.selector, "all, family, blowup, multi-blowup, lex, kron or union");
    verify_cmd->add_option("kind", verify.kind, "family kind for `verify family`");
    verify_cmd->add_option("--seed", verify.seed, "seed for random instances");
    verify_cmd->add_option("--trials", verify.trials, "random instances per group");
    verify_cmd->add_option("--max-n", verify.max_n, "largest family parameter or random graph order");
    verify_cmd->add_option("--char", verify.chars, "override the characteristic sweep (repeatable)");
    verify_cmd->add_option("--format", verify.format, "output format")->check(CLI::IsMember({"text", "kv"}));

    auto* families_cmd = app.add_subcommand("families", "list graph family generators");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*compute_cmd) return run_compute(compute);
        if (*verify_cmd) return run_verify(verify);
        if (*families_cmd) return run_families();
    } catch (const wcdim::CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_capacity;
    } catch (const wcdim::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
