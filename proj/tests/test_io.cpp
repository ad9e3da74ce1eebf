#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "wcdim/families.hpp"
#include "wcdim/io.hpp"
#include "wcdim/report.hpp"

using namespace wcdim;

namespace {

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return io::read_graph(in);
}

std::string error_of(const std::string& text) {
    try {
        parse(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        path_ = std::filesystem::temp_directory_path() /
                ("wcdim_io_" + std::to_string(std::random_device{}()) + ".txt");
        std::ofstream(path_) << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST(GraphFile, ParsesEdgeLists) {
    EXPECT_EQ(parse("4 4\n0 1\n1 2\n2 3\n3 0\n"), families::cycle(4));
    EXPECT_EQ(parse("# a comment\n\n3 0\n"), Graph(3));
    EXPECT_EQ(parse("  2 1 \n\t0   1\r\n# trailing\n"), families::complete(2));
    EXPECT_EQ(parse("0 0\n"), Graph(0));
}

TEST(GraphFile, ErrorsCarryLineNumbers) {
    EXPECT_EQ(error_of("4 4\n0 1\n1 2\n2 3\n4 4\n"), "line 5: vertex index out of range for n=4");
    EXPECT_EQ(error_of("3 1\n1 1\n"), "line 2: self-loop at vertex 1");
    EXPECT_EQ(error_of("3 2\n0 1\n1 0\n"), "line 3: duplicate edge 1 0");
    EXPECT_EQ(error_of("3 2\n0 1\n"), "line 2: header declares 2 edges, found 1");
    EXPECT_EQ(error_of("3 1\n0 1\n1 2\n"), "line 3: more edge lines than the declared 1");
    EXPECT_EQ(error_of("3 x\n"), "line 1: expected a non-negative integer, got 'x'");
    EXPECT_EQ(error_of("# only\n"), "line 1: missing 'n m' header");
    EXPECT_EQ(error_of("3 1 7\n"), "line 1: expected two integers, got 3");
    EXPECT_EQ(error_of("3 1\n-1 2\n"), "line 2: expected a non-negative integer, got '-1'");
}

TEST(GraphFile, WriteThenReadRoundTrips) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(rng() % 10, Probability(rng() % 9, 8), rng());
        std::ostringstream out;
        io::write_graph(out, g);
        EXPECT_EQ(parse(out.str()), g);
    }
}

TEST(LoadGraph, FilesAndSpecs) {
    const TempFile file("4 4\n0 1\n1 2\n2 3\n3 0\n");
    const auto loaded = io::load_graph(file.path());
    EXPECT_EQ(loaded.graph, families::cycle(4));
    EXPECT_EQ(loaded.label, file.path());

    const auto crown = io::load_graph("crown:3");
    EXPECT_EQ(crown.graph, families::crown(3));
    EXPECT_EQ(crown.label, "crown:3");
    EXPECT_FALSE(crown.outside_formula_range);
    EXPECT_TRUE(io::load_graph("crown:2").outside_formula_range);
}

TEST(LoadGraph, Errors) {
    const TempFile bad("4 4\n0 1\n1 2\n2 3\n4 4\n");
    try {
        io::load_graph(bad.path());
        FAIL() << "expected an InputError";
    } catch (const InputError& e) {
        EXPECT_EQ(std::string(e.what()), bad.path() + ": line 5: vertex index out of range for n=4");
    }
    EXPECT_THROW(io::load_graph("hypercube:3"), InputError);
    EXPECT_THROW(io::load_graph("cycle:2"), InputError);
    EXPECT_THROW(io::load_graph("/nonexistent/graph.txt"), InputError);
}

TEST(ComputeReport, KeyValueLayout) {
    const auto r = compute_wcdim(families::cycle(4), FieldSpec::rationals());
    const report::ComputeDocument doc{"cycle:4", 4, 4, {report::make_section(r, true, true)}};
    std::ostringstream out;
    report::write_kv(out, doc);
    EXPECT_EQ(out.str(),
              "document=compute\n"
              "graph=cycle:4\n"
              "n=4\n"
              "edges=4\n"
              "sections=1\n"
              "section.0.char=0\n"
              "section.0.mis_count=2\n"
              "section.0.wcdim=3\n"
              "section.0.difference_rank=1\n"
              "section.0.sum_rank=2\n"
              "section.0.basis.count=3\n"
              "section.0.basis.0=1 1 0 0\n"
              "section.0.basis.1=-1 0 1 0\n"
              "section.0.basis.2=1 0 0 1\n");
}

TEST(ComputeReport, TextForm) {
    const auto r = compute_wcdim(families::petersen(), FieldSpec::rationals());
    const report::ComputeDocument doc{"petersen", 10, 15, {report::make_section(r, false, false)}};
    std::ostringstream out;
    report::write_text(out, doc);
    EXPECT_EQ(out.str(), "graph petersen (n=10, edges=15)\n  over Q: wcdim = 0\n");
}

TEST(ComputeReport, KeyValueRoundTrip) {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(1 + rng() % 8, Probability(rng() % 9, 8), rng());
        const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec(2), FieldSpec(3)};
        report::ComputeDocument doc{describe(g), g.order(), g.size(), {}};
        for (const auto& r : compute_wcdim(g, fields)) {
            doc.sections.push_back(report::make_section(r, trial % 2 == 0, trial % 3 == 0));
        }
        std::ostringstream out;
        report::write_kv(out, doc);
        std::istringstream in(out.str());
        EXPECT_EQ(report::read_compute_kv(in), doc);
    }
}

TEST(ComputeReport, RationalBasisEntriesRoundTrip) {
    report::ComputeSection s;
    s.basis = std::vector<ExactVector>{{mpq_class(1, 2), mpq_class(-3, 7), mpq_class(0)}};
    const report::ComputeDocument doc{"x", 3, 0, {s}};
    std::ostringstream out;
    report::write_kv(out, doc);
    EXPECT_NE(out.str().find("section.0.basis.0=1/2 -3/7 0\n"), std::string::npos);
    std::istringstream in(out.str());
    EXPECT_EQ(report::read_compute_kv(in), doc);
}

TEST(VerifyReport, KeyValueRoundTripAndDeterminism) {
    auto cfg = verify::SuiteConfig::none();
    cfg.crown_max_n = 5;
    cfg.blowup_trials = 5;
    const auto checks = verify::run_suite(cfg);
    std::vector<verify::CheckReport> all = checks;
    all.push_back(verify::check_lex(families::cycle(4), families::complete(2), verify::fields({0})));
    all.push_back(verify::check_family(families::parse_family("crown:2"), verify::fields({0})));
    const report::VerifyDocument doc{"mixed", 1, all};

    std::ostringstream a;
    report::write_kv(a, doc);
    std::istringstream in(a.str());
    EXPECT_EQ(report::read_verify_kv(in), doc);
    EXPECT_NE(a.str().find("failed=1\nskipped=1\n"), std::string::npos);

    std::ostringstream first, second;
    report::write_kv(first, report::VerifyDocument{"suite", 1, checks});
    report::write_kv(second, report::VerifyDocument{"suite", 1, verify::run_suite(cfg)});
    EXPECT_EQ(first.str(), second.str());
}

TEST(VerifyReport, TextForm) {
    const report::VerifyDocument doc{
        "family crown", 1, {verify::check_family(families::parse_family("crown:4"), verify::fields({0, 2}))}};
    std::ostringstream out;
    report::write_text(out, doc);
    EXPECT_EQ(out.str(),
              "verify family crown (seed 1)\n"
              "PASS  family        crown:4  chars=0,2  predicted=3,4  engine=3,4\n"
              "passed 1, failed 0, skipped 0\n");
}

TEST(Reports, RejectMalformedInput) {
    std::istringstream wrong("document=verify\n");
    EXPECT_THROW(report::read_compute_kv(wrong), InputError);
    std::istringstream no_eq("document=compute\ngraph\n");
    EXPECT_THROW(report::read_compute_kv(no_eq), InputError);
    std::istringstream missing("document=compute\ngraph=x\nn=1\nedges=0\nsections=1\n");
    EXPECT_THROW(report::read_compute_kv(missing), InputError);
    std::istringstream bad_num("document=compute\ngraph=x\nn=one\nedges=0\nsections=0\n");
    EXPECT_THROW(report::read_compute_kv(bad_num), InputError);
}
