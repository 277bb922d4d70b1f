#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rotsys/catalog.hpp"
#include "rotsys/cli.hpp"
#include "rotsys/corpus_io.hpp"
#include "rotsys/geometry.hpp"

using namespace rotsys;

namespace {

cli::RunConfig base(const std::string& cmd) {
    cli::RunConfig cfg;
    cfg.command = cmd;
    return cfg;
}

int run_quiet(const cli::RunConfig& cfg, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    int rc = cli::run(cfg, out, err);
    if (out_text) *out_text = out.str() + err.str();
    return rc;
}

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "rotsys_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("config validation rejects contradictions before any work") {
    cli::RunConfig cfg = base("find");
    cfg.n = 6;
    cfg.unextendable_hc = true;  // natural still on
    CHECK_THROWS_AS(cli::validate(cfg), ValidationError);

    cfg = base("find");
    cfg.n = 6;
    cfg.forbid_hc = true;
    cfg.all_edges_crossed = true;
    CHECK_THROWS_AS(cli::validate(cfg), ValidationError);

    cfg = base("find");
    cfg.n = 6;
    cfg.v4 = true;
    cfg.forbid_hc = true;
    CHECK_THROWS_AS(cli::validate(cfg), ValidationError);

    cfg = base("find");
    cfg.n = 6;
    cfg.convex = true;
    cfg.v5 = true;
    CHECK_THROWS_AS(cli::validate(cfg), ValidationError);

    cfg = base("find");
    cfg.n = 6;
    cfg.natural = false;
    cfg.canonical_only = true;
    CHECK_THROWS_AS(cli::validate(cfg), ValidationError);

    cfg = base("find");
    cfg.n = 6;
    cfg.matching_k = 4;  // 2k > n
    CHECK_THROWS_AS(cli::validate(cfg), ValidationError);

    cfg = base("reproduce");
    cfg.suite = "no-such-suite";
    CHECK_THROWS_AS(cli::validate(cfg), ValidationError);

    // Invalid configs exit with the configuration code through run().
    cfg = base("find");
    cfg.n = 6;
    cfg.unextendable_hc = true;
    CHECK(run_quiet(cfg) == 2);
}

TEST_CASE("find solves, enumerates and respects expectations") {
    cli::RunConfig cfg = base("find");
    cfg.n = 5;
    cfg.enumerate = true;
    cfg.canonical_only = true;
    std::string text;
    CHECK(run_quiet(cfg, &text) == 0);
    CHECK(text.find("(5 canonical)") != std::string::npos);

    cfg = base("find");
    cfg.n = 5;
    cfg.forbid_hc = true;
    cfg.expect = "unsat";
    CHECK(run_quiet(cfg) == 0);
    cfg.expect = "sat";
    CHECK(run_quiet(cfg) == 1);
}

TEST_CASE("instance files are byte-identical across runs") {
    auto p1 = (temp_dir() / "a.cnf").string();
    auto p2 = (temp_dir() / "b.cnf").string();
    for (const auto& path : {p1, p2}) {
        cli::RunConfig cfg = base("find");
        cfg.n = 5;
        cfg.forbid_hc = true;
        cfg.cnf_out = path;
        CHECK(run_quiet(cfg) == 0);
    }
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    CHECK(slurp(p1) == slurp(p2));
    CHECK(!slurp(p1).empty());
    CHECK(std::filesystem::exists(p1 + ".vars"));
}

TEST_CASE("drawability subcommand classifies a corpus") {
    auto corpus = (temp_dir() / "five.jsonl").string();
    const ObstructionCatalog& cat = ObstructionCatalog::builtin();
    write_corpus_file(corpus, {cat.convex_C5, cat.pi5A, cat.twisted_T5, cat.pi5B});
    cli::RunConfig cfg = base("drawability");
    cfg.corpus_in = corpus;
    std::string text;
    CHECK(run_quiet(cfg, &text) == 0);
    CHECK(text.find("1 drawable") != std::string::npos);
    CHECK(text.find("2 non-drawable") != std::string::npos);
    CHECK(text.find("DISAGREES") == std::string::npos);
}

TEST_CASE("hamcycle and hampath verify corpora and geometric inputs") {
    cli::RunConfig cfg = base("hamcycle");
    cfg.random_n = 30;
    cfg.seed = 12;
    cfg.report_out = (temp_dir() / "hc.jsonl").string();
    std::string text;
    CHECK(run_quiet(cfg, &text) == 0);
    CHECK(text.find("failures: 0") != std::string::npos);
    std::ifstream rep(cfg.report_out);
    int lines = 0;
    std::string line;
    while (std::getline(rep, line)) ++lines;
    CHECK(lines == 30);

    auto corpus = (temp_dir() / "c5.jsonl").string();
    write_corpus_file(corpus, {ObstructionCatalog::builtin().convex_C5});
    cli::RunConfig hp = base("hampath");
    hp.corpus_in = corpus;
    hp.all_edges = true;
    CHECK(run_quiet(hp, &text) == 0);
    CHECK(text.find("failures: 0") != std::string::npos);

    // A non-convex corpus reports failures through the exit code.
    write_corpus_file(corpus, {ObstructionCatalog::builtin().twisted_T5});
    cli::RunConfig bad = base("hamcycle");
    bad.corpus_in = corpus;
    CHECK(run_quiet(bad) == 1);
}

TEST_CASE("certify produces checkable certificates") {
    cli::RunConfig cfg = base("certify");
    cfg.n = 5;
    cfg.forbid_hc = true;
    cfg.certificate_dir = (temp_dir() / "certs").string();
    std::string text;
    CHECK(run_quiet(cfg, &text) == 0);
    CHECK(text.find("verified") != std::string::npos);

    cli::RunConfig sat_cfg = base("certify");
    sat_cfg.n = 5;
    sat_cfg.certificate_dir = cfg.certificate_dir;
    CHECK(run_quiet(sat_cfg) == 1);  // satisfiable: nothing to certify
}

TEST_CASE("reproduce runs registered suites") {
    cli::RunConfig cfg = base("reproduce");
    cfg.suite = "planarity";
    std::string text;
    CHECK(run_quiet(cfg, &text) == 0);
    CHECK(text.find("PASS") != std::string::npos);
}
