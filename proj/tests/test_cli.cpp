#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "frob/cli.hpp"
#include "frob/json_io.hpp"
#include "frob/multisym.hpp"
#include "frob/poly.hpp"
#include "frob/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using frob::Json;
using frob::Poly;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = frob::cli_run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& rel) {
    return std::string(FROB_FIXTURE_DIR) + "/" + rel;
}

// Scratch files live next to the build tree, never in the fixture corpus.
std::string scratch(const std::string& name, const std::string& content) {
    std::string path = std::string(FROB_FIXTURE_DIR) + "/../build/" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

Json masked_report(const std::string& text) {
    Json j = Json::parse(text);
    for (auto& e : j.at("entries")) e["elapsed_ms"] = 0;
    return j;
}

} // namespace

TEST_CASE("the moment polynomial prints verbatim") {
    CliResult r = run({"fn", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "s1^3 - 3*s1*s2 + 2*s3\n");
    CHECK(r.err.empty());

    CliResult j = run({"--format", "json", "fn", "--n", "3"});
    CHECK(j.code == 0);
    CHECK(Json::parse(j.out) ==
          Json{{"n", 3}, {"polynomial", "s1^3 - 3*s1*s2 + 2*s3"}});
}

TEST_CASE("decompose round trips the documented example") {
    std::string path =
        scratch("cli_dec_good.json", R"({"m": 3, "n": 2, "values": ["1", "1", "0"]})");
    CliResult r = run({"--format", "json", "decompose", "--input", path});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out) == Json{{"multiset", Json{{"p1", 1}, {"p2", 1}}}});

    CliResult t = run({"decompose", "--input", path});
    CHECK(t.code == 0);
    CHECK(t.out == "{p1, p2}\n");
    std::remove(path.c_str());
}

TEST_CASE("an impostor functional fails with the nonvanishing form as witness") {
    std::string path =
        scratch("cli_dec_bad.json", R"({"m": 2, "n": 2, "values": ["3", "-1"]})");
    CliResult r = run({"decompose", "--input", path});
    CHECK(r.code == 1);
    CHECK(r.out.find("NotAnNHomomorphism") != std::string::npos);
    CHECK(r.out.find("Phi_3") != std::string::npos);

    CliResult j = run({"--format", "json", "decompose", "--input", path});
    CHECK(j.code == 1);
    Json doc = Json::parse(j.out);
    CHECK(doc.at("error").at("code") == "NotAnNHomomorphism");
    CHECK(std::string(doc.at("error").at("detail")).find("Phi_3") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("group determinants print from fixture files") {
    CliResult r = run({"group", "det", "--input", fixture("groups/c2.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "x1^2 - x2^2\n");

    CliResult c3 = run({"group", "det", "--input", fixture("groups/c3.json")});
    CHECK(c3.code == 0);
    CHECK(Poly::parse(c3.out) == Poly::parse("x1^3 + x2^3 + x3^3 - 3*x1*x2*x3"));
}

TEST_CASE("group validation separates the three exit classes") {
    CliResult ok = run({"group", "validate", "--input", fixture("groups/q8.json")});
    CHECK(ok.code == 0);
    CHECK(ok.out == "valid nonabelian group of order 8\n");

    std::string latin = scratch(
        "cli_bad_group.json",
        R"({"order": 2, "labels": ["e", "g"], "table": [[1, 2], [2, 2]]})");
    CliResult bad = run({"group", "validate", "--input", latin});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("NotLatin") != std::string::npos);
    std::remove(latin.c_str());

    CliResult missing = run({"group", "validate", "--input", "no/such/file.json"});
    CHECK(missing.code == 2);
    CHECK(missing.out.find("ParseError") != std::string::npos);
}

TEST_CASE("isomorphism answers through exit codes") {
    CliResult yes = run({"group", "isomorphic", fixture("groups/s3.json"),
                         fixture("groups/s3.json")});
    CHECK(yes.code == 0);
    CHECK(yes.out == "isomorphic\n");

    CliResult no = run({"--format", "json", "group", "isomorphic",
                        fixture("groups/c4.json"), fixture("groups/c2xc2.json")});
    CHECK(no.code == 1);
    CHECK(Json::parse(no.out) == Json{{"isomorphic", false}});
}

TEST_CASE("factorization verifies the fixture tables") {
    CliResult r = run({"group", "factorize", "--input", fixture("groups/c3.json"),
                       "--chartable", fixture("chars/c3.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "factorization verified\n");
}

TEST_CASE("characters export and feed back into reconstruction") {
    Json doc;
    for (unsigned k = 1; k <= 3; ++k) {
        CliResult r = run({"--format", "json", "group", "kchar", "--input",
                           fixture("groups/s3.json"), "--k", std::to_string(k)});
        REQUIRE(r.code == 0);
        doc["k" + std::to_string(k)] = Json::parse(r.out);
    }
    std::string path = scratch("cli_kchars.json", doc.dump());
    CliResult rec = run({"--format", "json", "group", "reconstruct", "--from-kchars", path});
    CHECK(rec.code == 0);
    Json parsed = Json::parse(rec.out);
    CHECK(parsed.at("count") == 2);
    CHECK(parsed.at("tables").size() == 2);
    std::remove(path.c_str());
}

TEST_CASE("operator and gluing suites run from the command line") {
    CliResult ops = run({"ops-check", "--n-max", "4"});
    CHECK(ops.code == 0);
    CHECK(ops.out.find("0 failed") != std::string::npos);

    CliResult glue = run({"--format", "json", "lemma10", "--max-total", "4"});
    CHECK(glue.code == 0);
    CHECK(Json::parse(glue.out).at("all_pass") == true);
}

TEST_CASE("phi evaluates basis tuples from files") {
    std::string alg = scratch("cli_alg.json",
                              R"({"dim": 2, "basis": ["d1", "d2"], "unit": ["1", "1"],
                                  "constants": [[1, 1, 1, "1"], [2, 2, 2, "1"]]})");
    std::string fun = scratch("cli_fun.json", R"({"values": ["1", "1"]})");
    CliResult r = run({"phi", "--algebra", alg, "--functional", fun, "--n", "2",
                       "--args", "1,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");

    CliResult arity = run({"phi", "--algebra", alg, "--functional", fun, "--n", "2",
                           "--args", "1,2,1"});
    CHECK(arity.code == 2);
    CHECK(arity.out.find("BadInput") != std::string::npos);

    CliResult range = run({"phi", "--algebra", alg, "--functional", fun, "--n", "1",
                           "--args", "3"});
    CHECK(range.code == 2);
    std::remove(alg.c_str());
    std::remove(fun.c_str());
}

TEST_CASE("multisym subcommands express, check, and count") {
    Poly expected = frob::express(
        Poly::parse("x1_1*x1_2"), 2, 1); // the elementary symmetric function
    std::string path = scratch("cli_poly.txt", "x1_1*x1_2\n");
    CliResult r = run({"multisym", "express", "--n", "2", "--m", "1", "--poly", path});
    CHECK(r.code == 0);
    CHECK(Poly::parse(r.out) == expected);
    std::remove(path.c_str());

    std::string skew = scratch("cli_poly2.txt", "x1_1");
    CliResult nonsym = run({"multisym", "express", "--n", "2", "--m", "1", "--poly", skew});
    CHECK(nonsym.code == 1);
    CHECK(nonsym.out.find("NotMultiSymmetric") != std::string::npos);
    std::remove(skew.c_str());

    CliResult syz = run({"multisym", "syzygy", "--n", "1", "--m", "2", "--omegas",
                         "1,0;0,1"});
    CHECK(syz.code == 0);
    CHECK(syz.out == "vanishes\n");

    CliResult zero = run({"multisym", "syzygy", "--n", "1", "--m", "2", "--omegas",
                          "0,0;0,1"});
    CHECK(zero.code == 2);
    CHECK(zero.out.find("WeightZeroIndex") != std::string::npos);

    CliResult dim = run({"multisym", "dim", "--n", "2", "--m", "2"});
    CHECK(dim.code == 0);
    CHECK(dim.out == "5\n");
}

TEST_CASE("usage problems exit with code 2 on stderr") {
    CliResult r = run({"fn"});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());

    CliResult unknown = run({"no-such-command"});
    CHECK(unknown.code == 2);

    CliResult flag = run({"fn", "--n", "3", "--bogus"});
    CHECK(flag.code == 2);
}

TEST_CASE("pure subcommands are byte-identical across runs") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"fn", "--n", "6"},
          std::vector<std::string>{"group", "det", "--input", fixture("groups/c4.json")},
          std::vector<std::string>{"--format", "json", "ops-check", "--n-max", "3"}}) {
        CliResult a = run(args);
        CliResult b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("the certificate suite reports and is stable modulo timing") {
    CliResult a = run({"--format", "json", "verify-all", "--scale", "small"});
    CHECK(a.code == 0);
    Json doc = masked_report(a.out);
    CHECK(doc.at("all_pass") == true);
    CHECK(doc.at("scale") == "small");
    CHECK(doc.at("seed") == frob::kDefaultSeed);

    // Two notes, every numbered criterion present.
    std::size_t notes = 0;
    std::set<unsigned> criteria;
    for (const auto& e : doc.at("entries")) {
        if (e.at("result") == "note")
            ++notes;
        else
            criteria.insert(e.at("criterion").get<unsigned>());
    }
    CHECK(notes == 2);
    CHECK(criteria == std::set<unsigned>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});

    CliResult b = run({"--format", "json", "verify-all", "--scale", "small"});
    CHECK(masked_report(b.out) == doc);

    CliResult seeded = run({"--format", "json", "--seed", "7", "verify-all"});
    CHECK(seeded.code == 0);
    CHECK(Json::parse(seeded.out).at("seed") == 7);

    CliResult text = run({"verify-all", "--scale", "small"});
    CHECK(text.code == 0);
    CHECK(text.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("the installed binary behaves like the library entry point") {
    std::string cmd = std::string(FROB_CLI_PATH) + " fn --n 2 > /dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
}
