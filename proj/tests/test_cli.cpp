#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "affsat/cli_core.hpp"

using namespace affsat;

namespace {

RunConfig smallA1() {
    RunConfig cfg;
    cfg.cartanType = "A1";
    cfg.depth = 3;
    cfg.vmin = 0;
    cfg.vmax = 8;
    cfg.shellBudget = 20;
    return cfg;
}

} // namespace

TEST_CASE("config validation and q parsing") {
    RunConfig cfg = smallA1();
    CHECK(!cfg.parseQ().has_value());
    cfg.q = "3";
    CHECK(*cfg.parseQ() == BigRat(3));
    cfg.q = "7/2";
    CHECK(*cfg.parseQ() == BigRat(7, 2));
    cfg.q = "zebra";
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.q = "sym";
    cfg.shellBudget = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("config precedence: cli over file over env") {
    RunConfig cli = smallA1();
    cli.depth = 7;
    std::string path = "/tmp/affsat_test_config.txt";
    {
        std::ofstream f(path);
        f << "# comment\n";
        f << "depth = 5\n";
        f << "shells = 11\n";
    }
    setenv("AFFSAT_DEPTH", "2", 1);
    setenv("AFFSAT_SHELLS", "9", 1);
    setenv("AFFSAT_VMAX", "12", 1);
    RunConfig merged = mergeConfigSources(cli, path, {"depth"});
    CHECK(merged.depth == 7);        // cli wins
    CHECK(merged.shellBudget == 11); // file beats env
    CHECK(merged.vmax == 12);        // env fills the rest
    unsetenv("AFFSAT_DEPTH");
    unsetenv("AFFSAT_SHELLS");
    unsetenv("AFFSAT_VMAX");
    std::remove(path.c_str());
}

TEST_CASE("cmdSatake: zero coweight and route agreement") {
    RunConfig cfg = smallA1();
    cfg.q = "3";
    std::ostringstream out;
    int rc = cmdSatake(cfg, R"({"c":0,"finite":[0],"d":0})", out);
    CHECK(rc == kOk);
    Json doc = Json::parse(out.str());
    CHECK(doc.at("result").at("agree").get<bool>());
    const Json& terms = doc.at("result").at("disassembly").at("terms");
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].at("coeff").get<std::string>() == "1");
}

TEST_CASE("cmdSatake: malformed input exits via exception") {
    RunConfig cfg = smallA1();
    std::ostringstream out;
    CHECK_THROWS(cmdSatake(cfg, R"({"c":0,"finite":[0,0],"d":0})", out)); // wrong rank
    CHECK_THROWS(cmdSatake(cfg, "not json", out));
    CHECK_THROWS(cmdSatake(cfg, R"({"c":0,"finite":[1],"d":0})", out)); // non-dominant
}

TEST_CASE("cmdJfun routes agree") {
    RunConfig cfg = smallA1();
    cfg.depth = 6;
    std::ostringstream out;
    int rc = cmdJfun(cfg, R"({"c":0,"finite":[1],"d":2})", "[1,2]", out);
    CHECK(rc == kOk);
    Json doc = Json::parse(out.str());
    CHECK(doc.at("result").at("agree").get<bool>());
}

TEST_CASE("cmdIdentities") {
    RunConfig cfg = smallA1();
    cfg.depth = 4;
    std::ostringstream out;
    CHECK(cmdIdentities(cfg, "cb", out) == kOk);
    CHECK(cmdIdentities(cfg, "hecke", out) == kOk);
    CHECK(cmdIdentities(cfg, "poincare", out) == kOk);
    CHECK_THROWS_AS(cmdIdentities(cfg, "nope", out), std::invalid_argument);
}

TEST_CASE("cmdEnumerate") {
    RunConfig cfg = smallA1();
    std::ostringstream out;
    CHECK(cmdEnumerate(cfg, "weyl", 4, "", out) == kOk);
    Json doc = Json::parse(out.str());
    CHECK(doc.at("result").at("total").get<long long>() == 9); // 1+2+2+2+2
    std::ostringstream out2;
    CHECK(cmdEnumerate(cfg, "roots", 1, "", out2) == kOk);
    Json doc2 = Json::parse(out2.str());
    CHECK(doc2.at("result").at("count").get<long long>() == 3);
    // identity element: empty inversion sets
    std::ostringstream out3;
    CHECK(cmdEnumerate(cfg, "affroots", 2, R"({"word":[],"coweight":{"c":0,"finite":[0],"d":1}})",
                       out3) == kOk);
    Json doc3 = Json::parse(out3.str());
    CHECK(doc3.at("result").at("inversions").at("cardinalities")[0].get<int>() == 0);
    // budget exceeded
    std::ostringstream out4;
    CHECK(cmdEnumerate(cfg, "weyl", 50, "", out4) == kBudget);
}

TEST_CASE("cmdTheta") {
    RunConfig cfg = smallA1();
    std::ostringstream out;
    CHECK(cmdTheta(cfg, R"({"c":0,"finite":[-1],"d":2})", 0, out) == kOk);
    Json doc = Json::parse(out.str());
    CHECK(doc.at("result").at("pass").get<bool>());
    std::ostringstream out2;
    CHECK(cmdTheta(cfg, "", 4, out2) == kOk);
}

TEST_CASE("corpus check: empty, fresh and stale") {
    namespace fs = std::filesystem;
    std::string dir = "/tmp/affsat_test_corpus";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::ostringstream out0;
    CHECK(cmdCorpusCheck(dir, out0) == kOk); // empty corpus passes
    // write a golden file through the same path the tool uses
    RunConfig cfg = smallA1();
    cfg.q = "3";
    {
        Coweight lam{0, IVec{1}, 2};
        Json doc = satakeDocument(cfg, lam);
        std::ofstream f(dir + "/a1.json");
        f << canonicalDump(doc) << "\n";
    }
    std::ostringstream out1;
    CHECK(cmdCorpusCheck(dir, out1) == kOk);
    // corrupt one coefficient: the checker must fail and point at a term
    {
        std::ifstream f(dir + "/a1.json");
        Json doc = Json::parse(f);
        doc["result"]["disassembly"]["terms"][0]["coeff"] = "999";
        std::ofstream g(dir + "/a1.json");
        g << canonicalDump(doc) << "\n";
    }
    std::ostringstream out2;
    CHECK(cmdCorpusCheck(dir, out2) == kMismatch);
    Json rep = Json::parse(out2.str());
    CHECK_FALSE(rep.at("result").at("pass").get<bool>());
    CHECK(rep.at("result").at("files")[0].contains("firstDiff"));
    fs::remove_all(dir);
}

TEST_CASE("other simply-laced types work through the commands") {
    RunConfig cfg;
    cfg.cartanType = "D4";
    cfg.depth = 2;
    cfg.shellBudget = 12;
    std::ostringstream out;
    // central coweight: tautological route agreement, exercises D-type data
    int rc = cmdSatake(cfg, R"({"c":1,"finite":[0,0,0,0],"d":0})", out);
    CHECK(rc == kOk);
    Json doc = Json::parse(out.str());
    CHECK(doc.at("result").at("agree").get<bool>());
    std::ostringstream out2;
    CHECK(cmdEnumerate(cfg, "roots", 0, "", out2) == kOk);
    CHECK(Json::parse(out2.str()).at("result").at("count").get<long long>() == 12);
}

TEST_CASE("binary-level exit codes") {
    auto run = [](const std::string& args) {
        std::string cmd = std::string(AFFSAT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
        int rc = std::system(cmd.c_str());
        return WEXITSTATUS(rc);
    };
    CHECK(run("satake --type A1 --lambda '{\"c\":0,\"finite\":[0],\"d\":0}' --q 2") == 0);
    // malformed JSON: input error
    CHECK(run("satake --type A1 --lambda 'not json'") == 1);
    // non-dominant coweight: input error
    CHECK(run("satake --type A1 --lambda '{\"c\":0,\"finite\":[1],\"d\":0}'") == 1);
    // budget exhaustion: shell budget too small to stabilize
    CHECK(run("satake --type A1 --lambda '{\"c\":0,\"finite\":[1],\"d\":2}' --shells 2") == 3);
    // enumeration budget
    CHECK(run("enumerate --what weyl --bound 50") == 3);
}
