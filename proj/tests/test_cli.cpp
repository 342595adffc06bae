#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"

using epsmac::cli::run;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, PolysText) {
    const Result r = call({"polys", "--n", "1", "--k", "1", "--eps", "-1", "--bound", "1", "--format", "text"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("F[1] = x1 - 1 + x1^-1"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("F[0] = 1"), std::string::npos);
}

TEST(Cli, VerifyPasses) {
    const Result r = call({"verify", "--n", "2", "--k", "1", "--eps", "-1", "--bound", "3"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("OK"), std::string::npos);
}

TEST(Cli, VerifyClassicalAndRankOne) {
    EXPECT_EQ(call({"verify", "--n", "2", "--k", "2", "--eps", "+1", "--bound", "3"}).code, 0);
    EXPECT_EQ(call({"verify", "--n", "1", "--k", "1", "--eps", "-1", "--bound", "3"}).code, 0);
}

TEST(Cli, VerifyKZeroSkipsSeparation) {
    const Result r = call({"verify", "--n", "1", "--k", "0", "--eps", "-1", "--bound", "2", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    bool seen = false;
    for (const auto& c : j["checks"])
        if (c["name"] == "eigenvalue separation") {
            seen = true;
            EXPECT_EQ(c["status"], "skipped");
        }
    EXPECT_TRUE(seen);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(call({"polys", "--n", "0"}).code, 2);
    EXPECT_EQ(call({"polys", "--n", "1", "--eps", "2"}).code, 2);
    EXPECT_EQ(call({"polys", "--k", "-1"}).code, 2);
    EXPECT_EQ(call({"polys", "--bogus"}).code, 2);
    EXPECT_EQ(call({"nosuch"}).code, 2);
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"polys", "--n", "7"}).code, 2);
    EXPECT_EQ(call({"char", "--n", "2", "--lambda", "0,1"}).code, 2);
    EXPECT_EQ(call({"char", "--n", "2", "--lambda", "1"}).code, 2);
    const Result r = call({"polys", "--n", "0"});
    EXPECT_FALSE(r.err.empty());
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ForceLiftsWeylGuard) {
    // n = 6 has |W| = 46080 > 10^4.
    EXPECT_EQ(call({"kernel", "--n", "6", "--k", "0"}).code, 2);
    EXPECT_EQ(call({"kernel", "--n", "6", "--k", "0", "--force"}).code, 0);
}

TEST(Cli, JsonIsDeterministicAndVersioned) {
    const std::vector<std::string> args = {"polys", "--n", "2", "--k", "1", "--eps", "+1", "--bound", "2", "--format", "json"};
    const Result a = call(args), b = call(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const json j = json::parse(a.out);
    EXPECT_EQ(j["schema"], "eps-macdonald/1");
    EXPECT_EQ(j["config"]["eps"], 1);
    EXPECT_EQ(j["entries"].size(), 4u);
    const Result c = call({"polys", "--n", "2", "--k", "1", "--eps", "+1", "--bound", "2", "--format", "json", "--jobs", "3"});
    EXPECT_EQ(c.out, a.out);
}

TEST(Cli, Gram) {
    const Result r = call({"gram", "--n", "1", "--k", "1", "--eps", "-1", "--bound", "1", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    ASSERT_EQ(j["gram_F"].size(), 2u);
    EXPECT_EQ(j["gram_F"][0][1]["num"], json::array());
    EXPECT_EQ(j["gram_F"][1][1]["num"], json::array({"2/1"}));
    EXPECT_EQ(j["gram_m"][1][0]["num"], json::array({"2/1"}));
}

TEST(Cli, Eigen) {
    const Result r = call({"eigen", "--n", "2", "--k", "2", "--eps", "-1", "--bound", "2", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(json::parse(r.out)["ok"].get<bool>());
}

TEST(Cli, CharAndCorrespond) {
    const Result o = call({"char", "--algebra", "o", "--n", "1", "--lambda", "1"});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("ch[1] = x1 + 1 + x1^-1"), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("dim = 3"), std::string::npos) << o.out;
    const Result s = call({"char", "--algebra", "osp", "--n", "1", "--lambda", "1", "--format", "json"});
    EXPECT_EQ(json::parse(s.out)["algebra"], "osp");
    const Result t = call({"correspond", "--n", "2", "--bound", "2", "--format", "json"});
    EXPECT_EQ(t.code, 0);
    const json j = json::parse(t.out);
    EXPECT_EQ(j["table"].size(), 4u);
    for (const auto& row : j["table"]) EXPECT_TRUE(row["match"].get<bool>());
}

TEST(Cli, KernelText) {
    const Result r = call({"kernel", "--n", "1", "--k", "1", "--eps", "-1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Delta = x1 + 2 + x1^-1"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("delta = x1^1/2 + x1^-1/2"), std::string::npos) << r.out;
}

TEST(Cli, OutWritesFile) {
    const std::string path = ::testing::TempDir() + "epsmac_cli_out.json";
    const Result r = call({"kernel", "--n", "1", "--format", "json", "--out", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(json::parse(ss.str())["command"], "kernel");
    std::remove(path.c_str());
}

TEST(Cli, Help) {
    const Result r = call({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("polys"), std::string::npos);
}
