#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " RAINBOW_CLI_PATH " " + args + " 2>&1";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = ::pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("rainbow_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenColourVerify) {
    ASSERT_EQ(run("gen h --r 2 --zeta 5 --out " + path("h.txt")).code, 0);
    const auto colour = run("colour " + path("h.txt") + " --mode radius --verify --out " + path("h.col") +
                            " --report " + path("h.json"));
    ASSERT_EQ(colour.code, 0) << colour.out;
    const auto report = nlohmann::json::parse(slurp(path("h.json")));
    EXPECT_EQ(report["mode"], "radius");
    EXPECT_EQ(report["verified"], true);
    EXPECT_LE(report["colours_used"].get<int>(), 8);
    const auto verify = run("verify " + path("h.txt") + " " + path("h.col"));
    EXPECT_EQ(verify.code, 0);
    EXPECT_NE(verify.out.find("RAINBOW CONNECTED"), std::string::npos);
}

TEST_F(Cli, VerifyFailureReportsWitness) {
    write("p.txt", "4 3\n0 1\n1 2\n2 3\n");
    write("p.col", "0 1 0\n1 2 1\n2 3 0\n");
    const auto res = run("verify " + path("p.txt") + " " + path("p.col"));
    EXPECT_EQ(res.code, 1);
    EXPECT_NE(res.out.find("NOT RAINBOW CONNECTED 0 3"), std::string::npos);
}

TEST_F(Cli, AutoModePicksGeneralWithBridges) {
    write("t.txt", "6 7\n0 1\n1 2\n0 2\n2 3\n3 4\n4 5\n3 5\n");
    ASSERT_EQ(run("colour " + path("t.txt") + " --out " + path("t.col") + " --report " + path("t.json")).code, 0);
    const auto report = nlohmann::json::parse(slurp(path("t.json")));
    EXPECT_EQ(report["mode"], "general-radius");
    EXPECT_EQ(report["auto_mode"], true);
    EXPECT_EQ(report["bridges"], 1);
}

TEST_F(Cli, ExitCodes) {
    write("bad.txt", "3 1\n0 5\n");
    const auto parse = run("stats " + path("bad.txt"));
    EXPECT_EQ(parse.code, 2);
    EXPECT_NE(parse.out.find("rainbow: error[parse]: line 2"), std::string::npos);
    write("bridge.txt", "2 1\n0 1\n");
    const auto pre = run("colour " + path("bridge.txt") + " --mode radius --out " + path("x"));
    EXPECT_EQ(pre.code, 3);
    EXPECT_NE(pre.out.find("error[precondition]"), std::string::npos);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("stats " + path("missing.txt")).code, 2);
    ASSERT_EQ(run("gen cycle --n 5 --out " + path("c5.txt")).code, 0);
    EXPECT_EQ(run("verify " + path("c5.txt") + " " + path("c5.txt"), "RAINBOW_MAX_VERIFY_COLOURS=0").code, 2);
}

TEST_F(Cli, ExactAndStats) {
    ASSERT_EQ(run("gen cycle --n 5 --out " + path("c5.txt")).code, 0);
    const auto exact = run("exact " + path("c5.txt") + " --out " + path("w.col"));
    EXPECT_EQ(exact.code, 0);
    EXPECT_EQ(exact.out, "3\n");
    EXPECT_EQ(run("verify " + path("c5.txt") + " " + path("w.col")).code, 0);
    ASSERT_EQ(run("gen complete --n 7 --out " + path("k7.txt")).code, 0);
    EXPECT_EQ(run("exact " + path("k7.txt")).code, 3);

    const auto stats = run("stats " + path("c5.txt") + " --iso --chordality --json");
    ASSERT_EQ(stats.code, 0);
    const auto j = nlohmann::json::parse(stats.out);
    EXPECT_EQ(j["r"], 2);
    EXPECT_EQ(j["d"], 2);
    EXPECT_EQ(j["b"], 0);
    EXPECT_EQ(j["zeta"], 5);
    EXPECT_EQ(j["chordality"], 5);
}

TEST_F(Cli, BenchSpecFile) {
    write("spec.txt", "# id family params\nb h r=2 zeta=5\na cycle n=7\nc random-tree n=6 seed=3\n");
    const auto res = run("bench " + path("spec.txt") + " --out " + path("out.csv"));
    ASSERT_EQ(res.code, 0) << res.out;
    std::istringstream csv(slurp(path("out.csv")));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line,
              "graph_id,n,m,r,d,b,zeta_bound,colours_radius,colours_diameter,lower_bound,ratio,ms_radius,ms_diameter");
    std::vector<std::string> ids;
    while (std::getline(csv, line)) ids.push_back(line.substr(0, line.find(',')));
    EXPECT_EQ(ids, (std::vector<std::string>{"a", "b", "c"}));
}
