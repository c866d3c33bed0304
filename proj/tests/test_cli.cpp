#include <json.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string & args)
{
    Run r;
    std::string cmd = std::string(L0KIT_CLI) + " " + args + " 2>/dev/null";
    FILE * pipe = popen(cmd.c_str(), "r");
    if (! pipe)
        return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string write_temp(const std::string & name, const std::string & text)
{
    auto path = std::filesystem::temp_directory_path() / ("l0kit_cli_" + std::to_string(::getpid()) + "_" + name);
    std::ofstream(path) << text;
    return path.string();
}

std::size_t occurrences(const std::string & hay, const std::string & needle)
{
    std::size_t n = 0;
    for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1))
        ++n;
    return n;
}

} // namespace

TEST(Cli, GadgetFormats)
{
    auto dot = run("gadget --c 1,3,5 --format dot");
    ASSERT_EQ(dot.status, 0);
    EXPECT_EQ(occurrences(dot.out, " -- "), 29u);

    auto json = run("gadget --c 1,3,5 --format json");
    ASSERT_EQ(json.status, 0);
    auto j = nlohmann::json::parse(json.out);
    EXPECT_EQ(j["vertices"].size(), 30u);

    auto tikz = run("gadget --c 1 --format tikz");
    ASSERT_EQ(tikz.status, 0);
    EXPECT_EQ(occurrences(tikz.out, "\\node"), 4u);

    EXPECT_EQ(run("gadget --c 1 --format text").out, "p0^0 -- p0 -- p1 -- p0^1\n");
    EXPECT_EQ(run("gadget --c 1,0").status, 2);
}

TEST(Cli, DichotomyBranches)
{
    auto c4 = write_temp("c4.txt", "a b\nb c\nc d\nd a\n");
    auto k3 = write_temp("k3.txt", "a b\nb c\nc a\n");
    auto bad = write_temp("bad.json", "{\"vertices\": [");

    auto col = nlohmann::json::parse(run("dichotomy --graph " + c4).out);
    EXPECT_TRUE(col.contains("coloring"));
    EXPECT_FALSE(col.contains("tower"));

    auto r = run("dichotomy --graph " + k3 + " --depth 2 --schedule 1,3");
    ASSERT_EQ(r.status, 0);
    auto tower = nlohmann::json::parse(r.out);
    EXPECT_EQ(tower["tower"]["c"], nlohmann::json::parse("[1,3]"));
    EXPECT_TRUE(tower["verified"].get<bool>());

    EXPECT_EQ(run("dichotomy --graph " + bad).status, 2);
    EXPECT_EQ(run("dichotomy --graph /nonexistent/graph.txt").status, 2);
    for (const auto & p : {c4, k3, bad})
        std::filesystem::remove(p);
}

TEST(Cli, EquivalenceAndGap)
{
    auto ok = run("equiv --c 3,5 --d 1,3,5,7 --depth 2");
    ASSERT_EQ(ok.status, 0);
    EXPECT_TRUE(nlohmann::json::parse(ok.out)["verified"].get<bool>());
    auto gap = run("equiv --c 1 --d 5,5,5 --depth 1");
    EXPECT_EQ(gap.status, 1);
    EXPECT_TRUE(nlohmann::json::parse(gap.out).contains("gap"));
}

TEST(Cli, LimitGraphNeighbours)
{
    auto r = run("lc --c 1,3,5,7 --vertex 0:0::0 --other 1:0::0");
    ASSERT_EQ(r.status, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["neighbours"].size(), 1u);
    EXPECT_TRUE(j["adjacent"].get<bool>());
    EXPECT_EQ(run("lc --c 1 --vertex 0:0").status, 2);
}

TEST(Cli, CheckSuiteAndOracleFlag)
{
    auto plain = run("check --seed 7 --only homset");
    ASSERT_EQ(plain.status, 0);
    auto with_oracle = run("check --seed 7 --only homset --oracle");
    ASSERT_EQ(with_oracle.status, 0);
    auto a = nlohmann::json::parse(plain.out);
    auto b = nlohmann::json::parse(with_oracle.out);
    ASSERT_EQ(a["checks"].size(), b["checks"].size());
    for (std::size_t i = 0; i < a["checks"].size(); ++i) {
        EXPECT_EQ(a["checks"][i]["name"], b["checks"][i]["name"]);
        EXPECT_EQ(a["checks"][i]["passed"], b["checks"][i]["passed"]);
    }
    EXPECT_EQ(run("check --only nonsense").status, 2);
}

TEST(Cli, RepeatRunsAreIdentical)
{
    auto k3 = write_temp("k3_repeat.txt", "a b\nb c\nc a\n");
    EXPECT_EQ(run("dichotomy --graph " + k3 + " --depth 4").out, run("dichotomy --graph " + k3 + " --depth 4").out);
    EXPECT_EQ(run("check --seed 11 --only gadget").out, run("check --seed 11 --only gadget").out);
    std::filesystem::remove(k3);
}
