// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <l0/checks.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sys/wait.h>
#include <unistd.h>

namespace {

using namespace l0;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const std::string & name, bool ok, const std::string & detail)
{
    if (! ok)
        ++failures;
    std::cout << (ok ? "PASS " : "FAIL ") << name << " -- " << detail << std::endl;
}

std::string summary(const checks::CheckResult & r)
{
    std::string s = std::to_string(r.trials) + " trials, " + std::to_string(r.violations) + " violations";
    if (! r.passed && ! r.detail.empty())
        s += " (" + r.detail + ")";
    return s;
}

/// Runs the checks, times them, and reports one combined line.
template <typename... F>
void criterion(const std::string & name, double limit_seconds, F &&... run)
{
    bool ok = true;
    std::string detail;
    auto start = Clock::now();
    auto one = [&](auto && f) {
        checks::CheckResult r;
        try {
            r = f();
        }
        catch (const std::exception & e) {
            r.passed = false;
            r.violations = 1;
            r.detail = std::string("exception: ") + e.what();
        }
        ok = ok && r.passed;
        detail += (detail.empty() ? "" : "; ") + r.name + ": " + summary(r);
    };
    (one(run), ...);
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "; %.3f s", secs);
    detail += buf;
    if (limit_seconds > 0 && secs >= limit_seconds) {
        ok = false;
        detail += " exceeds " + std::to_string(limit_seconds) + " s";
    }
    report(name, ok, detail);
}

std::pair<int, std::string> run_cli(const std::string & args)
{
    std::string out;
    FILE * pipe = popen((std::string(L0KIT_CLI) + " " + args + " 2>&1").c_str(), "r");
    if (! pipe)
        return {-1, out};
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

} // namespace

int main()
{
    const checks::Config cfg{};
    std::cout << "seed " << cfg.seed << std::endl;

    criterion("gadget-recursion", 1.0, [&] { return checks::gadget_recursion(cfg, 50, 10); });
    criterion("odd-distance", 0, [&] { return checks::odd_distance(cfg, 24, 8); });
    criterion("phi-collapse", 0, [&] { return checks::phi_collapse(cfg, 5, 500, 10); });
    criterion("superset-and-cover-colouring", 0, [&] { return checks::superset_colouring(cfg); },
        [&] { return checks::cover_colouring(cfg, 200); });
    criterion("small-theorem", 0, [&] { return checks::small_theorem(cfg, 5); });
    criterion("profile-oracle", 0, [&] { return checks::profile_oracle(cfg, 400, 5, 3); },
        [&] {
            checks::Tally t("homset", "triangle_count");
            t.trial();
            auto k3 = std::make_shared<const WitnessedGraph>(oracle::complete(3));
            auto n = count(all_homs(std::make_shared<const PathGadget>(ParamPrefix{1}), k3));
            t.expect(n == 24, [&] { return "count is " + n.str(); });
            return t.finish();
        });
    criterion("extension-lemmas", 0, [&] { return checks::extension_lemmas(cfg, 5); });
    criterion("dichotomy-soundness", 10.0, [&] { return checks::dichotomy_soundness(cfg, 5, 3, 6); });
    criterion("limit-graph-adjacency", 0, [&] { return checks::lc_adjacency(cfg, 1000, 12); });
    criterion("equivalence-towers", 0, [&] { return checks::identity_towers(cfg, 6, {1, 3, 5}); },
        [&] { return checks::planner(cfg, 60); });

    {
        auto path = std::filesystem::temp_directory_path() / ("l0kit_accept_" + std::to_string(::getpid()) + ".txt");
        std::ofstream(path) << "a b\nb c\nc a\n";
        auto d1 = run_cli("dichotomy --graph " + path.string() + " --depth 5");
        auto d2 = run_cli("dichotomy --graph " + path.string() + " --depth 5");
        auto c1 = run_cli("check --seed 7");
        auto c2 = run_cli("check --seed 7");
        std::filesystem::remove(path);
        bool ok = d1.first == 0 && c1.first == 0 && d1 == d2 && c1 == c2;
        report("determinism", ok,
            "dichotomy " + std::to_string(d1.second.size()) + " bytes (exit " + std::to_string(d1.first) +
                "), check " + std::to_string(c1.second.size()) + " bytes (exit " + std::to_string(c1.first) + ")" +
                (d1 == d2 && c1 == c2 ? ", identical" : ", outputs differ"));
    }

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
