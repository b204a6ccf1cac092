#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

// Exercises the installed cbverify binary end to end: JSON-lines schema,
// exit-status contract, byte determinism, and the hidden negative control.

using ordered_json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult r;
    std::string cmd = std::string(CBVERIFY_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream iss(s);
    std::string line;
    while (std::getline(iss, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("default grid sweep: 16 exact passes and a summary") {
    RunResult r = run_cli("verify onevar");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 17);  // 4x4 grid + summary
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        ordered_json j = ordered_json::parse(lines[i]);
        CHECK(j["identity"] == "onevar");
        CHECK(j["status"] == "exact-pass");
        CHECK(j["residual"] == "0");
        CHECK_FALSE(j.contains("elapsed_ms"));  // timings are opt-in
        CHECK_FALSE(j.contains("witness"));
    }
    ordered_json summary = ordered_json::parse(lines.back());
    CHECK(summary["summary"] == "verify-onevar");
    CHECK(summary["checks"] == 16);
    CHECK(summary["passed"] == 16);
    CHECK(summary["failed"] == 0);
    CHECK(summary["status"] == "pass");
}

TEST_CASE("JSON reports round-trip byte-identically") {
    RunResult r = run_cli("verify onevar --max-mn 2");
    CHECK(r.exit_code == 0);
    for (const auto& line : lines_of(r.out)) {
        ordered_json j = ordered_json::parse(line);
        CHECK(j.dump() == line);
    }
}

TEST_CASE("single-pair cluster") {
    RunResult r = run_cli("verify onevar --m 2 --n 3");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    // partition, two construction equivalences, root orders, homogeneous,
    // truncation, descent, ODE, Bezout + summary
    REQUIRE(lines.size() == 10);
    ordered_json first = ordered_json::parse(lines.front());
    CHECK(first["identity"] == "onevar");
    CHECK(first["params"] == "m=2 n=3");
    std::vector<std::string> ids;
    for (std::size_t i = 0; i + 1 < lines.size(); ++i)
        ids.push_back(ordered_json::parse(lines[i])["identity"].get<std::string>());
    CHECK(std::find(ids.begin(), ids.end(), "bezout") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "root-order") != ids.end());
}

TEST_CASE("hidden corrupt hook is a working negative control") {
    RunResult r = run_cli("verify onevar --m 1 --n 1 --corrupt");
    CHECK(r.exit_code == 1);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    ordered_json j = ordered_json::parse(lines.front());
    CHECK(j["status"] == "fail");
    CHECK(j["residual"] != "0");
    CHECK(j.contains("witness"));
    std::string w = j["witness"].get<std::string>();
    CHECK(w.find("nonzero residual") != std::string::npos);
    ordered_json summary = ordered_json::parse(lines.back());
    CHECK(summary["status"] == "fail");
    CHECK(summary["failed"] == 1);
}

TEST_CASE("multivar, pde, dirichlet, paths subcommands") {
    CHECK(run_cli("verify multivar --a 2,1").exit_code == 0);
    CHECK(run_cli("verify multivar --a 1,1,1").exit_code == 0);
    CHECK(run_cli("verify pde --a 1,1").exit_code == 0);
    CHECK(run_cli("verify dirichlet --a 1,2").exit_code == 0);
    CHECK(run_cli("verify dirichlet --a 1,0,1").exit_code == 0);
    CHECK(run_cli("verify paths --m 1 --n 2").exit_code == 0);

    RunResult pde = run_cli("verify pde --a 1,1,0");
    CHECK(pde.exit_code == 0);
    bool saw_perm = false, saw_closed = false, saw_w = false;
    for (const auto& line : lines_of(pde.out)) {
        ordered_json j = ordered_json::parse(line);
        if (!j.contains("identity")) continue;
        std::string id = j["identity"].get<std::string>();
        saw_perm |= id == "pde-permutation";
        saw_closed |= id == "coeff-closed-form";
        saw_w |= id == "pde-w-power";
    }
    CHECK(saw_perm);
    CHECK(saw_closed);
    CHECK(saw_w);
}

TEST_CASE("numeric subcommands pass at their tolerances") {
    RunResult ext = run_cli("numeric ext --m 1.7 --n 0.4+1.1i --x 0.8");
    CHECK(ext.exit_code == 0);
    auto lines = lines_of(ext.out);
    REQUIRE(lines.size() == 3);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        ordered_json j = ordered_json::parse(lines[i]);
        CHECK(j["status"] == "numeric-pass");
        CHECK(j["residual"].is_number());
        CHECK(j["residual"].get<double>() <= 1e-9);
    }

    RunResult tt = run_cli("numeric threeterm --alpha 1.5 --m 2 --n 3 --z 2+3i");
    CHECK(tt.exit_code == 0);
    auto tt_lines = lines_of(tt.out);
    REQUIRE(tt_lines.size() == 3);
    CHECK(ordered_json::parse(tt_lines[0])["identity"] == "three-term-deformed");
    CHECK(ordered_json::parse(tt_lines[1])["identity"] == "three-term-ode");
}

TEST_CASE("mc requires a seed and is byte-deterministic") {
    CHECK(run_cli("mc --m 1 --n 1 --trials 1000").exit_code == 2);  // seed missing

    RunResult a = run_cli("mc --m 4 --n 6 --x 0.3 --trials 100000 --seed 42");
    RunResult b = run_cli("mc --m 4 --n 6 --x 0.3 --trials 100000 --seed 42");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto lines = lines_of(a.out);
    REQUIRE(lines.size() == 3);
    ordered_json sum = ordered_json::parse(lines[0]);
    CHECK(sum["identity"] == "mc-exact-sum");
    CHECK(sum["residual"] == "0");
    ordered_json toss = ordered_json::parse(lines[1]);
    CHECK(toss["identity"] == "mc-coin-toss");
    CHECK(toss["params"] == "m=4 n=6 x=3/10 trials=100000 seed=42");
    CHECK(toss["status"] == "numeric-pass");
}

TEST_CASE("mc golden output for the reference seed") {
    RunResult r = run_cli("mc --m 4 --n 6 --x 0.3 --trials 1000000 --seed 42");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"identity\":\"mc-exact-sum\",\"params\":\"m=4 n=6 x=3/10 trials=1000000 seed=42\","
          "\"status\":\"exact-pass\",\"residual\":\"0\"}\n"
          "{\"identity\":\"mc-coin-toss\",\"params\":\"m=4 n=6 x=3/10 trials=1000000 seed=42\","
          "\"status\":\"numeric-pass\",\"residual\":1.1629525070947624}\n"
          "{\"summary\":\"mc\",\"checks\":2,\"passed\":2,\"failed\":0,\"status\":\"pass\"}\n");
}

TEST_CASE("deterministic output across repeated runs") {
    RunResult a = run_cli("verify onevar --max-mn 3");
    RunResult b = run_cli("verify onevar --max-mn 3");
    CHECK(a.out == b.out);
    RunResult c = run_cli("numeric ext --m 0.5+0.2i --n 1.3 --x 0.6");
    RunResult d = run_cli("numeric ext --m 0.5+0.2i --n 1.3 --x 0.6");
    CHECK(c.out == d.out);
}

TEST_CASE("--out writes the same bytes to a file") {
    std::string path = "cbverify_test_out.jsonl";
    std::remove(path.c_str());
    RunResult direct = run_cli("verify paths --max-mn 1");
    RunResult filed = run_cli("verify paths --max-mn 1 --out " + path);
    CHECK(filed.exit_code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("--timings adds elapsed_ms") {
    RunResult r = run_cli("--timings verify onevar --max-mn 1");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    ordered_json j = ordered_json::parse(lines.front());
    CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("emit renders stable text, latex and json") {
    RunResult text = run_cli("emit --identity onevar --m 1 --n 1 --format text");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("1 - 3*x^2 + 2*x^3") != std::string::npos);
    CHECK(text.out.find("3*x^2 - 2*x^3") != std::string::npos);
    CHECK(text.out.find("sum = 1") != std::string::npos);

    RunResult latex = run_cli("emit --identity onevar --m 1 --n 1 --format latex");
    CHECK(latex.exit_code == 0);
    CHECK(latex.out.find("2x^{3}") != std::string::npos);
    CHECK(latex.out.find("= 1") != std::string::npos);

    RunResult mv = run_cli("emit --identity multivar --a 0,0 --format text");
    CHECK(mv.exit_code == 0);
    CHECK(mv.out.find("(x2) + (x1) = 1") != std::string::npos);
    CHECK(mv.out.find("on x1+x2 = 1") != std::string::npos);

    RunResult tt = run_cli("emit --identity threeterm --alpha 1.5 --m 1 --n 1 --z 2+3i --format text");
    CHECK(tt.exit_code == 0);
    CHECK(tt.out.find("u3 = u1 + u2") != std::string::npos);
    CHECK(tt.out.find("alpha=1.5") != std::string::npos);

    RunResult js = run_cli("emit --identity onevar --m 1 --n 1 --format json");
    CHECK(js.exit_code == 0);
    ordered_json j = ordered_json::parse(js.out);
    CHECK(j["identity"] == "onevar");
    CHECK(j.contains("latex"));
    CHECK(j.contains("text"));

    RunResult again = run_cli("emit --identity onevar --m 1 --n 1 --format text");
    CHECK(again.out == text.out);  // stable under re-runs
}

TEST_CASE("usage and config errors exit 2") {
    CHECK(run_cli("").exit_code == 2);                                // missing subcommand
    CHECK(run_cli("verify").exit_code == 2);                          // missing sub-subcommand
    CHECK(run_cli("frobnicate").exit_code == 2);                      // unknown subcommand
    CHECK(run_cli("verify onevar --bogus 3").exit_code == 2);         // unknown flag
    CHECK(run_cli("verify onevar --m 2").exit_code == 2);             // --m without --n
    CHECK(run_cli("verify multivar --a 3").exit_code == 2);           // tuple too short
    CHECK(run_cli("verify multivar --a 1,x").exit_code == 2);         // malformed list
    CHECK(run_cli("emit --identity nope").exit_code == 2);            // unknown identity
    CHECK(run_cli("numeric threeterm --z 0.5").exit_code == 2);       // z on the cut
    CHECK(run_cli("numeric threeterm --alpha -1").exit_code == 2);    // alpha <= 0
    CHECK(run_cli("numeric ext --x 1.5").exit_code == 2);             // x outside (0,1)
    CHECK(run_cli("numeric ext --m 1+2j").exit_code == 2);            // malformed complex
    CHECK(run_cli("mc --seed 1 --x nope").exit_code == 2);            // malformed rational
}

TEST_CASE("help exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("verify --help").exit_code == 0);
    CHECK(run_cli("verify onevar --help").exit_code == 0);
}

TEST_CASE("sweep subcommand") {
    RunResult r = run_cli("sweep --suite onevar --max-mn 4");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 26);  // 25 reports + summary
    ordered_json summary = ordered_json::parse(lines.back());
    CHECK(summary["summary"] == "sweep-onevar");
    CHECK(summary["checks"] == 25);

    RunResult ext = run_cli("sweep --suite numeric-ext --trials 2 --seed 7");
    CHECK(ext.exit_code == 0);
    auto ext_lines = lines_of(ext.out);
    REQUIRE(ext_lines.size() == 2 * 9 * 2 + 1);  // 2 draws x 9 grid points x 2 checks + summary
    RunResult ext2 = run_cli("sweep --suite numeric-ext --trials 2 --seed 7");
    CHECK(ext.out == ext2.out);  // seeded determinism

    RunResult di = run_cli("sweep --suite dirichlet --a 1,1");
    CHECK(di.exit_code == 0);
}
