#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

// QPART_CLI_PATH is injected by the build and points at the tool binary.

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cmd(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

// stdout only; stderr dropped
RunResult run(const std::string& args) {
    return run_cmd(std::string("\"") + QPART_CLI_PATH + "\" " + args + " 2>/dev/null");
}

// stderr only; stdout dropped
RunResult run_stderr(const std::string& args) {
    return run_cmd(std::string("\"") + QPART_CLI_PATH + "\" " + args + " 2>&1 1>/dev/null");
}

// with an environment prefix such as QPART_MAX_ORDER=5
RunResult run_env(const std::string& env, const std::string& args) {
    return run_cmd(env + " \"" + QPART_CLI_PATH + "\" " + args + " 2>/dev/null");
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("count tables in text format") {
    auto r = run("count --family R --n-max 10");
    CHECK(r.code == 0);
    CHECK(lines_of(r.out) ==
          std::vector<std::string>{"0 1", "1 2", "2 2", "3 4", "4 6", "5 8", "6 12", "7 16",
                                   "8 22", "9 30", "10 40"});

    auto r6 = run("count --family R --n-max 6");
    auto ls = lines_of(r6.out);
    REQUIRE(!ls.empty());
    CHECK(ls.back() == "6 12");

    auto r2 = run("count --family R2 --n-max 10");
    CHECK(lines_of(r2.out) ==
          std::vector<std::string>{"0 1", "1 0", "2 2", "3 2", "4 2", "5 4", "6 6", "7 8",
                                   "8 10", "9 14", "10 18"});

    auto r3 = run("count --family R3 --n-max 10");
    CHECK(lines_of(r3.out) ==
          std::vector<std::string>{"0 1", "1 1", "2 2", "3 3", "4 4", "5 6", "6 9", "7 12",
                                   "8 16", "9 22", "10 29"});
}

TEST_CASE("count tables for the overpartition families") {
    auto d22 = run("count --family D --k 2 --a 2 --n-max 6");
    CHECK(d22.code == 0);
    CHECK(lines_of(d22.out).back() == "6 12");

    auto d21 = run("count --family D --k 2 --a 1 --n-max 3");
    CHECK(lines_of(d21.out) == std::vector<std::string>{"0 1", "1 1", "2 2", "3 3"});

    auto c21 = run("count --family C --k 2 --i 1 --n-max 3");
    CHECK(lines_of(c21.out).back() == "3 3");
}

TEST_CASE("count output in csv and json") {
    auto csv = run("count --family R --n-max 5 --format csv");
    auto ls = lines_of(csv.out);
    REQUIRE(ls.size() == 7);
    CHECK(ls[0] == "n,count");
    CHECK(ls[1] == "0,1");
    CHECK(ls[6] == "5,8");

    auto js = run("count --family R --n-max 10 --format json");
    auto jl = lines_of(js.out);
    REQUIRE(jl.size() == 11);
    auto last = nlohmann::json::parse(jl.back());
    CHECK(last["n"] == 10);
    CHECK(last["count"].is_string()); // counts travel as decimal strings
    CHECK(last["count"] == "40");
}

TEST_CASE("verify runs pass and render as promised") {
    auto t = run("verify --identity thm13");
    CHECK(t.code == 0);
    CHECK(lines_of(t.out) == std::vector<std::string>{"thm13: pass (order 100)"});

    auto fe = run("verify --identity funceq");
    CHECK(fe.code == 0);
    CHECK(lines_of(fe.out) == std::vector<std::string>{"funceq: pass (order 30, m 8)"});

    auto csv = run("verify --identity sumsides --order 40 --format csv");
    CHECK(csv.code == 0);
    CHECK(lines_of(csv.out) ==
          std::vector<std::string>{"identity,order,status,mismatch_index,lhs,rhs",
                                   "sumsides-r1,40,pass,,,", "sumsides-r2,40,pass,,,"});

    auto js = run("verify --identity thm32 --order 50 --format json");
    CHECK(js.code == 0);
    auto j = nlohmann::json::parse(lines_of(js.out).at(0));
    CHECK(j["identity"] == "thm32");
    CHECK(j["order"] == 50);
    CHECK(j["status"] == "pass");
    CHECK(j["first_mismatch"].is_null());

    auto jtp = run("verify --identity jtp");
    CHECK(jtp.code == 0);
    CHECK(lines_of(jtp.out).size() == 4);

    auto cd = run("verify --identity cd-equal");
    CHECK(cd.code == 0);
    CHECK(lines_of(cd.out).size() == 6); // the standard (k, i) set

    auto one = run("verify --identity cd-equal --k 3 --i 2 --n-max 12");
    CHECK(one.code == 0);
    CHECK(lines_of(one.out) == std::vector<std::string>{"cd-equal-k3-i2: pass (order 12)"});
}

TEST_CASE("vacuous windows warn on stderr but still pass") {
    auto warn = run_stderr("verify --identity jtp");
    CHECK(warn.code == 0);
    CHECK(warn.out.find("vacuous window for jtp-neg-k1") != std::string::npos);

    auto zero = run_stderr("verify --identity thm13 --order 0");
    CHECK(zero.code == 0);
    CHECK(zero.out.find("vacuous window") != std::string::npos);
}

TEST_CASE("corrupted funceq run fails with exit 1 and a located mismatch") {
    auto bad = run("verify --identity funceq --corrupt --format json");
    CHECK(bad.code == 1);
    auto j = nlohmann::json::parse(lines_of(bad.out).at(0));
    CHECK(j["status"] == "fail");
    CHECK(j["first_mismatch"]["index"] == nlohmann::json::array({1, 2}));
    CHECK(j["first_mismatch"]["lhs"] == "2");
    CHECK(j["first_mismatch"]["rhs"] == "3");
}

TEST_CASE("bijection listing") {
    auto six = run("bijection --n 6 --ascii");
    CHECK(six.code == 0);
    auto ls = lines_of(six.out);
    CHECK(ls.size() == 12);
    std::set<std::string> rows(ls.begin(), ls.end());
    CHECK(rows.size() == 12);
    CHECK(rows.count("6\t6~") == 1);
    CHECK(rows.count("6'\t6") == 1);
    CHECK(rows.count("5,1\t5~,1~") == 1);
    CHECK(rows.count("5',1'\t5,1") == 1);
    CHECK(rows.count("3,2',1\t3~,2~,1~") == 1);
    CHECK(rows.count("3',2,1'\t3~,2~,1") == 1);

    auto three = run("bijection --n 3 --ascii");
    auto rows3 = lines_of(three.out);
    std::set<std::string> set3(rows3.begin(), rows3.end());
    CHECK(set3 == std::set<std::string>{"3\t3~", "3'\t3", "2,1'\t2~,1", "2',1\t2~,1~"});

    auto zero = run("bijection --n 0");
    CHECK(lines_of(zero.out) == std::vector<std::string>{"-\t-"});

    // Unicode rendering is the default: each overlined digit carries U+0305.
    auto uni = run("bijection --n 1");
    auto rows1 = lines_of(uni.out);
    std::set<std::string> set1(rows1.begin(), rows1.end());
    CHECK(set1 == std::set<std::string>{"1\t1\xCC\x85", "1'\t1"});

    auto csv = run("bijection --n 2 --ascii --format csv");
    auto lc = lines_of(csv.out);
    REQUIRE(!lc.empty());
    CHECK(lc[0] == "colored,image");
    std::set<std::string> body(lc.begin() + 1, lc.end());
    CHECK(body == std::set<std::string>{"\"2\",\"2~\"", "\"2'\",\"2\""});

    auto js = run("bijection --n 6 --ascii --format json");
    for (const auto& line : lines_of(js.out)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j.contains("colored"));
        CHECK(j.contains("image"));
    }
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").code == 2);                                        // missing subcommand
    CHECK(run("count").code == 2);                                   // missing --family
    CHECK(run("count --family X").code == 2);                        // unknown family
    CHECK(run("count --family D --n-max 5").code == 2);              // D without k, a
    CHECK(run("count --family C --k 1 --i 2 --n-max 5").code == 2);  // k < i
    CHECK(run("count --family D --k 2 --a 2 --n-max 31").code == 2); // enumeration cap
    CHECK(run("count --family R --n-max -1").code == 2);
    CHECK(run("verify --identity nosuch").code == 2);
    CHECK(run("verify --identity thm13 --corrupt").code == 2); // corrupt is funceq-only
    CHECK(run("verify --identity funceq --order 41").code == 2);
    CHECK(run("verify --identity cd-equal --k 2 --n-max 5").code == 2); // --k without --i
    CHECK(run("bijection --n -1").code == 2);
    CHECK(run("bijection --n 31").code == 2);
    CHECK(run("count --family R --format yaml --n-max 3").code == 2);
}

TEST_CASE("the order cap honors QPART_MAX_ORDER") {
    CHECK(run_env("QPART_MAX_ORDER=5", "count --family R --n-max 5").code == 0);
    CHECK(run_env("QPART_MAX_ORDER=5", "count --family R --n-max 6").code == 2);
    CHECK(run_env("QPART_MAX_ORDER=5", "verify --identity thm13 --order 6").code == 2);
    CHECK(run_env("QPART_MAX_ORDER=abc", "count --family R --n-max 3").code == 2);
    CHECK(run_env("QPART_MAX_ORDER=-1", "count --family R --n-max 3").code == 2);
    // the exact boundary is inclusive
    CHECK(run_env("QPART_MAX_ORDER=60", "verify --identity thm13 --order 60").code == 0);
    CHECK(run_env("QPART_MAX_ORDER=60", "verify --identity thm13 --order 61").code == 2);
    // the built-in default rejects absurd orders before any computation
    CHECK(run("verify --identity thm13 --order 1001").code == 2);
}

TEST_CASE("output is byte-deterministic") {
    auto a = run("count --family R --n-max 20 --format csv");
    auto b = run("count --family R --n-max 20 --format csv");
    CHECK(a.out == b.out);

    auto c = run("bijection --n 12 --ascii");
    auto d = run("bijection --n 12 --ascii");
    CHECK(c.out == d.out);

    // CSV verify reports carry no timing field, so they repeat exactly.
    auto e = run("verify --identity sumsides --order 30 --format csv");
    auto f = run("verify --identity sumsides --order 30 --format csv");
    CHECK(e.out == f.out);
}
