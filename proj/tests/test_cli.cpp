#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string("'") + DESZETA_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

json strip_times(json rep) {
    rep.erase("wall_time_ms");
    return rep;
}

}  // namespace

TEST_CASE("eval: exact rational output at non-positive points") {
    RunResult r = run_cli("eval -k 0 --exact");
    CHECK(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["schema"] == 1);
    CHECK(rep["cases"][0]["actual"] == "-1/2");
    CHECK(rep["cases"][0]["route"] == "exact");

    RunResult r2 = run_cli("eval -k -1,-2 --exact");
    CHECK(r2.code == 0);
    CHECK(json::parse(r2.out)["cases"][0]["actual"] == "-1/60");
}

TEST_CASE("eval: numeric value with precision option") {
    RunResult r = run_cli("eval -k 1,1 --prec 128");
    CHECK(r.code == 0);
    json rep = json::parse(r.out);
    double v = std::stod(rep["cases"][0]["actual"].get<std::string>());
    CHECK(std::abs(v - 0.5) < 1e-8);
}

TEST_CASE("eval: --exact refuses positive indices") {
    RunResult r = run_cli("eval -k 2 --exact");
    CHECK(r.code == 2);
}

TEST_CASE("shuffle: pinned expansions and residual check") {
    RunResult r = run_cli("shuffle '[1]' '[1]'");
    CHECK(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["cases"][0]["actual"] == "2*[1,1]");
    CHECK(rep["cases"][1]["verdict"] == "pass");

    RunResult r2 = run_cli("shuffle '[-1]' '[1]'");
    CHECK(r2.code == 0);
    json rep2 = json::parse(r2.out);
    CHECK(rep2["cases"][0]["actual"] == "[-1,1] - [0,0]");
    std::string idn = rep2["cases"][1]["inputs"].get<std::string>();
    CHECK(idn.find("deszeta(-1) * deszeta(1) =") != std::string::npos);

    RunResult r3 = run_cli("shuffle '[0]' '[0]'");
    CHECK(json::parse(r3.out)["cases"][0]["actual"] == "[0,0]");
}

TEST_CASE("verify: suite report is deterministic for a fixed seed") {
    std::string args = "verify --suite pochhammer-lemma --seed 7 --jobs 2";
    RunResult a = run_cli(args), b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    json ja = strip_times(json::parse(a.out)), jb = strip_times(json::parse(b.out));
    CHECK(ja == jb);
    CHECK(ja["summary"]["failed"] == 0);
    CHECK(ja["schema"] == 1);
    // case ids are suite-qualified and sorted
    std::string prev;
    for (auto& c : ja["cases"]) {
        std::string id = c["id"].get<std::string>();
        CHECK(id.rfind("pochhammer-lemma/", 0) == 0);
        CHECK(prev < id);
        prev = id;
    }
}

TEST_CASE("verify: seed changes the generated cases") {
    RunResult a = run_cli("verify --suite pochhammer-lemma --seed 7");
    RunResult b = run_cli("verify --suite pochhammer-lemma --seed 8");
    json ja = json::parse(a.out), jb = json::parse(b.out);
    CHECK(ja["cases"] != jb["cases"]);
}

TEST_CASE("output formats and --out") {
    RunResult csv = run_cli("eval -k 0 --exact --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("id,inputs,expected,actual,abs_err,verdict,route,equality_level",
                        0) == 0);

    RunResult txt = run_cli("eval -k 0 --exact --format text");
    CHECK(txt.code == 0);
    CHECK(txt.out.find("[pass]") != std::string::npos);

    std::string path = "/tmp/deszeta_cli_out.json";
    std::remove(path.c_str());
    RunResult fo = run_cli("eval -k 0 --exact --out " + path);
    CHECK(fo.code == 0);
    CHECK(fo.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(json::parse(ss.str())["cases"][0]["actual"] == "-1/2");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("verify --suite no-such-suite").code == 2);
    CHECK(run_cli("eval -k not-a-number").code == 2);
    CHECK(run_cli("--no-such-flag").code == 2);
    CHECK(run_cli("shuffle '[1' '[1]'").code == 2);  // malformed word literal
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("DESZETA_PREC environment default") {
    RunResult r = run_cli("eval -k 0 --exact");  // exact path ignores precision,
    CHECK(r.code == 0);                          // but env must not break parsing
    std::string cmd = "DESZETA_PREC=96 '" + std::string(DESZETA_CLI_PATH) +
                      "' eval -k 0 --exact 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int st = pclose(p);
    CHECK(WEXITSTATUS(st) == 0);
    CHECK(json::parse(out)["cases"][0]["actual"] == "-1/2");
}
