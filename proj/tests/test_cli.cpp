#include "doctest.h"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

// Drives the installed binary end to end through a shell.  Exit codes:
// 0 clean, 2 a certified check failed, 64 usage, 65 bad data.

namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "diracint-cli-tests";
        std::error_code ec;
        fs::remove_all(d, ec);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
    REQUIRE(f.good());
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path out = scratch_dir() / ("stdout." + std::to_string(counter) + ".txt");
    fs::path err = scratch_dir() / ("stderr." + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = std::string(DIRACINT_CLI_PATH) + " " + args + " >" + out.string() +
                      " 2>" + err.string();
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("classify reports the exact slice count and agreement") {
    RunResult r = run_cli("classify -s S1 -d 7 -l -1 -a 1/3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "subcase S1  d = 7  lambda = -1"));
    CHECK(contains(r.out, "energy: E^2 = 14 (physical)"));
    CHECK(contains(r.out, "predicted positive m-roots inside the counting region: 3"));
    CHECK(contains(r.out, "alpha = 1/3: inside the counting region"));
    CHECK(contains(r.out, "positive = 3  negative = 3"));
    CHECK(contains(r.out, "agreement: computed count matches the prediction"));
}

TEST_CASE("classify writes its report to a file on request") {
    fs::path report = scratch_dir() / "report.txt";
    RunResult r = run_cli("classify -s S1 -d 2 -l -1 --out " + report.string());
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::string text = slurp(report);
    CHECK(contains(text, "subcase S1  d = 2  lambda = -1"));
    CHECK(contains(text, "energy: E^2 = 4 (physical)"));
}

TEST_CASE("usage errors exit with code 64") {
    CHECK(run_cli("").code == 64);
    CHECK(run_cli("nosuchcommand").code == 64);
    CHECK(run_cli("classify -s S9 -d 2 -l -1").code == 64);
    CHECK(run_cli("classify -s S1 -d 0 -l -1").code == 64);
    CHECK(run_cli("classify -s S1 -l -1").code == 64);
    fs::path sink = scratch_dir() / "sink.json";
    CHECK(run_cli("classify -s S1 -d 2 -l -1 --solutions-out " + sink.string()).code == 64);
    CHECK(run_cli("curve --preset fig1-left -s S1").code == 64);
    CHECK(run_cli("curve --preset nosuchpreset").code == 64);
    CHECK(run_cli("curve -s S1 -d 1 -l -1 -m 0:1").code == 64);
    CHECK(run_cli("curve -s S1 -d 1 -l -1 -m 0:1:0").code == 64);
    CHECK(run_cli("curve -s S1 -d 1 -l -1 --format yaml").code == 64);
    CHECK(run_cli("reconstruct --poles 0,1 --descriptor-out " + sink.string()).code == 64);
    CHECK(run_cli("whittaker -m 1 -a 3/4 -d 1 --descriptor-out " + sink.string()).code == 64);
    CHECK(run_cli("whittaker -m 1 -a 3/4 -d 1 --e2 2 --descriptor-out " + sink.string()).code ==
          64);
    CHECK(run_cli("whittaker -m 1 -a 1/2 -d 1 --levels 3:0").code == 64);
}

TEST_CASE("data errors exit with code 65") {
    RunResult w = run_cli("whittaker -m 0 -a 1/2 -d 1");
    CHECK(w.code == 65);
    CHECK(contains(w.err, "data error"));
    CHECK(run_cli("whittaker -m 1 -a 1 -d 1").code == 65);
    CHECK(run_cli("reconstruct --poles 1,1").code == 65);

    fs::path bad = scratch_dir() / "bad.json";
    spit(bad, "this is not json\n");
    RunResult v = run_cli("verify --descriptor " + bad.string());
    CHECK(v.code == 65);
    CHECK(contains(v.err, "data error"));

    fs::path missing = scratch_dir() / "missing.json";
    CHECK(run_cli("verify --descriptor " + missing.string()).code == 65);
}

TEST_CASE("classify emits descriptors that verify against their certificates") {
    fs::path sols = scratch_dir() / "sols.json";
    RunResult c = run_cli("classify -s S3 -d 2 -l 1 -a 0 --solutions-out " + sols.string());
    CHECK(c.code == 0);
    CHECK(contains(c.out, "positive = 1"));
    CHECK(contains(c.out, "wrote 1 solution descriptor to"));

    RunResult v = run_cli("verify --descriptor " + sols.string());
    CHECK(v.code == 0);
    CHECK(contains(v.out, "[1/1] KovacicCase1"));
    CHECK(contains(v.out, "within certificate bound"));
    CHECK(contains(v.out, "PASS"));

    // an absurdly tight tolerance must flip the same file to a failure
    RunResult tight = run_cli("verify --descriptor " + sols.string() +
                              " --eps 1/100000000000000000000");
    CHECK(tight.code == 2);
    CHECK(contains(tight.out, "EXCEEDS eps"));
    CHECK(contains(tight.out, "FAIL"));
}

TEST_CASE("a tampered descriptor fails verification") {
    fs::path sols = scratch_dir() / "sols_to_tamper.json";
    REQUIRE(run_cli("classify -s S3 -d 2 -l 1 -a 0 --solutions-out " + sols.string()).code == 0);

    nlohmann::json j = nlohmann::json::parse(slurp(sols));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    j[0]["r"]["num"]["coeffs"][0] = "12345";
    fs::path tampered = scratch_dir() / "tampered.json";
    spit(tampered, j.dump());

    RunResult t = run_cli("verify --descriptor " + tampered.string());
    CHECK(t.code == 2);
    CHECK(contains(t.out, "FAIL"));
}

TEST_CASE("the one pole closed form writes a verifiable pair") {
    fs::path rec = scratch_dir() / "rec.json";
    RunResult r = run_cli("reconstruct --poles 0 --r2 1,1 --descriptor-out " + rec.string());
    CHECK(r.code == 0);
    CHECK(contains(r.out, "E^2 = 2 (physical)"));
    CHECK(contains(r.out, "polynomial: yes"));
    CHECK(contains(r.out, "wrote 2 solution descriptors to"));

    RunResult v = run_cli("verify --descriptor " + rec.string());
    CHECK(v.code == 0);
    CHECK(contains(v.out, "[1/2] KovacicCase1"));
    CHECK(contains(v.out, "[2/2] ReductionOfOrder"));
    CHECK(contains(v.out, "residual identically zero"));
    CHECK(!contains(v.out, "FAIL"));
}

TEST_CASE("reconstruct keeps r pole free for a generic configuration") {
    RunResult r = run_cli("reconstruct --poles 0,1,2 --r2 3,0,1 --e2 5");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "E^2 = 5"));
    CHECK(contains(r.out, "polynomial: yes"));
}

TEST_CASE("level lists stream as JSON with the report on stderr") {
    RunResult r = run_cli("whittaker -m 1 -a 1/2 -d 1 --levels 0:3");
    CHECK(r.code == 0);
    CHECK(contains(r.err, "mu = 0"));
    CHECK(contains(r.err, "kappa = (-3/2) m / sqrt(m^2 - E^2)"));

    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["m"] == "1");
    CHECK(j["levels"].size() == 8);
    int valid = 0;
    for (const auto& lv : j["levels"])
        if (lv["valid"].get<bool>()) ++valid;
    CHECK(valid == 3);
}

TEST_CASE("whittaker classifies a specific energy against the level rule") {
    RunResult r = run_cli("whittaker -m 1 -a 1/2 -d 1 --e2 16/25");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "E^2 = 16/25: Liouvillian"));
    CHECK(contains(r.out, "m/sqrt(m^2 - E^2) = 5/3"));
    CHECK(contains(r.out, "x(alpha + d) + alpha = 3"));
    CHECK(contains(r.out, "x(alpha + d) - alpha = 2"));
    CHECK(contains(r.out, "table cell (1, 2)"));
    CHECK(contains(r.out, "[Liouvillian]"));
}

TEST_CASE("the degenerate energy descriptor passes the collapse check") {
    fs::path w = scratch_dir() / "bessel.json";
    RunResult r = run_cli("whittaker -m 1 -a 3/4 -d 2 --e2 1 --descriptor-out " + w.string());
    CHECK(r.code == 0);
    CHECK(contains(r.out, "wrote descriptor to"));
    CHECK(contains(r.out, "table cell (2, 3)"));

    RunResult v = run_cli("verify --descriptor " + w.string());
    CHECK(v.code == 0);
    CHECK(contains(v.out, "collapse identity holds exactly"));
    CHECK(contains(v.out, "PASS"));
}

TEST_CASE("curve output is byte identical across runs and thread counts") {
    fs::path a = scratch_dir() / "a.csv";
    fs::path b = scratch_dir() / "b.csv";
    CHECK(run_cli("curve -s S3 -d 3 -l 1 -m -1:1:1/2 --threads 1 --out " + a.string()).code == 0);
    CHECK(run_cli("curve -s S3 -d 3 -l 1 -m -1:1:1/2 --threads 4 --out " + b.string()).code == 0);
    std::string sa = slurp(a), sb = slurp(b);
    CHECK(sa == sb);
    CHECK(contains(sa, "m,alpha_lo,alpha_hi,exact"));
}

TEST_CASE("the flat zero line round trips through the command line") {
    RunResult r = run_cli("curve -s S1 -d 1 -l -1 -m -1:1:1");
    CHECK(r.code == 0);
    CHECK(r.out == "m,alpha_lo,alpha_hi,exact\n-1,0,0,1\n0,0,0,1\n1,0,0,1\n");
}

TEST_CASE("an empty m grid yields a bare header") {
    RunResult r = run_cli("curve -s S1 -d 1 -l -1 -m 1:0:1");
    CHECK(r.code == 0);
    CHECK(r.out == "m,alpha_lo,alpha_hi,exact\n");
}

TEST_CASE("curve emits JSON when asked") {
    RunResult r = run_cli("curve -s S1 -d 1 -l -1 -m 0:0:1 --format json");
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["subcase"] == "S1");
    CHECK(j["points"].size() == 1);
    REQUIRE(j["points"][0]["roots"].size() == 1);
    CHECK(j["points"][0]["roots"][0]["exact"].get<bool>());
    CHECK(j["points"][0]["roots"][0]["lo"] == "0");
}

TEST_CASE("a config file supplies options and the command line wins") {
    fs::path cfg = scratch_dir() / "classify.ini";
    spit(cfg, "[classify]\nsubcase=S1\ndegree=2\nlambda=-1\n");

    RunResult base = run_cli("--config " + cfg.string() + " classify");
    CHECK(base.code == 0);
    CHECK(contains(base.out, "subcase S1  d = 2  lambda = -1"));

    RunResult over = run_cli("--config " + cfg.string() + " classify --degree 3");
    CHECK(over.code == 0);
    CHECK(contains(over.out, "subcase S1  d = 3  lambda = -1"));
}

TEST_CASE("help exits cleanly and names every subcommand") {
    RunResult r = run_cli("--help");
    CHECK(r.code == 0);
    for (const char* name : {"classify", "curve", "whittaker", "reconstruct", "verify"})
        CHECK(contains(r.out, name));
}
