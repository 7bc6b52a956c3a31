#include <doctest.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "xsym/cli.hpp"
#include "xsym/elimination.hpp"
#include "xsym/network.hpp"
#include "xsym/serialize.hpp"

using namespace xsym;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "xsym");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("xsym_cli_test_" + std::to_string(counter++) + "_" +
                                             std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name, const std::string& contents = {}) const {
        const auto p = path_ / name;
        if (!contents.empty()) std::ofstream(p, std::ios::binary) << contents;
        return p.string();
    }

private:
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("gen") {
    TempDir dir;
    const auto path = dir.file("a33.txt");
    REQUIRE(run({"gen", "--amazing", "3", "3", "--scaled", "-o", path}).code == kExitOk);
    CHECK(slurp(path) == "3\n10 16 1\n4 19 4\n1 16 10\n");
    CHECK(run({"gen", "--amazing", "1", "2"}).out == "1\n1\n");
    CHECK(run({"gen", "--amazing", "2", "3"}).out == "2\n2/3 1/3\n1/3 2/3\n");

    const auto r1 = dir.file("r1.txt"), r2 = dir.file("r2.txt");
    REQUIRE(run({"gen", "--random", "s0", "2", "1", "-o", r1}).code == kExitOk);
    REQUIRE(run({"gen", "--random", "s0", "2", "1", "-o", r2}).code == kExitOk);
    CHECK(slurp(r1) == slurp(r2));
    CHECK(slurp(r1 + ".cert.json") == slurp(r2 + ".cert.json"));
    const auto cert = factorization_from_json(Json::parse(slurp(r1 + ".cert.json")));
    CHECK(factorization_product(cert) == parse_rational_matrix(slurp(r1)));

    const auto j = run({"gen", "--amazing", "2", "3", "--scaled", "--json"});
    CHECK(j.out == "{\n  \"n\": 2,\n  \"entries\": [\n    [\n      \"6\",\n      \"3\"\n    ],\n    [\n      \"3\",\n      \"6\"\n    ]\n  ]\n}\n");
    CHECK(parse_rational_matrix(j.out) == Matrix<Rational>{{6, 3}, {3, 6}});
}

TEST_CASE("gen usage errors") {
    CHECK(run({"gen", "--amazing", "0", "3"}).code == kExitUsage);
    CHECK(run({"gen", "--amazing", "3", "1"}).code == kExitUsage);
    CHECK(run({"gen"}).code == kExitUsage);
    CHECK(run({"gen", "--amazing", "3", "3", "--random", "1", "2", "1"}).code == kExitUsage);
    CHECK(run({"gen", "--random", "x", "n", "1"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("check") {
    TempDir dir;
    const auto a43 = dir.file("a43.txt", run({"gen", "--amazing", "4", "3", "--scaled"}).out);
    const auto r = run({"check", a43, "--method", "cross"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "verdict: certified"));

    const auto perm = dir.file("perm.txt", "2\n0 1\n1 0\n");
    for (const std::string method : {"cross", "neville", "minors"}) {
        const auto p = run({"check", perm, "--method", method});
        CHECK(p.code == kExitRefuted);
        CHECK(contains(p.out, "witness: "));
    }
    CHECK(contains(run({"check", perm, "--method", "minors"}).out, "negative minor [{1,2}|{1,2}] = -1"));

    const auto ones = dir.file("ones.txt", "2\n1 1\n1 1\n");
    CHECK(run({"check", ones, "--method", "cross"}).code == kExitInapplicable);
    CHECK(contains(run({"check", ones}).out, "reason: singular matrix"));
    CHECK(run({"check", ones, "--method", "minors"}).code == kExitOk);

    const auto a33 = dir.file("a33.txt", "3\n10 16 1\n4 19 4\n1 16 10\n");
    const auto t = run({"check", a33, "--trace"});
    CHECK(t.out ==
          "method: cross\nverdict: certified\natoms: 3\ndiagonal: 9 9 9\ntrace:\n"
          "  step 1: s=2 t=1 c=1/4\n  step 2: s=1 t=1 c=4/9\n  step 3: s=2 t=2 c=5/4\n");

    CHECK(run({"check", dir.file("missing.txt")}).code == kExitIo);
    CHECK(run({"check", dir.file("bad.txt", "2\n1 x\n1 1\n")}).code == kExitIo);
    CHECK(run({"check", a33, "--method", "magic"}).code == kExitUsage);
}

TEST_CASE("check symbolic matrices") {
    TempDir dir;
    // [[b, 1], [1, b]] is certified on b >= 2: center coefficient 1/b < 1.
    const auto m = dir.file("sym.txt", "2\n[0, 1] 1\n1 [0, 1]\n");
    const auto r = run({"check", m, "--beta", "2"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "ray: b >= 2"));
    // [[b - 3, 1], [1, b - 3]] has an indefinite pivot on b >= 2.
    const auto bad = dir.file("bad.txt", "2\n[-3, 1] 1\n1 [-3, 1]\n");
    CHECK(run({"check", bad}).code == kExitInapplicable);
    CHECK(run({"check", bad, "--beta", "5"}).code == kExitOk);
    CHECK(run({"check", bad, "--method", "minors"}).code == kExitInapplicable);
}

TEST_CASE("factor") {
    TempDir dir;
    const auto a33 = dir.file("a33.txt", run({"gen", "--amazing", "3", "3", "--scaled"}).out);
    const auto cert = dir.file("cert.json");
    const auto r = run({"factor", a33, "--out", cert, "--verify"});
    REQUIRE(r.code == kExitOk);
    CHECK(contains(r.err, "verified"));
    const Json doc = Json::parse(slurp(cert));
    CHECK(doc == Json::parse(R"({"n": 3, "atoms": [
        {"kind": "bridge", "s": 2, "c": "1/4"},
        {"kind": "bridge", "s": 1, "c": "4/9"},
        {"kind": "bridge", "s": 2, "c": "5/4"}], "diagonal": ["9", "9", "9"]})"));

    const auto a23 = dir.file("a23.txt", run({"gen", "--amazing", "2", "3", "--scaled"}).out);
    CHECK(Json::parse(run({"factor", a23}).out) ==
          Json::parse(R"({"n": 2, "atoms": [{"kind": "center", "s": 1, "c": "1/2"}], "diagonal": ["9/2", "9/2"]})"));

    const auto id = dir.file("id.txt", "5\n1 0 0 0 0\n0 1 0 0 0\n0 0 1 0 0\n0 0 0 1 0\n0 0 0 0 1\n");
    CHECK(Json::parse(run({"factor", id}).out) ==
          Json::parse(R"({"n": 5, "atoms": [], "diagonal": ["1", "1", "1", "1", "1"]})"));

    CHECK(run({"factor", dir.file("perm.txt", "2\n0 1\n1 0\n")}).code == kExitRefuted);
    CHECK(run({"factor", dir.file("skew.txt", "2\n1 2\n3 4\n")}).code == kExitInapplicable);
    CHECK(run({"factor", a33, "-o", (fs::path(dir.file("nodir")) / "x" / "y.json").string()}).code == kExitIo);
}

TEST_CASE("factor --verify on random certified inputs") {
    TempDir dir;
    for (int seed = 0; seed < 30; ++seed) {
        const auto m = dir.file("m" + std::to_string(seed) + ".txt");
        REQUIRE(run({"gen", "--random", std::to_string(seed), std::to_string(1 + seed % 6), "5", "-o", m}).code == kExitOk);
        REQUIRE(run({"factor", m, "--verify"}).code == kExitOk);
    }
}

TEST_CASE("network") {
    TempDir dir;
    const auto a33 = dir.file("a33.txt", run({"gen", "--amazing", "3", "3", "--scaled"}).out);
    const auto dot = run({"network", a33, "--format", "dot"});
    REQUIRE(dot.code == kExitOk);
    CHECK(contains(dot.out, "S1 -> v1_2 [label=\"1/4\"]"));
    CHECK(dot.out == run({"network", a33}).out);

    // A certificate document works as input too.
    const auto cert = dir.file("cert.json", run({"factor", a33}).out);
    CHECK(run({"network", cert}).out == dot.out);

    const auto id2 = dir.file("id2.txt", "2\n1 0\n0 1\n");
    const auto straight = run({"network", id2}).out;
    CHECK(contains(straight, "S1 -> T1;"));
    CHECK(contains(straight, "S2 -> T2;"));
    CHECK_FALSE(contains(straight, "label"));

    const auto a43 = dir.file("a43.txt", run({"gen", "--amazing", "4", "3", "--scaled"}).out);
    const auto doc = run({"network", a43, "--format", "doc"});
    REQUIRE(doc.code == kExitOk);
    CHECK(path_matrix(network_from_json(Json::parse(doc.out))) == parse_rational_matrix(slurp(a43)));

    CHECK(run({"network", dir.file("perm.txt", "2\n0 1\n1 0\n")}).code == kExitRefuted);
    CHECK(run({"network", a33, "--format", "png"}).code == kExitUsage);
}

TEST_CASE("verify-amazing") {
    for (const std::string n : {"1", "3", "6"}) {
        const auto r = run({"verify-amazing", "--n", n});
        CHECK(r.code == kExitOk);
        CHECK(Json::parse(r.out)["overall"] == "certified");
    }
    TempDir dir;
    const auto report = dir.file("report.json");
    const auto r = run({"verify-amazing", "--n", "4", "--escalation-cap", "0", "-o", report});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "n=4 overall: certified\n");
    CHECK(slurp(report) == run({"verify-amazing", "--n", "4"}).out);
    CHECK(run({"verify-amazing", "--n", "0"}).code == kExitUsage);
    CHECK(run({"verify-amazing"}).code == kExitUsage);
}

TEST_CASE("installed binary") {
    TempDir dir;
    const auto out = dir.file("out.txt");
    const std::string cli = XSYM_CLI_PATH;
    const auto shell = [](const std::string& cmd) {
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    CHECK(shell("\"" + cli + "\" gen --amazing 3 3 --scaled -o \"" + out + "\"") == 0);
    CHECK(slurp(out) == "3\n10 16 1\n4 19 4\n1 16 10\n");
    CHECK(shell("\"" + cli + "\" check \"" + out + "\" > /dev/null") == 0);
    const auto perm = dir.file("perm.txt", "2\n0 1\n1 0\n");
    CHECK(shell("\"" + cli + "\" check \"" + perm + "\" > /dev/null") == 1);
    const auto ones = dir.file("ones.txt", "2\n1 1\n1 1\n");
    CHECK(shell("\"" + cli + "\" check \"" + ones + "\" > /dev/null") == 2);
    CHECK(shell("\"" + cli + "\" check --method nope \"" + ones + "\" 2> /dev/null") == 3);
    CHECK(shell("\"" + cli + "\" check \"" + dir.file("missing") + "\" 2> /dev/null") == 4);
}
