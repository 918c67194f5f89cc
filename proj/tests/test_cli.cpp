#include "stretchlab/cli.hpp"
#include "stretchlab/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace stretchlab;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;

    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "stretch-lab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const std::string torus_rows = R"({"rows":[[0,0,1,1],[1,0,0,0],[1,1,0,0],[0,0,1,0]]})";
const std::string loop_track = R"({"vertices":[{"sideA":[0],"sideB":[1]}],"edges":[{"ends":[0,1],"kind":"real"}]})";

}  // namespace

TEST_CASE("classify from inline JSON") {
    const Run r = run({"classify", "--poly", R"({"coeffs":["-1","-2","-1","0","1"]})"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j["skew_up_to_cyclotomic"] == true);
    CHECK(j["core"]["text"] == "t^2 - t - 1");
    CHECK(j["cyclotomic_part"]["text"] == "t^2 + t + 1");
    CHECK(j["largest_root"]["decimal"] == "1.618033989");
    CHECK(run({"classify", "--poly", R"({"coeffs":[-1,-2,-1,0,1]})"}).out == r.out);
}

TEST_CASE("input errors exit with 2 and name the field") {
    const Run bad = run({"classify", "--poly", R"({"coeffs":[1,)"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("--poly") != std::string::npos);
    const Run coeff = run({"classify", "--poly", R"({"coeffs":["x",1]})"});
    CHECK(coeff.code == 2);
    CHECK(coeff.err.find("coeffs[0]") != std::string::npos);
    const Run missing = run({"classify", "--poly", R"({"c":[1]})"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("coeffs") != std::string::npos);
    CHECK(run({"classify"}).code == 2);
    CHECK(run({"classify", "--file", "/nonexistent/poly.json"}).code == 2);
    CHECK(run({"matrix", "--matrix", R"({"rows":[[1,2],[3]]})"}).code == 2);
    CHECK(run({"matrix", "--matrix", R"({"rows":[[1,"a"],[0,1]]})"}).code == 2);
    CHECK(run({"traintrack", "--track", R"({"vertices":[{"sideA":[0,1],"sideB":[]}],"edges":[{"ends":[0,1],"kind":"real"}]})"}).code == 2);
    CHECK(run({"traintrack", "--track", R"({"vertices":[{"sideA":[0],"sideB":[1]}],"edges":[{"ends":[0,1],"kind":"fuzzy"}]})"}).code == 2);
}

TEST_CASE("argument errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"classify", "--bogus", "1"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--format", "xml", "classify", "--poly", R"({"coeffs":[-1,-1,1]})"}).code == 2);
    CHECK(run({"--tol", "fast", "classify", "--poly", R"({"coeffs":[-1,-1,1]})"}).code == 2);
    CHECK(run({"--tol", "-1", "classify", "--poly", R"({"coeffs":[-1,-1,1]})"}).code == 2);
    CHECK(run({"sharpness", "--k", "3", "--table", "2..4"}).code == 2);
    CHECK(run({"sharpness", "--k", "1"}).code == 2);
    CHECK(run({"sharpness", "--table", "4..2"}).code == 2);
    CHECK(run({"family"}).code == 2);
    CHECK(run({"repro", "nonsense"}).code == 2);
    CHECK(run({"--format", "csv", "classify", "--poly", R"({"coeffs":[-1,-1,1]})"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"search", "--help"}).code == 0);
}

TEST_CASE("tolerance forms") {
    const std::string p = R"({"coeffs":[-1,-1,1]})";
    for (const char* tol : {"1e-12", "0.000001", "1/1000000000"}) {
        const Run r = run({"--tol", tol, "classify", "--poly", p});
        REQUIRE(r.code == 0);
        const Json root = r.json()["largest_root"];
        const mpq_class lo = parse_rational(root["lo"].get<std::string>());
        const mpq_class hi = parse_rational(root["hi"].get<std::string>());
        CHECK(hi - lo <= mpq_class(1, 1000000));
        CHECK(lo < mpq_class(1618033989, 1000000000));
        CHECK(hi > mpq_class(1618033988, 1000000000));
    }
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("5/2^3") == mpq_class(5, 8));
    CHECK(parse_rational("-3/6") == mpq_class(-1, 2));
    CHECK(parse_rational("2.5e-1") == mpq_class(1, 4));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("1/2^x"), InputError);
    CHECK_THROWS_AS(parse_rational("1/2^99999999999999999999"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK(run({"--tol", "1/2^30", "classify", "--poly", R"({"coeffs":[-1,-1,1]})"}).code == 0);
}

TEST_CASE("matrix and curve graph") {
    const Run m = run({"matrix", "--matrix", torus_rows, "--analyze"});
    REQUIRE(m.code == 0);
    const Json j = m.json();
    CHECK(j["det"] == "-1");
    CHECK(j["in_GLnZ"] == true);
    CHECK(j["primitivity"]["primitive"] == true);
    CHECK(j["char_poly"]["text"] == "t^4 - t^2 - 2*t - 1");

    const Run g = run({"curve-graph", "--matrix", torus_rows});
    REQUIRE(g.code == 0);
    CHECK(g.json()["identity_ok"] == true);
    CHECK(g.json()["clique_poly"]["text"] == "-t^4 - 2*t^3 - t^2 + 1");
}

TEST_CASE("family enumeration, scans and csv") {
    const Run e = run({"family", "--n", "4"});
    REQUIRE(e.code == 0);
    CHECK(e.json()["versus_bound"] == "above");
    CHECK(e.json()["bound"]["decimal"] == "5.8284271247");
    CHECK(e.json()["minimum"]["normalized_largest_root"]["decimal"] == "6.854101966");

    const Run low = run({"family", "--n", "3"});
    CHECK(low.code == 0);
    CHECK(low.json()["versus_bound"] == "below");

    const Run s = run({"family", "--n", "12", "--scan", "3A1"});
    REQUIRE(s.code == 0);
    CHECK(s.json()["strictly_increasing"] == true);
    CHECK(s.json()["points"].size() == 6);
    CHECK(s.json()["points"][0]["normalized"]["decimal"] == "5.828427125");

    const Run csv = run({"--format", "csv", "family", "--n", "12", "--scan", "4A1"});
    REQUIRE(csv.code == 0);
    std::istringstream lines(csv.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "params,polynomial,largest_root,normalized");
    int rows = 0;
    for (std::string line; std::getline(lines, line);) rows += !line.empty();
    CHECK(rows == 6);
    CHECK(run({"family", "--n", "11", "--scan", "3A1"}).code == 2);
}

TEST_CASE("sharpness") {
    const Run k = run({"sharpness", "--k", "5"});
    REQUIRE(k.code == 0);
    CHECK(k.json()["p"] == 7);
    CHECK(k.json()["q"] == 3);
    const Run t = run({"--format", "csv", "sharpness", "--table", "2..6"});
    REQUIRE(t.code == 0);
    CHECK(std::count(t.out.begin(), t.out.end(), '\n') == 6);
    CHECK(t.out.rfind("k,p,q,", 0) == 0);
    CHECK(t.out.find("\n3,5,5,1.419632763,8.185704855,") != std::string::npos);
}

TEST_CASE("train tracks") {
    const Run r = run({"traintrack", "--track", loop_track, "--report"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["radical"]["contained"] == true);
    CHECK(r.json()["radical"]["dimension"] == 1);
}

TEST_CASE("search exit codes and budget") {
    const Run two = run({"search", "--n", "2", "--max-entry", "2"});
    REQUIRE(two.code == 0);
    CHECK(two.json()["violations"].empty());
    CHECK(two.json()["below_bound"].size() == 2);
    CHECK(two.json()["theorem_applies"] == false);

    const Run four = run({"search", "--n", "4", "--max-entry", "1", "--threads", "2"});
    REQUIRE(four.code == 0);
    CHECK(four.json()["violations"].empty());
    CHECK(four.json()["scanned"] == 65536);
    CHECK(four.json()["scope"].get<std::string>().find("finite slice") != std::string::npos);

    ::setenv("STRETCHLAB_BUDGET", "100", 1);
    const Run over = run({"search", "--n", "3", "--max-entry", "1"});
    ::unsetenv("STRETCHLAB_BUDGET");
    CHECK(over.code == 2);
    CHECK(over.err.find("budget") != std::string::npos);
}

TEST_CASE("output formats and files") {
    const std::string path = "cli_test_out.json";
    std::remove(path.c_str());
    const Run to_file = run({"--out", path, "sharpness", "--k", "3"});
    REQUIRE(to_file.code == 0);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(Json::parse(buf.str()) == run({"sharpness", "--k", "3"}).json());
    std::remove(path.c_str());

    const Run text = run({"--format", "text", "sharpness", "--k", "3"});
    REQUIRE(text.code == 0);
    CHECK(text.out.find("p = 5\n") != std::string::npos);
    CHECK(text.out.find("q = 5\n") != std::string::npos);
}

TEST_CASE("reports round-trip through JSON") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"classify", "--poly", R"({"coeffs":[1,1,0,-1,-1,-1,-1,-1,0,1,1]})"},
          std::vector<std::string>{"matrix", "--matrix", torus_rows, "--analyze"},
          std::vector<std::string>{"traintrack", "--track", loop_track}}) {
        const Run r = run(args);
        REQUIRE(r.code == 0);
        const Json j = r.json();
        CHECK(Json::parse(j.dump()) == j);
    }
    const Json p = run({"classify", "--poly", R"({"coeffs":[-1,-2,-1,0,1]})"}).json()["polynomial"];
    CHECK(parse_polynomial(p) == IntPolynomial{-1, -2, -1, 0, 1});
}

TEST_CASE("repro suites pass and are deterministic across threads") {
    for (const char* suite : {"thm-set", "torus", "low-degree", "monotonicity"}) {
        const Run r = run({"repro", suite});
        CAPTURE(suite);
        REQUIRE(r.code == 0);
        CHECK(r.json()["verdict"] == "PASS");
        CHECK(r.json()["suite"] == suite);
    }
    const Run one = run({"--threads", "1", "repro", "thm-main"});
    const Run three = run({"--threads", "3", "repro", "thm-main"});
    REQUIRE(one.code == 0);
    CHECK(one.out == three.out);
    CHECK(one.json()["verdict"] == "PASS");
    CHECK(one.json()["bound"]["decimal"] == "5.8284271247");

    const Json set = run({"repro", "thm-set"}).json();
    CHECK(set["lehmer"].dump().find("4.31") != std::string::npos);
    CHECK(set["quartic"].dump().find("5.10") != std::string::npos);
}
