#include "dra/cli.hpp"
#include "dra/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <string>

using namespace dra;

namespace {

struct CaptureStdout {
    CaptureStdout() { old = std::cout.rdbuf(buffer.rdbuf()); }
    ~CaptureStdout() { std::cout.rdbuf(old); }
    std::string text() const { return buffer.str(); }
    std::ostringstream buffer;
    std::streambuf* old;
};

int run(std::initializer_list<std::string> args, std::string* out = nullptr) {
    CaptureStdout cap;
    int rc = cli::run(std::vector<std::string>(args));
    if (out) *out = cap.text();
    return rc;
}

} // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({}) == 2);
    CHECK(run({"frobnicate"}) == 2);
    CHECK(run({"verify"}) == 2);
    CHECK(run({"verify", "nosuchsuite", "--n", "2"}) == 2);
    CHECK(run({"solve", "--n", "0"}) == 2);
    CHECK(run({"solve", "--indices", "9", "--n", "3"}) == 2);
    CHECK(run({"solve", "--metric", "diag:1,1", "--n", "3"}) == 2);
    CHECK(run({"verify", "osp", "--degree", "99"}) == 2);
}

TEST_CASE("help exits with code 0") {
    CHECK(run({"--help"}) == 0);
}

TEST_CASE("solve prints the solution and the dirac check") {
    std::string out;
    CHECK(run({"solve", "--n", "4", "--metric", "diag:1,1,1,-1", "--indices", "1"}, &out) == 0);
    CHECK(out.find("dirac_check: 0") != std::string::npos);
    // canonical form of -2 x^1 + 1/2 x_k g^k g^1 for this metric
    CHECK(out.find("- (3/2)*x1") != std::string::npos);
    CHECK(out.find("g1^g2") != std::string::npos);
}

TEST_CASE("solve with empty indices gives the constant 1") {
    std::string out;
    CHECK(run({"solve", "--n", "3", "--indices", ""}, &out) == 0);
    CHECK(out.substr(0, 1) == "1");
    CHECK(out.find("dirac_check: 0") != std::string::npos);
}

TEST_CASE("solve with a right gamma factor") {
    std::string out;
    CHECK(run({"solve", "--n", "3", "--indices", "1,2", "--gamma", "1"}, &out) == 0);
    CHECK(out.find("dirac_check: 0") != std::string::npos);
}

TEST_CASE("solve JSON output round-trips and carries provenance") {
    std::string out;
    CHECK(run({"solve", "--n", "3", "--indices", "1,2", "--gamma", "1", "--output", "json"},
              &out) == 0);
    Json j = Json::parse(out);
    CHECK(j.at("dirac_check") == "0");
    CHECK(j.at("provenance").at("indices") == Json::array({1, 2}));
    CliffordPolynomial sol = poly_from_json(j.at("solution"));
    CHECK(poly_from_json(to_json(sol)) == sol);
    CHECK(j.at("solution") == to_json(sol));
    Metric m = metric_from_json(j.at("metric"));
    CHECK(m.n() == 3);
}

TEST_CASE("solve latex output renders gammas") {
    std::string out;
    CHECK(run({"solve", "--n", "3", "--indices", "1", "--output", "latex"}, &out) == 0);
    CHECK(out.find("\\gamma^{") != std::string::npos);
}

TEST_CASE("verify osp on the off-diagonal metric") {
    std::string out;
    CHECK(run({"verify", "osp", "--n", "2", "--metric", "offdiag"}, &out) == 0);
    CHECK(out.find("failures") != std::string::npos);
}

TEST_CASE("verify projector emits a JSON report with sorted statuses") {
    std::string out;
    CHECK(run({"verify", "projector", "--n", "2", "--degree", "2", "--output", "json"}, &out) == 0);
    Json j = Json::parse(out);
    CHECK(j.at("passed") == true);
    CHECK(j.at("failures") == 0);
    for (const auto& entry : j.at("report")) {
        CHECK(entry.contains("relation"));
        CHECK(entry.contains("status"));
    }
}

TEST_CASE("verify adjoint and diamond pass for small n") {
    CHECK(run({"verify", "adjoint", "--n", "2", "--metric", "lorentzian"}) == 0);
    CHECK(run({"verify", "diamond", "--n", "2"}) == 0);
}

TEST_CASE("remaining suites run through the CLI") {
    CHECK(run({"verify", "presentation", "--n", "3", "--degree", "2"}) == 0);
    CHECK(run({"verify", "brackets", "--n", "2", "--max-m", "2"}) == 0);
    CHECK(run({"verify", "product", "--n", "2", "--max-m", "2"}) == 0);
    CHECK(run({"verify", "solutions", "--n", "2", "--max-m", "2"}) == 0);
    CHECK(run({"verify", "cyclicity", "--n", "1", "--degree", "2", "--seed", "7"}) == 0);
}

TEST_CASE("basis reports the span verdict") {
    std::string out;
    CHECK(run({"basis", "--n", "3", "--degree", "1", "--output", "json"}, &out) == 0);
    Json j = Json::parse(out);
    CHECK(j.at("spans_equal") == true);
    CHECK(j.at("kernel_dimension").get<int>() > 0);
    CHECK(j.at("oracle_basis").at("degree") == 1);
}

TEST_CASE("degree 0 basis lists all gamma monomials") {
    std::string out;
    CHECK(run({"basis", "--n", "2", "--degree", "0", "--output", "json"}, &out) == 0);
    Json j = Json::parse(out);
    CHECK(j.at("kernel_dimension") == 4);
}
