#include "cli.hpp"

#include "gridtorus/families.hpp"
#include "gridtorus/serialize.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gridtorus;
namespace cli = gridtorus::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"build"}).code == cli::kExitUsage);
    CHECK(run({"build", "scroll"}).code == cli::kExitUsage);
    CHECK(run({"identity"}).code == cli::kExitUsage);
    CHECK(run({"table", "e8"}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("build output round-trips byte for byte") {
    const std::vector<std::vector<std::string>> cases{
        {"build", "scroll", "--n", "5"},
        {"build", "scroll", "--n", "4", "--split", "1,1,2,2"},
        {"build", "quadric-bundle", "--n", "6"},
        {"build", "p1cubed"},
        {"build", "sp6"},
        {"build", "projective-space", "--weights", "0:2,3:1"},
        {"build", "quadric-axis", "--n", "5"},
        {"build", "so-adjoint", "--m", "10"},
        {"build", "so-slice", "--m", "9", "--i", "2"},
    };
    for (const auto& args : cases) {
        const Result r = run(args);
        REQUIRE_MESSAGE(r.code == cli::kExitOk, args[1], ": ", r.err);
        CHECK(to_json(from_json(r.out)) == r.out);
    }
    CHECK(run({"build", "scroll", "--n", "5"}).out == to_json(build_scroll(5)));
}

TEST_CASE("build writes to a file") {
    const auto path = std::filesystem::temp_directory_path() / "gridtorus_cli_test.json";
    REQUIRE(run({"build", "sp6", "-o", path.string()}).code == cli::kExitOk);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(from_json(ss.str()).components.size() == 4);
    CHECK(run({"validate", "--grid", path.string()}).code == cli::kExitOk);
    std::filesystem::remove(path);
}

TEST_CASE("validate and schema errors") {
    const std::string scroll = to_json(build_scroll(4));
    CHECK(run({"validate", "--grid", "-"}, scroll).code == cli::kExitOk);

    GridData bad = build_scroll(4);
    bad.at("Y2").compass = Compass{{Weight{1}, 1}};
    const Result v = run({"validate", "--grid", "-"}, to_json(bad));
    CHECK(v.code == cli::kExitViolations);

    const Result s = run({"validate", "--grid", "-"}, "{\"schema\": 1}");
    CHECK(s.code == cli::kExitSchema);
    CHECK(contains(s.err, "$"));
    CHECK(run({"validate", "--grid", "-"}, "not json").code == cli::kExitSchema);
    CHECK(run({"validate", "--grid", "/nonexistent/grid.json"}).code == cli::kExitFailure);
}

TEST_CASE("classify from stdin") {
    const Result r = run({"classify"}, to_json(build_p1cubed()));
    CHECK(r.code == cli::kExitOk);
    CHECK(contains(r.out, "QuadricBundle"));
    CHECK(contains(r.out, "rho=3"));

    const Result bad = run({"classify", "--grid", "-"}, to_json(build_bw3_isolated(4, 2)));
    CHECK(bad.code == cli::kExitViolations);
    CHECK(contains(bad.out + bad.err, "isolated-points-identity"));
}

TEST_CASE("bandwidth, nef and chi") {
    const std::string scroll = to_json(build_scroll(4));
    const Result bw = run({"bandwidth", "--grid", "-"}, scroll);
    CHECK(bw.code == cli::kExitOk);
    CHECK(contains(bw.out, "3"));
    CHECK(run({"nef-check", "--grid", "-", "--bundle", "L"}, scroll).code == cli::kExitOk);
    CHECK(run({"nef-check", "--grid", "-", "--bundle", "K+4L", "--scope", "all"}, scroll).code == cli::kExitOk);
    CHECK(run({"nef-check", "--grid", "-", "--bundle", "K+3L"}, scroll).code == cli::kExitViolations);

    const Result chi = run({"chi", "--grid", "-", "--m", "1"}, to_json(build_p1cubed()));
    CHECK(chi.code == cli::kExitOk);
    const Result f5 = run({"chi", "--fano5", "7776,3240", "--a", "5/36,8/36"});
    CHECK(f5.code == cli::kExitOk);
    CHECK(contains(f5.out, "462"));
    CHECK(contains(f5.out, "56"));
}

TEST_CASE("identity") {
    CHECK(contains(run({"identity", "--n", "2"}).out, "a = 1"));
    CHECK(contains(run({"identity", "--n", "3"}).out, "a = 3"));
    CHECK(run({"identity", "--n", "3", "--a", "3"}).code == cli::kExitOk);
    CHECK(run({"identity", "--n", "3", "--a", "2"}).code == cli::kExitViolations);
}

TEST_CASE("tables") {
    const Result so = run({"table", "so-adjoint", "--m", "6..9"});
    CHECK(so.code == cli::kExitOk);
    CHECK(so.out.rfind("n,G,rk,X_adj,X_i,Y_*,Y_0\n", 0) == 0);
    CHECK(contains(so.out, "4,SO8,4,G(1,Q^6),P1xP1xP1,•⊔•⊔•,∅"));
    CHECK(contains(so.err, "6"));
    CHECK(contains(run({"table", "sp", "--n", "4"}).out, "4,Sp10,5,P^9,P^1,∅,P^3"));
}

TEST_CASE("dot export") {
    const Result r = run({"export-dot", "--grid", "-"}, to_json(build_quadric_bundle(5)));
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.rfind("digraph", 0) == 0);
}
