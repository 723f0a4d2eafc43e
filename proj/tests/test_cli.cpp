#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "subprocess.hpp"

using testutil::run_cli;

namespace {

std::string golden_path(const std::string& name) {
    return std::string(SEMIMOD_GOLDEN_DIR) + "/" + name;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/semimod_test_" + name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("exit code contract: injectivity decisions") {
    CHECK(run_cli("inj --kind plain S3 S3").exit_code == 0);
    CHECK(run_cli("inj --kind i S3 S3").exit_code == 0);
    auto e = run_cli("inj --kind e S3 S3");
    CHECK(e.exit_code == 1);
    CHECK(e.output.find("{0,a}") != std::string::npos);
    CHECK(e.output.find("0->0, 1->1, a->a") != std::string::npos);
    CHECK(e.output.find("0->0, 1->a, a->a") != std::string::npos);
}

TEST_CASE("exit code contract: usage, parse and cap errors") {
    CHECK(run_cli("inj --kind bogus S3 S3").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("subs NoSuchModule").exit_code == 2);
    CHECK(run_cli("hom S3xS3 S3xS3 --cap 10").exit_code == 3);

    std::string bad = write_temp("parse_error.alg", "semiring ! broken");
    CHECK(run_cli("validate " + bad).exit_code == 2);
}

TEST_CASE("validate splits malformed files from invalid algebras") {
    std::string invalid = write_temp("invalid.alg", R"(
semiring Bad /
elements 0 1 /
zero 0 /
one 1 /
add
0 1
1 0
/
mul
0 1
0 1
/
end
)");
    auto r = run_cli("validate " + invalid);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("absorption") != std::string::npos);

    std::string valid = write_temp("valid.alg", R"(
semiring W /
elements 0 1 /
zero 0 /
one 1 /
add
0 1
1 1
/
mul
0 0
0 1
/
end
)");
    CHECK(run_cli("validate " + valid).exit_code == 0);

    std::string nonlinear = write_temp("nonlinear.alg", R"(
map h : B -> B /
0 -> 1
1 -> 0
/
end
)");
    auto broken_map = run_cli("validate " + nonlinear);
    CHECK(broken_map.exit_code == 1);
    CHECK(broken_map.output.find("zero") != std::string::npos);
}

TEST_CASE("subs and hom listings") {
    auto subs = run_cli("subs S3");
    CHECK(subs.exit_code == 0);
    CHECK(subs.output.find("{0}") != std::string::npos);
    CHECK(subs.output.find("{0,a}") != std::string::npos);
    CHECK(subs.output.find("{0,1,a}") != std::string::npos);

    auto subs_subtractive = run_cli("subs N2 --subtractive");
    CHECK(subs_subtractive.output.find("{0,2}") == std::string::npos);

    auto hom = run_cli("hom S3 S3");
    CHECK(hom.exit_code == 0);
    CHECK(hom.output.find("\"count\"") == std::string::npos);  // text mode
    CHECK(hom.output.find("count") != std::string::npos);
}

TEST_CASE("sequence classification and dualization") {
    CHECK(run_cli("seq S3.incl0a S3.proj0a").exit_code == 0);
    auto dual = run_cli("seq S3.incl0a S3.proj0a --dualize S3");
    CHECK(dual.exit_code == 1);
    CHECK(dual.output.find("proper_exact: true") != std::string::npos);
    CHECK(dual.output.find("exact: false") != std::string::npos);
}

TEST_CASE("retract decisions") {
    CHECK(run_cli("retract B BxB").exit_code == 0);
    CHECK(run_cli("retract S3.mod0a S3").exit_code == 1);
}

TEST_CASE("corpus and matrix demo succeed") {
    CHECK(run_cli("corpus").exit_code == 0);
    CHECK(run_cli("matrix-demo --samples 50 --seed 7").exit_code == 0);
}

TEST_CASE("loaded files participate in commands") {
    std::string path = write_temp("loaded.alg", R"(
map collapse : S3 -> S3.mod0a /
0 -> [0]
1 -> [1]
a -> [0]
/
end
)");
    CHECK(run_cli("--load " + path + " seq S3.incl0a collapse").exit_code == 0);
}

TEST_CASE("worker count does not change output") {
    auto serial = run_cli("hom S3xS3 S3xS3 --jobs 1");
    auto parallel = run_cli("hom S3xS3 S3xS3 --jobs 4");
    CHECK(serial.exit_code == 0);
    CHECK(serial.output == parallel.output);
}

TEST_CASE("refutation-only absolute mode") {
    auto refuted = run_cli("inj --kind e S3 --corpus-bound 3");
    CHECK(refuted.exit_code == 1);
    CHECK(refuted.output.find("refuting_module") != std::string::npos);

    auto open = run_cli("inj --kind e B --corpus-bound 4");
    CHECK(open.exit_code == 0);
    CHECK(open.output.find("NOT certified") != std::string::npos);

    CHECK(run_cli("inj --kind e S3 S3 --corpus-bound 3").exit_code == 2);

    auto cancellative = run_cli("inj --kind i Z2 --corpus-bound 4 --cancellative");
    CHECK(cancellative.exit_code == 0);
    CHECK(cancellative.output.find("c-i-injective") != std::string::npos);
}

TEST_CASE("json reports are stable golden files") {
    auto subs = run_cli("--json subs S3");
    CHECK(subs.exit_code == 0);
    CHECK(subs.output == read_text(golden_path("subs_s3.json")));

    auto inj = run_cli("--json inj --kind e S3 S3");
    CHECK(inj.exit_code == 1);
    CHECK(inj.output == read_text(golden_path("inj_e_s3.json")));

    // Identical invocations give byte-identical output.
    CHECK(run_cli("--json subs S3").output == subs.output);
    // And the payload stays machine-readable.
    CHECK(nlohmann::json::parse(subs.output).at("verdict").get<bool>());
}
