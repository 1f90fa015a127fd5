#include <doctest.h>

#include "lieinv/cli.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/problem.hpp"

#include <json.hpp>

#include <cstdlib>
#include <sstream>

using namespace lieinv;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(LIEINV_DATA_DIR) + "/" + name + ".json"; }

ErrorKind parse_error_kind(const std::string& text) {
    try {
        parse_problem(text);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Resource;
}

std::string message_of(const std::string& text) {
    try {
        parse_problem(text);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("problem parsing") {
    const auto p = parse_problem(R"({"schema": 1, "algebra": {"dim": 3, "brackets": [[2, 1, 3, "-1"]]},
                                     "options": {"seed": 4, "probe-count": 12, "tolerance": 1e-8}})");
    CHECK(p.algebra.constant(0, 1, 2) == Expr(1));
    CHECK(p.seed == 4u);
    CHECK(p.verify.points == 12);
    CHECK(p.name == "problem");

    const auto minus = parse_problem(R"({"schema": 1, "algebra": {"dim": 1},
        "representation": {"dim": 1, "matrices": [[["1/2"]]]}, "options": {"convention": "minus"}})");
    CHECK(minus.representation->matrix(0)(0, 0) == Expr(Rational(-1, 2)));
}

TEST_CASE("problem diagnostics name the field") {
    CHECK(parse_error_kind("{\"schema\": 1,\n  \"algebra\": }") == ErrorKind::Parse);
    CHECK(message_of("{\"schema\": 1,\n  \"algebra\": }").find("line 2") != std::string::npos);
    CHECK(message_of(R"({"schema": 2, "algebra": {"dim": 1}})").find("schema") != std::string::npos);
    CHECK(message_of(R"({"schema": 1, "algebra": {"dim": 2, "brackets": [[1, 3, 1, 1]]}})")
              .find("algebra.brackets[0][1]") != std::string::npos);
    CHECK(message_of(R"({"schema": 1, "algebra": {"dim": 2, "brackets": [[1, 2, 1, 0.5]]}})").find("inexact") !=
          std::string::npos);
    CHECK(message_of(R"({"schema": 1, "algebra": {"dim": 2, "brackets": [[1, 2, 1, 1], [2, 1, 1, 1]]}})")
              .find("duplicate") != std::string::npos);
    CHECK(message_of(R"({"schema": 1, "algebra": {"dim": 2}, "extra": 0})").find("extra: unknown field") !=
          std::string::npos);
    CHECK(message_of(R"({"schema": 1, "algebra": {"dim": 2}, "covector": {"entries": ["j1*j2", "0"], "params": ["j1", "j2"]}})")
              .find("affine") != std::string::npos);
}

TEST_CASE("validate and index") {
    const auto r = cli({"validate", data("worked")});
    CHECK(r.code == 0);
    CHECK(r.out == "algebra valid; representation valid; N = 2\n");
    CHECK(cli({"index", data("heisenberg")}).out == "index = 1\n");
    const auto j = nlohmann::json::parse(cli({"index", data("rotation"), "--format", "json"}).out);
    CHECK(j["index"] == 2);
    CHECK(j["invariant_count"] == 2);
}

TEST_CASE("exit codes") {
    CHECK(cli({}).code == 1);
    CHECK(cli({"casimirs"}).code == 1);
    CHECK(cli({"casimirs", data("missing-file")}).code == 1);
    CHECK(cli({"rep-invariants", data("heisenberg")}).code == 1);
    const auto failed = cli({"casimirs", data("rotation"), "--format", "json"});
    CHECK(failed.code == 2);
    CHECK(failed.err.find("stage polarize") != std::string::npos);
    const auto j = nlohmann::json::parse(failed.out);
    CHECK(j["error"]["kind"] == "polarization-not-found");
    CHECK(j["error"]["stage"] == "polarize");
}

TEST_CASE("Casimirs of the abelian algebra") {
    const auto r = cli({"casimirs", data("abelian3"), "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "complete");
    REQUIRE(j["invariants"].size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(j["invariants"][i]["expr"] == "X" + std::to_string(i + 1));
}

TEST_CASE("JSON invariants re-parse to their normal form") {
    for (const char* cmd : {"rep-invariants", "conjugate-invariants"}) {
        const auto r = cli({cmd, data("rotation"), "--format", "json"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        for (const auto& inv : j["invariants"]) {
            const std::string text = inv["expr"];
            CHECK(parse_expr(text).to_string() == text);
            CHECK(inv["verdict"] == "symbolic");
        }
    }
}

TEST_CASE("seed precedence and determinism") {
    const auto a = cli({"rep-invariants", data("worked"), "--format", "json", "--seed", "11"});
    const auto b = cli({"rep-invariants", data("worked"), "--format", "json", "--seed", "11"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["seed"] == 11);

    setenv(kSeedVariable, "77", 1);
    CHECK(nlohmann::json::parse(cli({"index", data("heisenberg"), "--format", "json"}).out)["seed"] == 77);
    CHECK(nlohmann::json::parse(cli({"index", data("heisenberg"), "--format", "json", "--seed", "3"}).out)["seed"] == 3);
    setenv(kSeedVariable, "not-a-number", 1);
    CHECK(cli({"index", data("heisenberg")}).code == 1);
    unsetenv(kSeedVariable);
}

TEST_CASE("verify subcommand") {
    const auto ok = cli({"verify", data("worked"), "--invariant", "x2/x3", "--format", "json"});
    REQUIRE(ok.code == 0);
    CHECK(nlohmann::json::parse(ok.out)["verdict"] == "symbolic");
    const auto bad = cli({"verify", data("worked"), "--invariant", "x1"});
    CHECK(bad.code == 0);
    CHECK(bad.out.find("refuted") != std::string::npos);
    CHECK(cli({"verify", data("worked"), "--invariant", "X1"}).code == 1);
    const auto conj = cli({"verify", data("rotation"), "--invariant", "X2^2 + X3^2 - 2*X1*X4", "--on", "conjugate"});
    CHECK(conj.out.find("symbolic") != std::string::npos);
}
