// End-to-end tests for the command-line tool: frozen outputs, exit codes,
// and byte-for-byte determinism. The binary path is injected at compile
// time as PELLFRAC_CLI_PATH.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PELLFRAC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = out;
    return r;
}

nlohmann::json parse_json(const std::string& text) {
    return nlohmann::json::parse(text);
}

}  // namespace

TEST_CASE("frozen command outputs", "[cli]") {
    SECTION("expand, text mode") {
        const RunResult r = run_cli("expand \"sqrt(11)\"");
        CHECK(r.code == 0);
        CHECK(r.out == "[3; (3, 6)]\n");
    }

    SECTION("rank, json mode") {
        const RunResult r = run_cli("--format json rank \"(3+sqrt(5))/2\"");
        CHECK(r.code == 0);
        const std::string expected = R"x({
  "schema_version": 1,
  "theta": "(3+sqrt(5))/2",
  "rank": 0,
  "complexity": 1,
  "method": "family-match"
})x";
        CHECK(r.out == expected + "\n");
    }

    SECTION("sha, json mode") {
        const RunResult r = run_cli("--format json sha \"sqrt(10)\"");
        CHECK(r.code == 0);
        const std::string expected = R"x({
  "schema_version": 1,
  "theta": "sqrt(10)",
  "discriminant": 40,
  "fundamental_discriminant": 40,
  "conductor": 1,
  "monogenic": true,
  "h_plus": 2,
  "sha_divisors": [
    2,
    2
  ],
  "sha_order": 4
})x";
        CHECK(r.out == expected + "\n");
    }

    SECTION("eval inverts expand") {
        const RunResult r = run_cli("eval \"[3; (3, 6)]\"");
        CHECK(r.code == 0);
        CHECK(r.out == "sqrt(11)\n");
    }

    SECTION("surd quadruple input form") {
        const RunResult r = run_cli("expand \"3 1 2 5\"");
        CHECK(r.code == 0);
        CHECK(r.out == "[2; (1)]\n");
    }
}

TEST_CASE("json reports carry schema version and expected fields", "[cli]") {
    SECTION("expand") {
        const RunResult r = run_cli("--format json expand \"sqrt(11)\"");
        REQUIRE(r.code == 0);
        const auto j = parse_json(r.out);
        CHECK(j.at("schema_version") == 1);
        CHECK(j.at("theta") == "sqrt(11)");
        CHECK(j.at("preperiod") == nlohmann::json::array({3}));
        CHECK(j.at("period") == nlohmann::json::array({3, 6}));
        CHECK(j.at("signature") == nlohmann::json::array({1, 2}));
        CHECK(j.at("text") == "[3; (3, 6)]");
    }

    SECTION("matrix") {
        const RunResult r = run_cli("--format json matrix \"[3; (3, 6)]\"");
        REQUIRE(r.code == 0);
        const auto j = parse_json(r.out);
        CHECK(j.at("matrix") == nlohmann::json::array({{10, 33}, {3, 10}}));
        CHECK(j.at("det") == 1);
        CHECK(j.at("induced_quadratic") == nlohmann::json::array({1, 0, -11}));
    }

    SECTION("bej-build symbolic") {
        const RunResult r = run_cli("--format json bej-build 1 2");
        REQUIRE(r.code == 0);
        const auto j = parse_json(r.out);
        CHECK(j.at("symbolic") == true);
        CHECK(j.at("variables") ==
              nlohmann::json::array({"A", "B", "C", "y1", "x1", "x2"}));
        CHECK(j.at("equations").size() == 3);
        CHECK(j.at("equations")[0] == "-2*A*y1*x1 + A*x1*x2 - B*x1");
    }

    SECTION("bej-check") {
        const RunResult r = run_cli("--format json bej-check \"sqrt(11)\"");
        REQUIRE(r.code == 0);
        const auto j = parse_json(r.out);
        CHECK(j.at("member") == true);
        CHECK(j.at("fiber") == nlohmann::json::array({3, 10}));
        CHECK(j.at("on_conic") == true);
    }

    SECTION("bej-classify") {
        const RunResult r = run_cli("--format json bej-classify 1 0 -3");
        REQUIRE(r.code == 0);
        const auto j = parse_json(r.out);
        REQUIRE(j.at("components").size() == 2);
        CHECK(j.at("components")[0].at("kind") == "zero-tail");
        CHECK(j.at("components")[0].at("dimension") == 1);
        CHECK(j.at("components")[1].at("kind") == "parametrized");
    }

    SECTION("pell fundamental solutions for a pure square root") {
        const RunResult r = run_cli("--format json pell \"sqrt(13)\" --height-bound 20");
        REQUIRE(r.code == 0);
        const auto j = parse_json(r.out);
        CHECK(j.at("conic").at("parity") == 1);
        CHECK(j.at("conic").at("rhs") == -1);
        CHECK(j.at("fundamental").at("plus") == nlohmann::json::array({180, 649}));
        CHECK(j.at("fundamental").at("minus") == nlohmann::json::array({5, 18}));
        CHECK(j.at("solutions") ==
              nlohmann::json::array({{-5, -18}, {-5, 18}, {5, -18}, {5, 18}}));
    }

    SECTION("pell omits the fundamental block off the pure-root case") {
        const RunResult r =
            run_cli("--format json pell \"(3+sqrt(5))/2\" --height-bound 5");
        REQUIRE(r.code == 0);
        const auto j = parse_json(r.out);
        CHECK(!j.contains("fundamental"));
        CHECK(j.at("conic").at("B") == -3);
    }

    SECTION("complexity via implicitization") {
        const RunResult r = run_cli("--format json complexity \"2+sqrt(2)\"");
        REQUIRE(r.code == 0);
        const auto j = parse_json(r.out);
        CHECK(j.at("method") == "implicitization");
        CHECK(j.at("dimension") == 1);
        CHECK(j.at("complexity") == 1);
        CHECK(j.at("predicted_rank") == 0);
        CHECK(j.at("samples_used") == 5);
    }

    SECTION("complexity via family matching") {
        const RunResult r = run_cli("--format json complexity \"sqrt(11)\"");
        REQUIRE(r.code == 0);
        const auto j = parse_json(r.out);
        CHECK(j.at("method") == "family-match");
        CHECK(j.at("dimension") == 2);
        CHECK(j.at("family_parameters").at("u") == "3/2");
        CHECK(j.at("family_parameters").at("v") == "2");
        CHECK(j.at("samples_used") == 0);
    }

    SECTION("classgroup") {
        const RunResult r = run_cli("--format json classgroup 40");
        REQUIRE(r.code == 0);
        const auto j = parse_json(r.out);
        CHECK(j.at("form_count") == 8);
        CHECK(j.at("h_plus") == 2);
        CHECK(j.at("cycles").size() == 2);
        CHECK(j.at("group") == nlohmann::json::array({2}));
        CHECK(j.at("sha") == nlohmann::json::array({2, 2}));
        CHECK(j.at("sha_order") == 4);
    }

    SECTION("verify-family reports counts") {
        const RunResult r = run_cli("--format json verify-family euler-q --b-max 31");
        REQUIRE(r.code == 0);
        const auto j = parse_json(r.out);
        CHECK(j.at("family") == "euler-q");
        CHECK(j.at("checked") == 15);
        CHECK(j.at("failures").empty());
        CHECK(j.at("all_pass") == true);
    }

    SECTION("corroborate-curve") {
        const RunResult r = run_cli("--format json corroborate-curve 3 --height-bound 60");
        REQUIRE(r.code == 0);
        const auto j = parse_json(r.out);
        CHECK(j.at("model_roots") == nlohmann::json::array({0, 25, 5}));
        CHECK(j.at("all_torsion") == true);
        bool saw_origin = false;
        for (const auto& p : j.at("points")) {
            CHECK(p.size() == 3);
            CHECK(p[2] == 2);  // every point on this fiber is two-torsion
            if (p[0] == "0" && p[1] == "0") saw_origin = true;
        }
        CHECK(saw_origin);
        CHECK(j.at("note") ==
              "absence of nontorsion points at this bound is evidence, not proof");
    }
}

TEST_CASE("exit codes", "[cli]") {
    SECTION("success is 0") {
        CHECK(run_cli("expand \"sqrt(2)\"").code == 0);
        CHECK(run_cli("--help").code == 0);
        CHECK(run_cli("verify-family euler-cm --b-max 25").code == 0);
    }

    SECTION("validation errors are 2") {
        CHECK(run_cli("expand \"sqrt(4)\"").code == 2);   // perfect square radicand
        CHECK(run_cli("expand \"sqrt(-3)\"").code == 2);  // negative radicand
        CHECK(run_cli("eval \"[3; ()]\"").code == 2);     // empty period
        CHECK(run_cli("eval \"[3; (0, 2)]\"").code == 2); // zero digit in period
        CHECK(run_cli("").code == 2);                     // missing subcommand
        CHECK(run_cli("no-such-command").code == 2);
        CHECK(run_cli("--format xml expand \"sqrt(2)\"").code == 2);
        CHECK(run_cli("complexity \"sqrt(7)\" --window 2").code == 2);
        CHECK(run_cli("complexity \"sqrt(7)\" --max-deg 0").code == 2);
        CHECK(run_cli("bej-build 1 0").code == 2);        // period length must be >= 1
        CHECK(run_cli("bej-classify 0 0 0").code == 2);   // all-zero coefficient triple
        CHECK(run_cli("classgroup 9").code == 2);         // square discriminant
        CHECK(run_cli("classgroup 7").code == 2);         // 3 mod 4
        CHECK(run_cli("verify-family no-such-family --b-max 5").code == 2);
        CHECK(run_cli("corroborate-curve 2").code == 2);  // family needs b >= 3
    }

    SECTION("soft failures are 3 and still print a partial report") {
        const RunResult golden = run_cli("--format json complexity \"(1+sqrt(5))/2\"");
        CHECK(golden.code == 3);
        const auto j1 = parse_json(golden.out);
        CHECK(j1.at("schema_version") == 1);
        CHECK(j1.at("error") == "no stable signature");

        const RunResult orphan = run_cli("--format json rank \"(-1+sqrt(15))/2\"");
        CHECK(orphan.code == 3);
        const auto j2 = parse_json(orphan.out);
        CHECK(j2.at("error") == "no known family");
        CHECK(j2.at("signature") == nlohmann::json::array({1, 2}));
    }
}

TEST_CASE("output is byte-for-byte deterministic", "[cli]") {
    const std::string invocations[] = {
        "--format json complexity \"sqrt(7)\"",
        "--format json classgroup 145",
        "--format json pell \"sqrt(29)\" --height-bound 100",
        "corroborate-curve 5 --height-bound 80",
    };
    for (const std::string& args : invocations) {
        const RunResult first = run_cli(args);
        const RunResult second = run_cli(args);
        INFO("invocation: " << args);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
        CHECK(!first.out.empty());
    }
}
