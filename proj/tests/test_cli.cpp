#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

#include "plethysm/json_io.hpp"
#include "plethysm/symfunc.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args, bool merge_stderr = false,
                  const std::string& env_prefix = "") {
    std::string cmd;
    if (!env_prefix.empty()) cmd += env_prefix + " ";
    cmd += PLETHYSM_CLI_PATH;
    cmd += " " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    while (size_t got = fread(buffer, 1, sizeof buffer, pipe)) result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("expand text output") {
    CliResult r = run_cli("expand --n 2 --k 1 --mu \"\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "+1·s[2] -1·s[1,1]\n");

    CHECK(run_cli("expand --n 3 --k 0 --mu \"2,1\"").output == "+1·s[2,1]\n");
}

TEST_CASE("expand json output") {
    CliResult r = run_cli("expand --n 2 --k 2 --mu \"\" --format json");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc.at("format_version") == 1);
    CHECK(doc.at("command") == "expand");
    CHECK(doc.at("inputs").at("n") == 2);
    CHECK(doc.at("inputs").at("mu") == json::array());
    const json& terms = doc.at("result").at("terms");
    REQUIRE(terms.size() == 3);
    CHECK(terms[0] == json({{"key", {4}}, {"num", 1}, {"den", 1}}));
    CHECK(terms[1] == json({{"key", {3, 1}}, {"num", -1}, {"den", 1}}));
    CHECK(terms[2] == json({{"key", {2, 2}}, {"num", 1}, {"den", 1}}));

    // byte-identical across invocations
    CHECK(run_cli("expand --n 2 --k 2 --mu \"\" --format json").output == r.output);
}

TEST_CASE("plethysm subcommands") {
    CHECK(run_cli("plethysm hh --n 2 --m 2").output == "+1·s[4] +1·s[2,2]\n");
    CHECK(run_cli("plethysm ph --mu \"2\" --m 2").output ==
          "+1·s[4] -1·s[3,1] +1·s[2,2]\n");
    CHECK(run_cli("plethysm hh --n 1 --m 5").output == "+1·s[5]\n");
}

TEST_CASE("waring output") {
    CHECK(run_cli("waring --n 2 --k 1").output == "-2·e[2] +1·e[1,1]\n");
    CHECK(run_cli("waring --n 1 --k 4").output == "+1·e[4]\n");

    // n=3, k=2 pinned against the independent Merca route
    CliResult r = run_cli("waring --n 3 --k 2 --format json");
    CHECK(r.exit_code == 0);
    auto [expansion, basis] =
        plethysm::expansion_from_json(json::parse(r.output).at("result"));
    CHECK(basis == "e");
    CHECK(expansion == plethysm::merca_waring(2, 3));
}

TEST_CASE("classify text output") {
    CHECK(run_cli("classify --lambda \"2,2\" --mu \"\" --n 2 --k 2").output ==
          "Horizontal, m=2, sign=+1, det=+1\n");
    CHECK(run_cli("classify --lambda \"2,1,1\" --mu \"\" --n 2 --k 2").output ==
          "NonHorizontal, m=1, sign=0, det=0\n");
    CHECK(run_cli("classify --lambda \"3\" --mu \"\" --n 3 --k 1").output ==
          "Horizontal, m=1, sign=+1, det=+1\n");
}

TEST_CASE("classify with chains") {
    CliResult r = run_cli("classify --lambda \"2,2\" --mu \"\" --n 2 --k 2 --show-chains");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "Horizontal, m=2, sign=+1, det=+1\n"
          "chain 1: [] -> [2] -> [2,2] | weights=[1,1] | spins=[0,0] | horizontal=no\n"
          "chain 2: [] -> [1,1] -> [2,2] | weights=[1,1] | spins=[1,1] | horizontal=yes\n");
}

TEST_CASE("verify command") {
    CliResult trivial = run_cli("verify --max-degree 0");
    CHECK(trivial.exit_code == 0);
    CHECK(trivial.output == "all checks passed (1 cases)\n");

    CliResult small = run_cli("verify --max-degree 8");
    CHECK(small.exit_code == 0);
    CHECK(small.output.rfind("all checks passed", 0) == 0);

    // the full desk-scale budget; also the slowest single invocation
    CliResult full = run_cli("verify --max-degree 12");
    CHECK(full.exit_code == 0);
    CHECK(full.output.rfind("all checks passed", 0) == 0);

    CliResult doc = run_cli("verify --max-degree 0 --seed 7 --format json");
    json j = json::parse(doc.output);
    CHECK(j.at("result").at("passed") == true);
    CHECK(j.at("result").at("cases") == 1);
    CHECK(j.at("inputs").at("seed") == 7);
}

TEST_CASE("verify ceiling") {
    CHECK(run_cli("verify --max-degree 99", true).exit_code == 2);
    CHECK(run_cli("verify --max-degree 6", true, "PLETHYSM_MAX_DEGREE=5").exit_code == 2);
    CHECK(run_cli("verify --max-degree 5", true, "PLETHYSM_MAX_DEGREE=5").exit_code == 0);
}

TEST_CASE("usage errors exit with code 2") {
    CliResult bad_mu = run_cli("expand --n 2 --k 1 --mu \"1,2\"", true);
    CHECK(bad_mu.exit_code == 2);
    CHECK(bad_mu.output.find("error") != std::string::npos);

    CliResult mismatch = run_cli("classify --lambda \"2,2\" --mu \"\" --n 2 --k 1", true);
    CHECK(mismatch.exit_code == 2);
    CHECK(mismatch.output.find("SizeMismatch") != std::string::npos);

    CHECK(run_cli("expand --n 2 --k 1 --bogus", true).exit_code == 2);
    CHECK(run_cli("", true).exit_code == 2);
    CHECK(run_cli("plethysm", true).exit_code == 2);
}
