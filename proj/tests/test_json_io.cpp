#include <doctest.h>

#include <vector>

#include "plethysm/engine.hpp"
#include "plethysm/json_io.hpp"

using namespace plethysm;
using nlohmann::json;

namespace {

Partition P(std::vector<int> parts) { return Partition{std::move(parts)}; }

}  // namespace

TEST_CASE("partition json round trip") {
    for (const Partition& p : {Partition{}, P({3, 1, 1}), P({7})})
        CHECK(partition_from_json(partition_to_json(p)) == p);
    CHECK(partition_to_json(P({3, 1})).dump() == "[3,1]");
}

TEST_CASE("bigint json uses numbers until they stop fitting") {
    CHECK(bigint_to_json(BigInt{-42}).is_number_integer());
    BigInt huge{1};
    for (int i = 0; i < 30; ++i) huge *= BigInt{10};
    CHECK(bigint_to_json(huge).is_string());
    CHECK(bigint_to_json(huge).get<std::string>() == huge.to_string());
}

TEST_CASE("expansion json schema and term order") {
    SchurExpansion f = pnhk_times_schur(2, 2, Partition{});
    json j = expansion_to_json(f, "s");
    CHECK(j.at("basis") == "s");
    REQUIRE(j.at("terms").size() == 3);
    CHECK(j["terms"][0]["key"] == json::array({4}));
    CHECK(j["terms"][0]["num"] == 1);
    CHECK(j["terms"][0]["den"] == 1);
    CHECK(j["terms"][1]["key"] == json::array({3, 1}));
    CHECK(j["terms"][1]["num"] == -1);
    CHECK(j["terms"][2]["key"] == json::array({2, 2}));
}

TEST_CASE("expansion json round trip") {
    PExpansion f = plethysm_pn_hk(2, 3);
    auto [back, basis] = expansion_from_json(expansion_to_json(f, "p"));
    CHECK(basis == "p");
    CHECK(back == f);
    // serialize-parse-serialize is byte identical
    json once = expansion_to_json(f, "p");
    auto [parsed, basis2] = expansion_from_json(once);
    CHECK(expansion_to_json(parsed, basis2).dump() == once.dump());
}

TEST_CASE("chain and matrix serialization") {
    StripChain chain{{Partition{}, P({1, 1}), P({2, 2})}, {1, 1}};
    json j = chain_to_json(chain);
    CHECK(j.at("stages").dump() == "[[],[1,1],[2,2]]");
    CHECK(j.at("weights").dump() == "[1,1]");

    json m = matrix_to_json(build_M(P({2, 2}), Partition{}, 2));
    CHECK(m.dump() == "[[1,0],[0,1]]");
    CHECK(matrix_to_json(IntMatrix{}).dump() == "[]");
}
