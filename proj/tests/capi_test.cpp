#include "monocomp/monocomp.h"

#include <doctest.h>
#include <json.hpp>

#include <cstring>

using json = nlohmann::json;

namespace {

struct Ctx {
    mc_context* ctx = nullptr;
    Ctx() { REQUIRE(mc_context_create(&ctx) == MC_OK); }
    ~Ctx() { mc_context_destroy(ctx); }
};

json first(mc_result* r)
{
    REQUIRE(r);
    REQUIRE(mc_result_count(r) >= 1);
    json out = json::parse(mc_result_record(r, 0));
    mc_result_destroy(r);
    return out;
}

}  // namespace

TEST_CASE("version and status strings")
{
    CHECK(std::strcmp(mc_version(), "0.1.0") == 0);
    CHECK(std::strcmp(mc_status_string(MC_OK), "ok") == 0);
    CHECK(std::strlen(mc_status_string(MC_ERR_NOT_PRIME)) > 0);
}

TEST_CASE("null handles")
{
    mc_result* r = nullptr;
    CHECK(mc_context_create(nullptr) == MC_ERR_NULL);
    CHECK(mc_check(nullptr, 2, 2, "2", "1", &r) == MC_ERR_NULL);
    CHECK(mc_result_count(nullptr) == 0);
    CHECK(mc_result_record(nullptr, 0) == nullptr);
    mc_result_destroy(nullptr);
    mc_context_destroy(nullptr);
}

TEST_CASE("check")
{
    Ctx c;
    mc_result* r = nullptr;
    REQUIRE(mc_check(c.ctx, 3, 3, "3", "6", &r) == MC_OK);
    CHECK_FALSE(mc_result_has_unknown(r));
    json const j = first(r);
    CHECK(j["verdict"] == "monogenic");
    CHECK(j["primes"] == json::array({3, 73}));
    CHECK(j["case"] == json::array({"I", "V"}));
    CHECK(j["index"] == json::array({"not-divides", "not-divides"}));
    CHECK(j["witness"].is_null());
}

TEST_CASE("check with verification and a failing prime")
{
    Ctx c;
    REQUIRE(mc_context_set_verify(c.ctx, 1) == MC_OK);
    mc_result* r = nullptr;
    REQUIRE(mc_check(c.ctx, 2, 2, "7", "4", &r) == MC_OK);
    json const j = first(r);
    CHECK(j["verdict"] == "not-monogenic");
    CHECK(j["witness"]["prime"] == 3);
    CHECK(j["witness"]["case"] == "V");
    CHECK(j["oracle"] == j["index"]);
}

TEST_CASE("big integers cross the boundary as strings")
{
    Ctx c;
    mc_result* r = nullptr;
    REQUIRE(mc_disc(c.ctx, 2, 3, "123456789012345678901234567890", "-98765432109876543210", &r) == MC_OK);
    json const j = first(r);
    CHECK(j["a"] == "123456789012345678901234567890");
    CHECK(j["magnitude"].is_string());
}

TEST_CASE("disc sign flag")
{
    Ctx c;
    mc_context_set_verify(c.ctx, 1);
    mc_result* r = nullptr;
    REQUIRE(mc_disc(c.ctx, 2, 2, "2", "1", &r) == MC_OK);
    json const j = first(r);
    CHECK(j["magnitude"] == "1024");
    CHECK(j["paper_sign"] == 1);
    CHECK(j["oracle_sign"] == -1);
    CHECK(j["flags"] == json::array({"sign-mismatch"}));
}

TEST_CASE("dedekind and its errors")
{
    Ctx c;
    mc_result* r = nullptr;
    REQUIRE(mc_dedekind(c.ctx, "[-5, 0, 1]", "2", &r) == MC_OK);
    json const j = first(r);
    CHECK(j["verdict"] == "divides");
    CHECK(j["witness"] == json::array({1, 1}));
    CHECK(mc_dedekind(c.ctx, "[-5, 0, 1]", "9", &r) == MC_ERR_NOT_PRIME);
    CHECK(r == nullptr);
    CHECK(std::strlen(mc_context_last_error(c.ctx)) > 0);
    CHECK(mc_dedekind(c.ctx, "[-5, 0, 1", "2", &r) == MC_ERR_PARSE);
    CHECK(mc_dedekind(c.ctx, "[-5, 0, 2]", "2", &r) == MC_ERR_DOMAIN);
    CHECK(mc_dedekind(c.ctx, "[-5, 0, 1]", "two", &r) == MC_ERR_ARGUMENT);
}

TEST_CASE("binom")
{
    Ctx c;
    mc_result* r = nullptr;
    REQUIRE(mc_binom(c.ctx, 2, "5", &r) == MC_OK);
    CHECK(first(r)["verdict"] == "no");
    REQUIRE(mc_binom(c.ctx, 3, "2", &r) == MC_OK);
    CHECK(first(r)["verdict"] == "yes");
    CHECK(mc_binom(c.ctx, 3, "0", &r) == MC_ERR_DOMAIN);
}

TEST_CASE("search and example")
{
    Ctx c;
    mc_result* r = nullptr;
    REQUIRE(mc_search(c.ctx, {2, 2}, {2, 2}, {5, 5}, {1, 3}, 0, &r) == MC_OK);
    REQUIRE(mc_result_count(r) == 3);
    json const all = json::parse(mc_result_json(r));
    for (auto const& rec : all)
        CHECK(rec["pair"]["verdict"] == "fail-f");
    CHECK(mc_result_record(r, 3) == nullptr);
    mc_result_destroy(r);

    CHECK(mc_search(c.ctx, {2, 2}, {2, 2}, {5, 1}, {1, 3}, 0, &r) == MC_ERR_ARGUMENT);
    CHECK(mc_context_set_shards(c.ctx, 0) == MC_ERR_ARGUMENT);

    REQUIRE(mc_example(c.ctx, 11, &r) == MC_OK);
    REQUIRE(mc_result_count(r) == 4);
    json const fam = json::parse(mc_result_json(r));
    CHECK(fam[3]["p"] == 11);
    CHECK(fam[3]["verdict"] == "not-monogenic");
    CHECK(fam[3]["square_witness"] == 3);
    mc_result_destroy(r);
}

TEST_CASE("budget levels")
{
    Ctx c;
    CHECK(mc_context_set_budget(c.ctx, "low") == MC_OK);
    CHECK(mc_context_set_budget(c.ctx, "maximal") == MC_ERR_ARGUMENT);
    CHECK(mc_context_set_budget(c.ctx, nullptr) == MC_ERR_NULL);
}
