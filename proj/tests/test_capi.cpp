#include <doctest.h>

#include <cstring>
#include <string>

#include "hurwitz/hurwitz.h"

namespace {
struct Ctx {
    hw_context* c = nullptr;
    Ctx() { hw_context_create(&c); }
    ~Ctx() { hw_context_destroy(c); }
};
std::string take(char* s) {
    std::string out = s ? s : "";
    hw_string_free(s);
    return out;
}
} // namespace

TEST_CASE("walks through the C API") {
    Ctx ctx;
    char *count = nullptr, *json = nullptr;
    REQUIRE(hw_walks(ctx.c, 3, "1,1,1", "3", "plain", 2, 0, "", 0, &count, &json) == HW_OK);
    CHECK(take(count) == "3");
    CHECK(take(json).find("\"count\":\"3\"") != std::string::npos);
    REQUIRE(hw_walks(ctx.c, 4, "1,1,1,1", "2,2", "multi", 0, 0, "1,1", 0, &count, &json) == HW_OK);
    take(json);
    CHECK(take(count) == "2");
}

TEST_CASE("errors carry codes and messages") {
    Ctx ctx;
    char *count = nullptr, *json = nullptr;
    CHECK(hw_walks(ctx.c, 3, "2,2", "3", "plain", 1, 0, "", 0, &count, &json) == HW_ERR_ARGUMENT);
    CHECK(std::strlen(hw_last_error(ctx.c)) > 0);
    CHECK(hw_walks(ctx.c, 3, "x", "3", "plain", 1, 0, "", 0, &count, &json) == HW_ERR_PARSE);
    CHECK(hw_chartable(ctx.c, 11, &json) == HW_ERR_SIZE_LIMIT);
    CHECK(hw_chartable(nullptr, 2, &json) == HW_ERR_ARGUMENT);
    CHECK(hw_chartable(ctx.c, 2, nullptr) == HW_ERR_ARGUMENT);
    REQUIRE(hw_chartable(ctx.c, 2, &json) == HW_OK);
    CHECK(std::string(hw_last_error(ctx.c)).empty());
    CHECK(take(json) == R"({"n":2,"order":["2","1,1"],"chi":[[1,1],[-1,1]]})");
}

TEST_CASE("tau handles") {
    Ctx ctx;
    hw_tau* t = nullptr;
    REQUIRE(hw_tau_build(ctx.c, "hciz", 2, nullptr, 0, 6, 6, &t) == HW_OK);
    char *eval = nullptr, *det = nullptr;
    REQUIRE(hw_tau_eval(ctx.c, t, "1,2", "1,3", &eval) == HW_OK);
    REQUIRE(hw_hciz_determinant(ctx.c, 2, "1,2", "1,3", 6, &det) == HW_OK);
    CHECK(take(eval) == take(det));
    char* log = nullptr;
    CHECK(hw_tau_log(ctx.c, t, &log) == HW_OK);
    CHECK(take(log).find("\"terms\"") != std::string::npos);
    hw_tau_destroy(t);
    CHECK(hw_tau_build(ctx.c, "alpha_q", 2, "3", 0, 6, 4, &t) == HW_ERR_ARGUMENT);
    CHECK(hw_tau_build(ctx.c, "bogus", 2, nullptr, 0, 6, 4, &t) == HW_ERR_ARGUMENT);
}

TEST_CASE("tables, gmatrix and verify") {
    Ctx ctx;
    char* out = nullptr;
    REQUIRE(hw_table(ctx.c, "monotone", 2, 2, 2, 0, "csv", &out) == HW_OK);
    CHECK(take(out).rfind("n,from,to,k,count\n", 0) == 0);
    CHECK(hw_table(ctx.c, "monotone", 2, 2, 2, 0, "xml", &out) == HW_ERR_ARGUMENT);
    REQUIRE(hw_gmatrix(ctx.c, 3, "monotone", 3, &out) == HW_OK);
    CHECK(take(out).rfind(R"({"n":3,"twist":"H")", 0) == 0);
    int passed = 0;
    char* timing = nullptr;
    REQUIRE(hw_verify(ctx.c, "characters", 4, 2, 4, 1, &passed, &out, &timing) == HW_OK);
    CHECK(passed == 1);
    CHECK(take(out).find("PASS characters/orthogonality") != std::string::npos);
    take(timing);
    CHECK(hw_verify(ctx.c, "nope", 4, 2, 4, 1, &passed, &out, &timing) == HW_ERR_ARGUMENT);
}
