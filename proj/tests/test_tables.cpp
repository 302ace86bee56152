#include <doctest.h>

#include <json.hpp>

#include "hurwitz/error.hpp"

#include "hurwitz/serialize.hpp"
#include "hurwitz/tables.hpp"
#include "hurwitz/twist.hpp"
#include "hurwitz/walks.hpp"

using namespace hurwitz;

namespace {
const TableRow* find(const std::vector<TableRow>& rows, int n, const Partition& from, const Partition& to,
                     const std::vector<std::pair<std::string, int>>& steps) {
    for (const auto& r : rows)
        if (r.n == n && r.from == from && r.to == to && r.steps == steps) return &r;
    return nullptr;
}
} // namespace

TEST_CASE("plain table example") {
    auto rows = hurwitz_table({TableKind::Plain, 3, 2, 2, false});
    auto r = find(rows, 3, Partition{1, 1, 1}, Partition{3}, {{"b", 2}});
    REQUIRE(r);
    CHECK(r->count == Rational(3));
    CHECK(parse_table_kind("okounkov") == TableKind::Plain);
    CHECK(parse_table_kind("hciz") == TableKind::Monotone);
    CHECK_THROWS_AS(parse_table_kind("nope"), ArgumentError);
}

TEST_CASE("strict walks stop at n - 1 steps") {
    for (const auto& r : hurwitz_table({TableKind::Strict, 4, 6, 2, false}))
        if (r.steps[0].second > r.n - 1) CHECK(r.count.is_zero());
}

TEST_CASE("multi table equals the E*E twist and the segmented walks") {
    auto rows = hurwitz_table({TableKind::Multi, 4, 2, 2, false});
    TwistSpec ee({EAtom{"w1", {}}, EAtom{"w2", {}}}, {{"w1", 2}, {"w2", 2}});
    auto g = connection_coeffs(ee, 4);
    auto walks = walk_count_matrix(4, WalkConstraint::multi_monotone({1, 1}), false);
    for (const auto& l : partitions_of(4))
        for (const auto& m : partitions_of(4)) {
            auto r = find(rows, 4, l, m, {{"d1", 1}, {"d2", 1}});
            REQUIRE(r);
            CHECK(r->count == g.at(l, m).coefficient({{"w1", 1}, {"w2", 1}}));
            CHECK(r->count == Rational(walks[partition_index(l)][partition_index(m)]));
        }
}

TEST_CASE("connected rows") {
    auto rows = hurwitz_table({TableKind::Plain, 3, 2, 2, true});
    auto r = find(rows, 3, Partition{1, 1, 1}, Partition{3}, {{"b", 2}});
    REQUIRE(r);
    CHECK(r->connected);
    CHECK(r->count == Rational(3));
    // (12)(12) is connected, a lone 2-cycle start with no steps is too, the identity is not
    auto r2 = find(rows, 2, Partition{1, 1}, Partition{1, 1}, {{"b", 2}});
    REQUIRE(r2);
    CHECK(r2->count == Rational(1));
    auto r3 = find(rows, 2, Partition{1, 1}, Partition{1, 1}, {{"b", 0}});
    REQUIRE(r3);
    CHECK(r3->count.is_zero());
    auto r4 = find(rows, 2, Partition{2}, Partition{2}, {{"b", 0}});
    REQUIRE(r4);
    CHECK(r4->count == Rational(1));
}

TEST_CASE("serialization") {
    auto rows = hurwitz_table({TableKind::Monotone, 2, 1, 2, false});
    std::string csv = table_csv(rows);
    CHECK(csv.rfind("n,from,to,k,count\n", 0) == 0);
    CHECK(csv.find("2,\"1,1\",\"2\",1,1\n") != std::string::npos);
    auto j = nlohmann::json::parse(table_json(rows));
    REQUIRE(j.is_array());
    CHECK(j[0]["n"] == 1);
    CHECK(j[0]["from"] == "1");
    CHECK(j[0]["steps"]["k"] == 0);
    CHECK(j[0]["count"] == "1");
    CHECK(j[0]["connected"] == false);
    CHECK(chartable_json(*character_table(2)) == R"({"n":2,"order":["2","1,1"],"chi":[[1,1],[-1,1]]})");
    TruncSeries s = TruncSeries::monomial(Rational(12), {{"z", 3}}, {{"z", 5}}) + TruncSeries(Rational(1, 2));
    CHECK(series_json(s) == R"({"1":"1/2","z^3":"12"})");
    SymFunc f = schur_to_powersum(Partition{2, 1});
    CHECK(symfunc_from_json(symfunc_json(f)) == f);
    CHECK_THROWS_AS(symfunc_from_json("{\"basis\":\"q\"}"), ParseError);
    CHECK_THROWS_AS(symfunc_from_json("not json"), ParseError);
}
