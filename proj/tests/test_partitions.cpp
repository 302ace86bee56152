#include <doctest.h>

#include "hurwitz/error.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

using namespace hurwitz;

TEST_CASE("enumeration in canonical order") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());
    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition{4});
    CHECK(p4[1] == Partition{3, 1});
    CHECK(p4[2] == Partition{2, 2});
    CHECK(p4[3] == Partition{2, 1, 1});
    CHECK(p4[4] == Partition{1, 1, 1, 1});
    CHECK(partitions_of(8).size() == 22);
    for (int n = 0; n <= 12; ++n) CHECK(partitions_of(n).size() == oracle::partition_count_pentagonal(n));
    CHECK_THROWS_AS(partitions_of(13), SizeLimitError);
    CHECK(partition_index(Partition{2, 2}) == 2);
}

TEST_CASE("text form") {
    CHECK(Partition::parse("3,1,1") == Partition{3, 1, 1});
    CHECK(Partition::parse("").empty());
    CHECK(Partition{3, 1, 1}.str() == "3,1,1");
    CHECK_THROWS_AS(Partition::parse("1,3"), ParseError);
    CHECK_THROWS_AS(Partition::parse("2,x"), ParseError);
    CHECK_THROWS_AS(Partition({2, 0}), ArgumentError);
    CHECK(Partition::from_unsorted({1, 3, 0, 2}) == Partition{3, 2, 1});
}

TEST_CASE("centralizer orders") {
    CHECK(z_of(Partition{2, 1}) == Rational(2));
    CHECK(z_of(Partition{1, 1, 1}) == Rational(6));
    CHECK(z_of(Partition{3, 3, 2}) == Rational(36));
    CHECK(factorial(8) / z_of(Partition{3, 3, 2}) == Rational(oracle::class_size_by_enumeration(Partition{3, 3, 2})));
}

TEST_CASE("hooks and dimensions") {
    CHECK(hook_product(Partition{2, 1}) == Rational(3));
    CHECK(hook_product(Partition{2, 2}) == Rational(12));
    for (int n = 1; n <= 7; ++n)
        for (const auto& l : partitions_of(n))
            CHECK(factorial(n) / hook_product(l) == oracle::dimension_by_determinant(l));
}

TEST_CASE("contents") {
    auto c = contents(Partition{2, 1});
    CHECK(c == std::vector<int>{0, 1, -1});
    CHECK(content_sum(Partition{2, 1}) == 0);
    CHECK(content_sum(Partition{3}) == 3);
    // rows (0,1,2,3), (-1,0), (-2)
    CHECK(content_sum(Partition{4, 2, 1}) == 3);
    CHECK(content_sum_closed_form(Partition{4, 2, 1}) == 3);
    CHECK(content_sum(Partition{3, 1}) == -content_sum(Partition{3, 1}.conjugate()));
}

TEST_CASE("partition Pochhammer") {
    CHECK(pochhammer_partition(Rational(5), Partition{3}) == Rational(5 * 6 * 7));
    CHECK(pochhammer_partition(Rational(3), Partition{2, 1}) == Rational(24));
    Rational a(5, 2);
    CHECK(pochhammer_partition(a, Partition{2, 2}, true) == pochhammer_cells(a, Partition{2, 2}));
    CHECK(pochhammer_cells(a, Partition{2, 2}) == a * (a + Rational(1)) * (a - Rational(1)) * a);
    CHECK(pochhammer_partition(Rational(2), Partition{1, 1, 1}).is_zero());
}
