#include <doctest.h>

#include "hurwitz/characters.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;

TEST_CASE("small tables") {
    auto t1 = character_table(1);
    CHECK(t1->dim() == 1);
    CHECK((*t1)(0, 0) == 1);
    auto t2 = character_table(2);
    CHECK((*t2)(0, 0) == 1);
    CHECK((*t2)(0, 1) == 1);
    CHECK((*t2)(1, 0) == -1);
    CHECK((*t2)(1, 1) == 1);
}

TEST_CASE("trivial and sign characters") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& m : partitions_of(n)) {
            std::vector<int> ones(n, 1);
            CHECK(character(Partition{n}, m) == 1);
            CHECK(character(Partition(ones), m) == ((n - m.length()) % 2 ? -1 : 1));
        }
}

TEST_CASE("orthogonality through n = 8") { CHECK_NOTHROW(checks::characters(8)); }

TEST_CASE("Murnaghan-Nakayama against the Frobenius formula") {
    CHECK(character(Partition{2, 1}, Partition{3}) == oracle::character_by_frobenius(Partition{2, 1}, Partition{3}));
    CHECK(character(Partition{3, 2}, Partition{2, 2, 1}) == oracle::character_by_frobenius(Partition{3, 2}, Partition{2, 2, 1}));
    CHECK_NOTHROW(checks::characters_vs_oracle(5, 3));
}

TEST_CASE("cache and cap") {
    CHECK(character_table(5).get() == character_table(5).get());
    CHECK_THROWS_AS(character_table(11), SizeLimitError);
    CHECK(character_table(4)->at(Partition{2, 2}, Partition{2, 2}) == 2);
}
