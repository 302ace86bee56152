#include <doctest.h>

#include "hurwitz/oracle.hpp"
#include "hurwitz/verify.hpp"
#include "hurwitz/walks.hpp"

using namespace hurwitz;

namespace {
Rational walks(int n, const Partition& from, const Partition& to, WalkConstraint c, bool transitive = false) {
    return count_walks({n, from, to, c, transitive});
}
} // namespace

TEST_CASE("n = 3 examples") {
    Partition id{1, 1, 1}, c3{3};
    CHECK(walks(3, id, c3, WalkConstraint::plain(2)) == Rational(3));
    CHECK(walks(3, id, c3, WalkConstraint::weakly_monotone(2)) == Rational(2));
    CHECK(walks(3, id, c3, WalkConstraint::strictly_monotone(2)) == Rational(1));
}

TEST_CASE("zero steps") {
    for (const auto& l : partitions_of(4))
        for (const auto& m : partitions_of(4)) CHECK(walks(4, l, m, WalkConstraint::plain(0)) == Rational(l == m ? 1 : 0));
}

TEST_CASE("segment constraints") {
    Partition id{1, 1, 1, 1}, c4{4};
    CHECK(walks(4, id, c4, WalkConstraint::strictly_monotone(4)).is_zero());
    CHECK(walks(4, id, c4, WalkConstraint::mixed(2, 3)) ==
          Rational(oracle::walks_brute_force(4, id, c4, {{1, 2}, {0, 1}}, false)));
    CHECK(walks(4, id, c4, WalkConstraint::weak_then_strict(1, 2)) ==
          Rational(oracle::walks_brute_force(4, id, c4, {{1, 1}, {2, 2}}, false)));
    CHECK(walks(4, id, c4, WalkConstraint::multi_monotone({2, 1})) ==
          Rational(oracle::walks_brute_force(4, id, c4, {{2, 2}, {2, 1}}, false)));
    CHECK_THROWS_AS(WalkConstraint::mixed(3, 2), ArgumentError);
}

TEST_CASE("transitivity") {
    Partition id{1, 1, 1, 1};
    // one transposition never connects four points
    for (const auto& m : partitions_of(4)) CHECK(walks(4, id, m, WalkConstraint::plain(1), true).is_zero());
    CHECK(walks(4, id, Partition{4}, WalkConstraint::plain(3), true) == walks(4, id, Partition{4}, WalkConstraint::plain(3)));
    CHECK(walks(4, Partition{2, 2}, Partition{2, 2}, WalkConstraint::plain(2), true) <
          walks(4, Partition{2, 2}, Partition{2, 2}, WalkConstraint::plain(2)));
}

TEST_CASE("engine against oracles") {
    CHECK_NOTHROW(checks::walk_engine(4));
    CHECK_NOTHROW(checks::walk_equality(1, 4, 3, 4, 3));
}

TEST_CASE("size cap") {
    CHECK(walk_size_cap() >= 6);
    CHECK_THROWS_AS(walks(9, Partition{9}, Partition{9}, WalkConstraint::plain(1)), Error);
    CHECK_THROWS_AS(walks(4, Partition{3}, Partition{4}, WalkConstraint::plain(1)), ArgumentError);
}
