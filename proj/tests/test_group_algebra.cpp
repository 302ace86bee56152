#include <doctest.h>

#include "hurwitz/group_algebra.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;

TEST_CASE("permutation composition applies the right factor first") {
    Permutation a = Permutation::transposition(3, 1, 2), b = Permutation::transposition(3, 2, 3);
    Permutation ab = a * b;
    CHECK(ab.images() == std::vector<int>{2, 3, 1});
    CHECK(ab.cycle_type() == Partition{3});
    CHECK((ab * ab.inverse()).is_identity());
    CHECK(Permutation::canonical_representative(Partition{2, 1}).cycle_type() == Partition{2, 1});
    CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("delta products") {
    Permutation g = Permutation::parse("3,1,4,2");
    auto prod = multiply(GroupAlgebraElement::delta(g), GroupAlgebraElement::delta(g.inverse()));
    CHECK(prod == GroupAlgebraElement::identity(4));
}

TEST_CASE("class sums") {
    CHECK(class_sum(3, Partition{1, 1, 1}) == GroupAlgebraElement::identity(3));
    auto c21 = class_sum(3, Partition{2, 1});
    CHECK(c21.terms().size() == 3);
    CHECK(c21.coefficient(Permutation::transposition(3, 1, 3)) == Rational(1));
    CHECK(class_sum(4, Partition{3, 1}).terms().size() == 8);
    auto sq = multiply(c21, c21);
    CHECK(sq == GroupAlgebraElement::identity(3, Rational(3)) + class_sum(3, Partition{3}) * Rational(3));
}

TEST_CASE("Jucys-Murphy elements") {
    CHECK(jm_element(3, 3) == GroupAlgebraElement::delta(Permutation::transposition(3, 1, 3)) +
                                  GroupAlgebraElement::delta(Permutation::transposition(3, 2, 3)));
    CHECK(jm_element(3, 1).is_zero());
    CHECK(jm_power_sum(5, 1) == class_sum(5, Partition{2, 1, 1, 1}));
    CHECK(jm_power_sum(4, 2) - GroupAlgebraElement::identity(4, Rational(6)) == class_sum(4, Partition{3, 1}));
    CHECK_NOTHROW(checks::class_identities(4, 5));
}

TEST_CASE("projection to class coordinates") {
    auto id = project_to_classes(GroupAlgebraElement::identity(3));
    CHECK(id.coordinate(Partition{1, 1, 1}) == TruncSeries(Rational(1)));
    CHECK(id.coords.size() == 1);
    auto p1 = project_to_classes(jm_power_sum(4, 1));
    CHECK(p1.coordinate(Partition{2, 1, 1}) == TruncSeries(Rational(1)));
    CHECK(p1.coords.size() == 1);
    CHECK_THROWS_AS(project_to_classes(jm_element(3, 3)), CentralityError);
    CHECK(embed_center(p1) == jm_power_sum(4, 1));
}

TEST_CASE("degree limit") { CHECK_THROWS_AS(Permutation(9), SizeLimitError); }
