#include <doctest.h>

#include "hurwitz/center.hpp"
#include "hurwitz/group_algebra.hpp"
#include "hurwitz/twist.hpp"
#include "hurwitz/verify.hpp"
#include "hurwitz/walks.hpp"

using namespace hurwitz;

namespace {
TruncSeries c(long v) { return TruncSeries(Rational(v)); }
}

TEST_CASE("basis round trips") { CHECK_NOTHROW(checks::center_round_trip(6)); }

TEST_CASE("idempotents multiply diagonally") {
    for (const auto& l : partitions_of(4)) {
        auto fl = CenterElement::unit(4, CenterBasis::Idempotents, l);
        CHECK(center_multiply(fl, fl) == fl);
        for (const auto& v : partitions_of(4))
            if (v != l) CHECK(center_multiply(fl, CenterElement::unit(4, CenterBasis::Idempotents, v)).coords.empty());
    }
    CHECK_NOTHROW(checks::idempotents(4));
}

TEST_CASE("transposition class squared in S_4") {
    auto c211 = CenterElement::unit(4, CenterBasis::ClassSums, Partition{2, 1, 1});
    auto sq = to_basis(center_multiply(c211, c211), CenterBasis::ClassSums);
    CHECK(sq.coordinate(Partition{3, 1}) == c(3));
    CHECK(sq.coordinate(Partition{2, 2}) == c(2));
    CHECK(sq.coordinate(Partition{1, 1, 1, 1}) == c(6));
    CHECK(sq.coordinate(Partition{2, 1, 1}).is_zero());
    CHECK(sq.coordinate(Partition{4}).is_zero());
}

TEST_CASE("characteristic map") {
    auto ch = characteristic_map(CenterElement::unit(2, CenterBasis::ClassSums, Partition{2}));
    CHECK(ch == SymFunc::single(SymBasis::PowerSum, Partition{2}, Rational(1, 2)));
    auto chf = characteristic_map(CenterElement::unit(2, CenterBasis::Idempotents, Partition{2}));
    CHECK(to_schur(chf) == SymFunc::single(SymBasis::Schur, Partition{2}, Rational(1, 2)));
}

TEST_CASE("twist eigenvalues") {
    TwistSpec h = TwistSpec::monotone(4), e = TwistSpec::strict(4);
    TruncSeries z = TruncSeries::variable("z", 4), w = TruncSeries::variable("w", 4);
    TruncSeries one(Rational(1));
    CHECK(twist_eigenvalue(h, Partition{2, 1}) == one + z * z + z * z * z * z);
    CHECK(twist_eigenvalue(e, Partition{2, 1}) == one - w * w);
    TwistSpec ok = TwistSpec::okounkov(6, 3);
    CHECK(twist_eigenvalue(ok, Partition{2, 1}) == TruncSeries::monomial(Rational(1), {{"q", 3}}, {{"q", 6}, {"beta", 3}}));
    CHECK(twist_eigenvalue(ok, Partition{3}).coefficient({{"q", 3}, {"beta", 2}}) == Rational(9, 2));
    TwistSpec numeric({HAtom{"", Rational(1)}}, {});
    CHECK_THROWS_AS(twist_eigenvalue(numeric, Partition{2}), SingularParameterError);
    CHECK_THROWS_AS(TwistSpec({HAtom{"z", {}}, EAtom{"z", {}}}, {{"z", 3}}), ArgumentError);
    CHECK((h * e).label() == "H*E");
}

TEST_CASE("twist on idempotents and class sums") {
    auto fl = CenterElement::unit(3, CenterBasis::Idempotents, Partition{2, 1});
    auto tw = apply_twist(TwistSpec::monotone(4), fl);
    CHECK(tw.coordinate(Partition{2, 1}) == twist_eigenvalue(TwistSpec::monotone(4), Partition{2, 1}));
    auto v = apply_twist(TwistSpec::plain(2), CenterElement::unit(3, CenterBasis::ClassSums, Partition{1, 1, 1}));
    CHECK(v.coordinate(Partition{3}).coefficient({{"beta", 2}}) * Rational(2) == Rational(3));
    CHECK_NOTHROW(checks::twist_application(4, 3));
    CHECK_NOTHROW(checks::cut_and_join(5));
}

TEST_CASE("connection coefficients equal walk counts") {
    auto g = connection_coeffs(TwistSpec::monotone(5), 4);
    auto walks = walk_count_matrix(4, WalkConstraint::weakly_monotone(3), false);
    for (std::size_t l = 0; l < g.dim(); ++l)
        for (std::size_t m = 0; m < g.dim(); ++m) CHECK(g(l, m).coefficient({{"z", 3}}) == Rational(walks[l][m]));
    CHECK_NOTHROW(checks::connection_structure(4, 4));
}
