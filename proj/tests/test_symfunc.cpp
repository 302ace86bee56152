#include <doctest.h>

#include "hurwitz/oracle.hpp"
#include "hurwitz/symfunc.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;

namespace {
SymFunc p(std::initializer_list<std::pair<Partition, Rational>> terms) {
    SymFunc f;
    for (const auto& [k, c] : terms) f.add(k, c);
    return f;
}
SymFunc s(std::initializer_list<std::pair<Partition, Rational>> terms) {
    SymFunc f = p(terms);
    f.basis = SymBasis::Schur;
    return f;
}
} // namespace

TEST_CASE("Schur to power sums") {
    CHECK(schur_to_powersum(Partition{1}) == p({{Partition{1}, Rational(1)}}));
    CHECK(schur_to_powersum(Partition{2}) == p({{Partition{1, 1}, Rational(1, 2)}, {Partition{2}, Rational(1, 2)}}));
    CHECK(schur_to_powersum(Partition{2, 1}) == p({{Partition{1, 1, 1}, Rational(1, 3)}, {Partition{3}, Rational(-1, 3)}}));
}

TEST_CASE("power sums to Schur") {
    CHECK(powersum_to_schur(Partition{1, 1}) == s({{Partition{2}, Rational(1)}, {Partition{1, 1}, Rational(1)}}));
    CHECK(powersum_to_schur(Partition{2}) == s({{Partition{2}, Rational(1)}, {Partition{1, 1}, Rational(-1)}}));
    CHECK(powersum_to_schur(Partition{3}) ==
          s({{Partition{3}, Rational(1)}, {Partition{2, 1}, Rational(-1)}, {Partition{1, 1, 1}, Rational(1)}}));
}

TEST_CASE("products") {
    CHECK(multiply(SymFunc::single(SymBasis::PowerSum, Partition{2}), SymFunc::single(SymBasis::PowerSum, Partition{1})) ==
          p({{Partition{2, 1}, Rational(1)}}));
    SymFunc s1 = SymFunc::single(SymBasis::Schur, Partition{1});
    CHECK(to_schur(multiply(s1, s1)) == s({{Partition{2}, Rational(1)}, {Partition{1, 1}, Rational(1)}}));
    SymFunc a = p({{Partition{1, 1}, Rational(1, 2)}, {Partition{2}, Rational(1, 2)}});
    SymFunc b = p({{Partition{1, 1}, Rational(1, 2)}, {Partition{2}, Rational(-1, 2)}});
    SymFunc prod = multiply(a, b);
    CHECK(prod == p({{Partition{1, 1, 1, 1}, Rational(1, 4)}, {Partition{2, 2}, Rational(-1, 4)}}));
    // s_2 s_11 = s_31 + s_211 by Pieri
    CHECK(to_schur(prod) == s({{Partition{3, 1}, Rational(1)}, {Partition{2, 1, 1}, Rational(1)}}));
}

TEST_CASE("degree cap") {
    SymFunc a = SymFunc::single(SymBasis::PowerSum, Partition{2}, Rational(1), 3);
    SymFunc prod = multiply(a, a);
    CHECK(prod.terms.empty());
    CHECK(prod.truncated);
}

TEST_CASE("evaluation") {
    std::vector<Rational> x{Rational(1), Rational(2)};
    CHECK(power_sum_at(2, x) == Rational(5));
    std::vector<Rational> ones(3, Rational(1));
    CHECK(schur_at(Partition{2, 1}, ones) == Rational(8));
    CHECK(oracle::ssyt_count(Partition{2, 1}, 3) == 8);
    std::vector<Rational> a{Rational(-2, 3)};
    CHECK(schur_at(Partition{4}, a) == Rational(16, 81));
    CHECK(schur_at(Partition{1, 1}, a).is_zero());
}

TEST_CASE("Cauchy-Littlewood") {
    std::vector<Rational> x{Rational(1), Rational(1, 2)}, y{Rational(1, 3), Rational(2)};
    auto c0 = cauchy_sides(0, x, y);
    CHECK(c0.powersum_side == Rational(1));
    CHECK(c0.kernel == Rational(1));
    auto c1 = cauchy_sides(1, x, y);
    CHECK(c1.schur_side == Rational(3, 2) * Rational(7, 3));
    auto c4 = cauchy_sides(4, x, y);
    CHECK(c4.powersum_side == c4.schur_side);
    CHECK(c4.schur_side == c4.kernel);
    CHECK_NOTHROW(checks::symfunc(5, 7));
}

TEST_CASE("differential operators") {
    SymFunc p2 = SymFunc::single(SymBasis::PowerSum, Partition{2});
    // cut-and-join on p_2: join term is zero, cut gives p_1^2
    CHECK(cut_and_join(p2) == p({{Partition{1, 1}, Rational(1)}}));
    CHECK(cut_and_join(SymFunc::single(SymBasis::PowerSum, Partition{1, 1})) == p({{Partition{2}, Rational(1)}}));
    CHECK(euler_operator(p2) == p({{Partition{2}, Rational(2)}}));
}
