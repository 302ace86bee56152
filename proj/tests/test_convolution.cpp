#include <doctest.h>

#include "hurwitz/convolution.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;

TEST_CASE("rho branches for a single z") {
    auto c = intertwine(TwistSpec::monotone(6));
    TruncSeries z = TruncSeries::variable("z", 6), one(Rational(1));
    CHECK(c.rho(2).core == ((one - z) * (one - z * Rational(2))).inverse());
    CHECK(c.rho(0).core == one);
    CHECK(c.rho(-2).core == one + z);
    CHECK(c.r(3).core == (one - z * Rational(3)).inverse());
    CHECK(c.rho(-1).core == one);
}

TEST_CASE("intertwining reproduces twist eigenvalues") {
    CHECK_NOTHROW(checks::intertwining(6, 5));
    TwistSpec two({HAtom{"z1", {}}, HAtom{"z2", {}}}, {{"z1", 4}, {"z2", 4}});
    auto c = intertwine(two);
    for (const auto& l : partitions_of(5)) CHECK(r_lambda_shifted(c, l, 0) == twist_eigenvalue(two, l));
    CHECK(r_lambda_shifted(c, Partition(), 0) == TruncSeries(Rational(1)));
}

TEST_CASE("rational parameters") {
    auto c = intertwine(TwistSpec({HAtom{"", Rational(1, 3)}}, {}));
    CHECK(r_lambda_shifted(c, Partition{2}, 0) == TruncSeries(Rational(3, 2)));
    try {
        r_lambda_shifted(c, Partition{4}, 0);
        FAIL("expected a singular parameter");
    } catch (const SingularParameterError& e) {
        CHECK(e.index() == 3);
    }
    auto e = intertwine(TwistSpec({EAtom{"", Rational(1, 2)}}, {}));
    CHECK(r_lambda_shifted(e, Partition{1, 1}, 0) == TruncSeries(Rational(1, 2)));
    CHECK_NOTHROW(r_lambda_shifted(e, Partition{1}, -2));
    // rho_{-3} needs 1 / (1 - 2w)
    CHECK_THROWS_AS(r_lambda_shifted(e, Partition{1}, -3), SingularParameterError);
}

TEST_CASE("okounkov family") {
    auto v = family_coeffs(Family::okounkov(4), Partition{2, 1});
    CHECK(v.value == TruncSeries::monomial(Rational(1), {{"q", 3}}, {{"q", 16}, {"beta", 4}}));
    for (long N = -4; N <= 4; ++N)
        for (int n = 0; n <= 6; ++n)
            for (const auto& l : partitions_of(n)) {
                auto a = okounkov_exponents(l, N), b = okounkov_exponents_by_product(l, N);
                CHECK(a.q == b.q);
                CHECK(a.beta == b.beta);
            }
    // the single-row exponent at N = 2: 1 + 2*3 + 3
    CHECK(okounkov_exponents(Partition{3}, 2).beta == 10);
}

TEST_CASE("alpha_q eigenvalue route") {
    Rational alpha(1, 2);
    long N = 3;
    Rational z = Rational(-1, 3);
    TwistSpec corrected({ScaleAtom{"q", Rational(1) - alpha / Rational(N)}, HAtom{"", z}, EAtom{"", (Rational(N) - alpha).inverse()}},
                        {{"q", 16}});
    TwistSpec literal({ScaleAtom{"q", alpha / Rational(N) - Rational(1)}, HAtom{"", z}, EAtom{"", -(Rational(N) - alpha).inverse()}},
                      {{"q", 16}});
    for (int n = 0; n <= 5; ++n)
        for (const auto& l : partitions_of(n)) {
            if (l.length() > N) continue;
            auto q = TruncSeries::monomial(Rational(1), {{"q", n}}, {{"q", 16}});
            Rational den = pochhammer_partition(Rational(N), l);
            CHECK(twist_eigenvalue(corrected, l) == q * (pochhammer_partition(Rational(N) - alpha, l) / den));
            // the sign-flipped parameters land on (alpha - N)_lambda instead
            CHECK(twist_eigenvalue(literal, l) == q * (pochhammer_partition(alpha - Rational(N), l) / den));
        }
    CHECK_THROWS_AS(Family::alpha_q(Rational(2), 3), ArgumentError);
    CHECK(family_coeffs(Family::alpha_q(alpha, 2), Partition{1, 1, 1}).defined_zero);
    CHECK_NOTHROW(checks::alpha_q_family(4, 3));
}

TEST_CASE("hciz and multimonotone families") {
    auto v = family_coeffs(Family::hciz_exp(1, 6), Partition{3});
    CHECK(v.value == TruncSeries::monomial(Rational(-1, 6), {{"z", 3}}, {{"z", 6}}));
    CHECK(family_coeffs(Family::hciz_exp(3, 6), Partition()).value == TruncSeries(Rational(1, 2)));
    auto m = family_coeffs(Family::multimonotone(2, 4), Partition{2, 1});
    TruncSeries w1 = TruncSeries::variable("w1", 4), w2 = TruncSeries::variable("w2", 4), one(Rational(1));
    CHECK(m.value == TruncSeries::monomial(Rational(1), {{"q", 3}}, {{"q", 16}}) * (one - w1 * w1) * (one - w2 * w2));
    CHECK_NOTHROW(checks::family_laws(5, 3));
}

TEST_CASE("multimonotone reparametrization signs") {
    Rational s(3, 7);
    std::vector<Rational> u{Rational(2), Rational(-1, 3), Rational(5, 4)};
    Family f = Family::multimonotone(3, 6);
    auto good = multimonotone_reparam(s, u, false);
    auto signed_m = multimonotone_reparam(s, u, true);
    CHECK(signed_m.q == -good.q);
    for (int n = 0; n <= 4; ++n)
        for (const auto& l : partitions_of(n)) {
            std::map<std::string, Rational> at{{"q", good.q}}, at_p{{"q", signed_m.q}};
            for (int a = 0; a < 3; ++a) {
                at["w" + std::to_string(a + 1)] = good.w[a];
                at_p["w" + std::to_string(a + 1)] = signed_m.w[a];
            }
            TruncSeries v = family_coeffs(f, l).value;
            Rational z = multimonotone_z_coefficient(s, u, l);
            CHECK(substitute(v, at) == z);
            CHECK(substitute(v, at_p) == (n % 2 ? -z : z));
        }
}
