#include "hurwitz/rational.hpp"

#include <cctype>

#include "hurwitz/error.hpp"

namespace hurwitz {

Rational::Rational(long num, long den) {
    if (den == 0) throw ArgumentError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational literal");
    auto valid_int = [](std::string_view v) {
        std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
        if (i >= v.size()) return false;
        for (; i < v.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.find_first_of("+-") != std::string::npos)
        throw ParseError("malformed rational literal '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ArgumentError("division by zero rational");
    value_ /= o.value_;
    return *this;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

std::int64_t Rational::to_int64() const {
    if (!is_integer() || !value_.get_num().fits_slong_p())
        throw ArgumentError("value " + str() + " is not a 64-bit integer");
    return value_.get_num().get_si();
}

Rational factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational rising(const Rational& a, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= a + Rational(i);
    return r;
}

} // namespace hurwitz
