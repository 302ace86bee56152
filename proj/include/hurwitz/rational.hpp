#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hurwitz {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Serializes as "num/den" (or "num" when integral).
class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(static_cast<long>(v)) {}
    Rational(long v) : value_(v) {}
    Rational(long long v) : value_(static_cast<long>(v)) {}
    Rational(unsigned long v) : value_(v) {}
    Rational(long num, long den);
    explicit Rational(const mpz_class& z) : value_(z) {}
    explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Integer power; negative exponents invert (throws on 0^-k).
    Rational pow(long exponent) const;
    Rational inverse() const;
    std::string str() const { return value_.get_str(); }
    /// Throws when the value is not an integer that fits in 64 bits.
    std::int64_t to_int64() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

Rational factorial(int n);
Rational binomial(int n, int k);
/// Rising factorial a(a+1)...(a+k-1).
Rational rising(const Rational& a, int k);

} // namespace hurwitz
