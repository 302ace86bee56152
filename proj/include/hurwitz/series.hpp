#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// A named formal parameter and the highest exponent kept for it.
struct SeriesParam {
    std::string name;
    int cap = 0;
    friend bool operator==(const SeriesParam&, const SeriesParam&) = default;
};

/// Multivariate truncated power series over the rationals.
///
/// Every parameter carries its own degree cap; coefficients of exponents
/// within the caps are exact, anything above is dropped. Combining two series
/// merges parameter lists (sorted by name) and keeps the smaller cap for a
/// shared name. A series without parameters is an exact constant.
class TruncSeries {
public:
    using Exponents = std::vector<int>;
    using Monomial = std::vector<std::pair<std::string, int>>;

    TruncSeries() = default;
    TruncSeries(const Rational& c); // NOLINT: constants convert implicitly
    TruncSeries(int c) : TruncSeries(Rational(c)) {}

    static TruncSeries variable(std::string name, int cap);
    static TruncSeries monomial(const Rational& coeff, const Monomial& exps, std::vector<SeriesParam> params);

    const std::vector<SeriesParam>& params() const { return params_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool has_param(std::string_view name) const;
    int cap(std::string_view name) const;

    /// Adds a parameter (exponent 0 everywhere) or lowers the cap of an existing one.
    TruncSeries with_param(const std::string& name, int cap) const;
    /// Drops terms above the new cap for one parameter.
    TruncSeries truncated(std::string_view name, int cap) const;

    Rational coefficient(const Monomial& exps) const;
    Rational constant_term() const;
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Lowest exponent of name among the terms; -1 for the zero series.
    int valuation(std::string_view name) const;
    /// Lowest total degree among the terms; -1 for the zero series.
    int total_valuation() const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const TruncSeries& o);
    TruncSeries& operator*=(const Rational& c);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
    friend TruncSeries operator*(const Rational& c, TruncSeries a) { return a *= c; }
    friend TruncSeries operator-(const TruncSeries& a) { return a * Rational(-1); }

    /// Compares coefficients only; caps and unused parameters are ignored.
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);

    TruncSeries pow(int e) const;
    /// Multiplicative inverse; the constant term must be nonzero.
    TruncSeries inverse() const;
    /// a / b where the result is known to be a power series. Supported when b
    /// has a nonzero constant term, or b involves a single parameter x and
    /// has the form x^v * unit; in that case a must be divisible by x^v and
    /// the cap of x drops by v (the precision actually known).
    TruncSeries divide_exact(const TruncSeries& b) const;
    /// Divides by name^v; throws ConsistencyError if a lower term is nonzero.
    TruncSeries shift_down(std::string_view name, int v) const;
    /// exp of a series with zero constant term.
    TruncSeries exp() const;
    /// log of a series with constant term 1.
    TruncSeries log() const;

    /// Keys like "z^3", "beta^1*q^2"; the constant term is "1". Ordered by exponent vector.
    std::vector<std::pair<std::string, std::string>> to_strings() const;
    std::string str() const;

private:
    void insert(const Exponents& e, const Rational& c);
    static std::vector<SeriesParam> merge_params(const std::vector<SeriesParam>& a,
                                                 const std::vector<SeriesParam>& b);
    TruncSeries reparam(const std::vector<SeriesParam>& target) const;
    bool within_caps(const Exponents& e) const;
    int max_total_degree() const;

    std::vector<SeriesParam> params_;
    std::map<Exponents, Rational> terms_;
};

/// Substitutes rational values for every parameter. Only meaningful when the
/// series is a polynomial within its caps; throws ArgumentError on a missing value.
Rational substitute(const TruncSeries& f, const std::map<std::string, Rational>& values);

/// Geometric series 1/(1 - c x) truncated at the cap of x.
TruncSeries geometric(const Rational& c, const std::string& name, int cap);

} // namespace hurwitz
