#pragma once

#include <map>
#include <string>

#include "hurwitz/center.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Sparse element of C[S_n] with exact coefficients.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int n = 0) : n_(n) {}
    static GroupAlgebraElement delta(const Permutation& g, const Rational& c = Rational(1));
    static GroupAlgebraElement identity(int n, const Rational& c = Rational(1));

    int degree() const { return n_; }
    const std::map<Permutation, Rational>& terms() const { return terms_; }
    Rational coefficient(const Permutation& g) const;
    bool is_zero() const { return terms_.empty(); }

    void add(const Permutation& g, const Rational& c);
    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator*=(const Rational& c);
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& c) { return a *= c; }
    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

private:
    int n_;
    std::map<Permutation, Rational> terms_;
};

/// Convolution product; throws ArgumentError on degree mismatch.
GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement power(const GroupAlgebraElement& a, int k);

/// Sum of all permutations of cycle type mu.
GroupAlgebraElement class_sum(int n, const Partition& mu);
/// J_b = sum_{a<b} (a b), 1 <= b <= n.
GroupAlgebraElement jm_element(int n, int b);
/// P_i(J) = sum_b J_b^i, with P_0(J) = n Id.
GroupAlgebraElement jm_power_sum(int n, int i);

/// Raised by project_to_classes for a non-central element.
class CentralityError : public Error {
public:
    CentralityError(const std::string& what, Permutation first, Permutation second)
        : Error(ErrorCode::centrality, what), first_(first), second_(second) {}
    /// Conjugate permutations carrying different coefficients.
    const Permutation& first() const { return first_; }
    const Permutation& second() const { return second_; }

private:
    Permutation first_, second_;
};

/// Coordinates c with a = sum_mu c_mu C_mu; throws CentralityError otherwise.
CenterElement project_to_classes(const GroupAlgebraElement& a);
/// Expands a class-sum coordinate vector (constant coordinates) into C[S_n].
GroupAlgebraElement embed_center(const CenterElement& v);

} // namespace hurwitz
