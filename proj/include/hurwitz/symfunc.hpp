#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

enum class SymBasis { PowerSum, Schur };

inline constexpr int kDefaultDegreeCap = 12;

/// Element of the ring of symmetric functions, truncated by degree.
/// PowerSum is the working basis; Schur is a view converted through the
/// character tables.
struct SymFunc {
    SymBasis basis = SymBasis::PowerSum;
    std::map<Partition, Rational> terms;
    int degree_cap = kDefaultDegreeCap;
    /// Set when some product term was dropped by the degree cap.
    bool truncated = false;

    static SymFunc single(SymBasis basis, const Partition& p, const Rational& c = Rational(1),
                          int degree_cap = kDefaultDegreeCap);

    void add(const Partition& p, const Rational& c);
    Rational coefficient(const Partition& p) const;
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator*=(const Rational& c);
    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.basis == b.basis && a.terms == b.terms;
    }
};

/// S_lambda = sum_mu chi_lambda(mu) p_mu / Z_mu.
SymFunc schur_to_powersum(const Partition& lambda);
/// p_mu = sum_lambda chi_lambda(mu) S_lambda.
SymFunc powersum_to_schur(const Partition& mu);
SymFunc to_powersum(const SymFunc& f);
SymFunc to_schur(const SymFunc& f);

/// Product in the power-sum basis (Schur inputs converted first). Terms above
/// the smaller degree cap are dropped and the truncated flag set.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// Power sum p_k(x) = sum_a x_a^k at a finite point.
Rational power_sum_at(int k, std::span<const Rational> x);
/// p_mu(x).
Rational power_sum_at(const Partition& mu, std::span<const Rational> x);
/// Substitutes p_k -> sum_a x_a^k after converting to the power-sum basis.
Rational evaluate(const SymFunc& f, std::span<const Rational> x);
/// S_lambda(x) through the power-sum expansion.
Rational schur_at(const Partition& lambda, std::span<const Rational> x);

struct CauchySides {
    Rational powersum_side; ///< sum_{mu |- n} p_mu(x) p_mu(y) / Z_mu
    Rational schur_side;    ///< sum_{lambda |- n} S_lambda(x) S_lambda(y)
    Rational kernel;        ///< degree-n part of prod_{a,b} 1/(1 - x_a y_b)
};
CauchySides cauchy_sides(int n, std::span<const Rational> x, std::span<const Rational> y);

/// Euler operator sum_k k p_k d/dp_k (multiplies degree-n terms by n).
SymFunc euler_operator(const SymFunc& f);
/// Cut-and-join: (1/2) sum_{i,j} ((i+j) p_i p_j d/dp_{i+j} + i j p_{i+j} d^2/dp_i dp_j).
SymFunc cut_and_join(const SymFunc& f);

/// Element of Lambda (x) Lambda in the p(x) p(y) basis with series coefficients.
struct TensorSymFunc {
    std::map<std::pair<Partition, Partition>, TruncSeries> terms;
    /// Terms of bidegree (a, b) with a > cap or b > cap are dropped on multiplication.
    int degree_cap = kDefaultDegreeCap;

    void add(const Partition& x, const Partition& y, const TruncSeries& c);
    TruncSeries coefficient(const Partition& x, const Partition& y) const;
    TensorSymFunc& operator+=(const TensorSymFunc& o);
    TensorSymFunc& operator-=(const TensorSymFunc& o);
    TensorSymFunc& operator*=(const Rational& c);
    friend bool operator==(const TensorSymFunc& a, const TensorSymFunc& b);
};

TensorSymFunc multiply(const TensorSymFunc& f, const TensorSymFunc& g);
/// Substitutes p(x) -> x-point and p(y) -> y-point.
TruncSeries evaluate(const TensorSymFunc& f, std::span<const Rational> x, std::span<const Rational> y);
/// Outer product f(x) g(y) of two SymFuncs (both converted to power sums).
TensorSymFunc tensor(const SymFunc& f, const SymFunc& g);

} // namespace hurwitz
