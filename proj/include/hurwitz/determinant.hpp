#pragma once

#include <cstddef>
#include <vector>

#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

/// Square matrix of truncated series, row-major.
class SeriesMatrix {
public:
    explicit SeriesMatrix(std::size_t n) : n_(n), a_(n * n) {}
    std::size_t size() const { return n_; }
    TruncSeries& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const TruncSeries& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<TruncSeries> a_;
};

/// Fraction-free (Bareiss) elimination. Pivots are chosen with the lowest
/// total valuation; the exact divisions by earlier pivots may consume
/// precision, which shows up as lowered caps on the result.
TruncSeries bareiss_determinant(SeriesMatrix m);

/// prod_{i<j} (x_i - x_j).
Rational vandermonde(const std::vector<Rational>& x);

/// det(exp(-z N a_i b_j)) / ((-zN)^{N(N-1)/2} Delta(a) Delta(b)) through z^z_cap,
/// which equals sum_{l(lambda) <= N} r^exp_lambda(N) S_lambda(a) S_lambda(b).
/// Throws ArgumentError on repeated a or b values.
TruncSeries hciz_determinant(int N, const std::vector<Rational>& a, const std::vector<Rational>& b, int z_cap);

/// Entrywise reading det((1 - q a_i b_j)^{alpha-1}) / (Delta(a) Delta(b))
/// through q^q_cap, each entry expanded as a binomial series.
TruncSeries alpha_q_determinant(int N, const Rational& alpha, const std::vector<Rational>& a,
                                const std::vector<Rational>& b, int q_cap);

/// det(1 - q a_i b_j) as a polynomial in q (exact, degree <= N).
TruncSeries alpha_q_base_determinant(const std::vector<Rational>& a, const std::vector<Rational>& b);

} // namespace hurwitz
