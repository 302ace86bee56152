#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hurwitz/determinant.hpp"
#include "hurwitz/group_algebra.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

// Independent reference computations. Each one avoids the production code path
// it is meant to check.
namespace hurwitz::oracle {

/// chi_lambda(mu) as the coefficient of x^{lambda+delta} in p_mu(x) a_delta(x)
/// with l(lambda) variables.
std::int64_t character_by_frobenius(const Partition& lambda, const Partition& mu);

/// S_lambda(x) = det(x_i^{lambda_j + m - j}) / det(x_i^{m - j}); x distinct.
Rational schur_by_alternant(const Partition& lambda, const std::vector<Rational>& x);

/// Number of semistandard tableaux of shape lambda with entries <= m.
std::uint64_t ssyt_count(const Partition& lambda, int m);

/// n! det(1 / (lambda_i - i + j)!).
Rational dimension_by_determinant(const Partition& lambda);

/// p(n) from Euler's pentagonal recurrence.
std::uint64_t partition_count_pentagonal(int n);

/// Class size n!/Z_mu by enumerating S_n.
std::uint64_t class_size_by_enumeration(const Partition& mu);

/// c[kappa] with C_mu C_nu = sum_kappa c[kappa] C_kappa, by counting
/// factorizations h = g g' of one representative h per class.
std::map<Partition, Rational> structure_constants(const Partition& mu, const Partition& nu);

/// Plain walk counts D[lambda][mu] from powers of the class-level transposition
/// matrix (one representative per class).
std::vector<std::vector<Rational>> plain_walks_class_dp(int n, int k);

/// Walk count by enumerating every tau sequence forward from every g in C_lambda.
std::uint64_t walks_brute_force(int n, const Partition& from, const Partition& to,
                                const std::vector<std::pair<int, int>>& segments, bool transitive);

/// h_k(J) and e_k(J) in C[S_n] from the power sums P_i(J) by Newton's identities.
GroupAlgebraElement jm_complete(int n, int k);
GroupAlgebraElement jm_elementary(int n, int k);

/// Permutation-expansion determinant.
TruncSeries leibniz_determinant(const SeriesMatrix& m);

/// Small nonzero rationals num/den, |num| <= 9, 1 <= den <= 6, drawn from
/// mt19937_64 raw output; pairwise distinct when distinct is set.
std::vector<Rational> seeded_rationals(std::uint64_t seed, std::size_t count, bool distinct);

} // namespace hurwitz::oracle
