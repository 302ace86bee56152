#pragma once

#include <map>
#include <string>
#include <vector>

#include "hurwitz/convolution.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/symfunc.hpp"

namespace hurwitz {

inline constexpr int kDefaultTauCap = 8;

/// Truncated hypergeometric tau function sum_lambda r_lambda S_lambda(x) S_lambda(y)
/// for |lambda| <= n_max, held in both bases.
struct TauSeries {
    Family family;
    int n_max = 0;
    /// schur[n] maps lambda |- n to r_lambda (absent when defined zero).
    std::vector<std::map<Partition, TruncSeries>> schur;
    /// Coefficient of p_lambda(x) p_mu(y): Z_mu^{-1} G_{lambda mu}.
    TensorSymFunc powersum;
};

/// Fills both representations and checks them degree by degree;
/// throws ConsistencyError if they differ, SizeLimitError above cap.
TauSeries build_tau(const Family& f, int n_max, int cap = kDefaultTauCap);

/// Schur side re-expanded in p(x) p(y) through the Frobenius formula.
TensorSymFunc schur_side_in_powersums(const TauSeries& t);

/// sum_lambda r_lambda S_lambda(a) S_lambda(b).
TruncSeries tau_eval(const TauSeries& t, const std::vector<Rational>& a, const std::vector<Rational>& b);

/// Formal logarithm of the p-side, graded by sheet number and cut at n_max.
/// Throws ArgumentError unless the constant term is exactly 1.
TensorSymFunc log_tau(const TauSeries& t);
/// exp of a tensor with zero constant term, cut at degree_cap.
TensorSymFunc exp_tensor(const TensorSymFunc& f);
/// log of a tensor with constant term 1, cut at degree_cap.
TensorSymFunc log_tensor(const TensorSymFunc& f);

struct AlphaQCase {
    int N = 1;
    Rational alpha;
    std::vector<Rational> a;
    std::vector<Rational> b;
    int q_cap = 5;
};

struct AlphaQComparison {
    AlphaQCase input;
    TruncSeries entrywise;   ///< det((1 - q a_i b_j)^{alpha-1}) / (Delta Delta)
    TruncSeries schur_side;  ///< tau_eval of the alpha_q family
    bool entrywise_matches = false;
    TruncSeries base_det;    ///< det(1 - q a_i b_j)
    int base_valuation = 0;  ///< q-valuation of det(1 - q a_i b_j)
    /// (det M)^{alpha-1} is a formal power series only when det M is a unit.
    bool power_reading_is_series = false;
    TruncSeries power_reading; ///< (det M)^{alpha-1} / (Delta Delta), when a series
    bool power_reading_matches = false;
};

AlphaQComparison alpha_q_compare(const AlphaQCase& c);
/// N = 1, 2 with alpha in {1/2, -3, 7/3}, fixed small rationals, q cap 5.
std::vector<AlphaQCase> default_alpha_q_cases();
/// Markdown report of the comparisons (deterministic).
std::string alpha_q_report_markdown(const std::vector<AlphaQCase>& cases);

} // namespace hurwitz
