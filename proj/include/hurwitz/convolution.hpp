#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/twist.hpp"

namespace hurwitz {

/// (scale_factor * scale_param)^exponent * core. Keeps e^{theta_0}-type
/// factors as an exact exponent so negative powers for j < 0 are harmless.
struct ScaledSeries {
    long exponent = 0;
    TruncSeries core{Rational(1)};
};

/// Diagonal convolution-symmetry coefficients rho_j, r_j = rho_j / rho_{j-1}
/// and T_j = ln rho_j, each split as a power of the scale times a core series.
struct ConvolutionCoeffs {
    std::string scale_param; ///< empty: the scale is the number scale_factor
    Rational scale_factor{1};
    int scale_cap = kDefaultScaleCap;
    std::function<ScaledSeries(long)> rho;
    std::function<ScaledSeries(long)> r;
    /// Core part of T_j (T_j = exponent * ln(scale) + core); nullopt where no
    /// formal logarithm exists (rational parameters).
    std::function<std::optional<ScaledSeries>(long)> log_rho;

    /// Multiplies out the scale power; throws ArgumentError on a negative
    /// exponent of a formal scale.
    TruncSeries expand(const ScaledSeries& v) const;
};

/// Image of a twist under the intertwining homomorphism. H(z) contributes
/// r_j = 1/(1 - j z), E(w) contributes 1 + j w, Exp(q, beta) contributes
/// q e^{j beta}, Scale(c q) contributes c q. Rational z or w are checked
/// lazily: the first j with 1 - j z = 0 (or 1 + j w = 0) raises
/// SingularParameterError carrying j.
ConvolutionCoeffs intertwine(const TwistSpec& t);

/// r_lambda(N) = r_0(N) prod_{(i,j) in lambda} r_{N+j-i}, with the three-case r_0(N).
TruncSeries r_lambda_shifted(const ConvolutionCoeffs& c, const Partition& lambda, long N);
/// Same product with the scale power kept separate.
ScaledSeries r_lambda_shifted_scaled(const ConvolutionCoeffs& c, const Partition& lambda, long N);

enum class FamilyKind { Vacuum, Okounkov, HcizExp, AlphaQ, Multimonotone, Twist };

/// A hypergeometric coefficient family. Parameter names: q and beta
/// (okounkov), z (hciz_exp), q (alpha_q), q and w1..wm (multimonotone).
struct Family {
    FamilyKind kind = FamilyKind::Vacuum;
    long N = 0;
    Rational alpha{0};
    int q_cap = kDefaultScaleCap;
    int beta_cap = 6;
    int z_cap = 6;
    int w_cap = 6;
    int m = 1;
    std::optional<TwistSpec> twist;

    static Family vacuum();
    static Family okounkov(int beta_cap, long N = 0, int q_cap = kDefaultScaleCap);
    static Family hciz_exp(long N, int z_cap);
    /// Throws ArgumentError when alpha is a positive integer.
    static Family alpha_q(const Rational& alpha, long N, int q_cap = kDefaultScaleCap);
    static Family multimonotone(int m, int w_cap, int q_cap = kDefaultScaleCap);
    /// r_lambda = twist eigenvalue on F_lambda (the N = 0 picture).
    static Family from_twist(const TwistSpec& t);

    std::string name() const;
    /// Formal parameter names with caps, as used by the coefficients.
    std::vector<SeriesParam> params() const;
};

struct FamilyValue {
    TruncSeries value;
    /// r_lambda is set to zero because (N)_lambda = 0 (l(lambda) > N).
    bool defined_zero = false;
};

/// Closed-form r_lambda for the family:
/// okounkov q^{N(N-1)/2+|l|} e^{beta(N(N^2-1)/6 + N|l| + cont)};
/// hciz_exp (-zN)^{|l|} / (prod_{k<N} k! (N)_l);
/// alpha_q r_0 q^{|l|} (N-alpha)_l / (N)_l;
/// multimonotone q^{|l|} prod_a prod_cells (1 + w_a c).
FamilyValue family_coeffs(const Family& f, const Partition& lambda);

/// Integer exponents (of q, of beta) in the okounkov r_lambda(N).
struct OkounkovExponents {
    long q = 0;
    long beta = 0;
};
OkounkovExponents okounkov_exponents(const Partition& lambda, long N);
/// Exponents obtained by multiplying r_j = q e^{j beta} over the shifted
/// contents together with the r_0(N) product; the independent route.
OkounkovExponents okounkov_exponents_by_product(const Partition& lambda, long N);

/// Convolution coefficients of a family (okounkov, hciz_exp, alpha_q,
/// multimonotone) from the branch definitions of rho_j.
ConvolutionCoeffs family_convolution(const Family& f);

/// s^{|lambda|} prod_a prod_{(i,j)} (u_a + i - j).
Rational multimonotone_z_coefficient(const Rational& s, const std::vector<Rational>& u, const Partition& lambda);
struct MultimonotoneParams {
    Rational q;
    std::vector<Rational> w;
};
/// q = sign * s * prod u_a, w_a = -1/u_a. sign is (-1)^m when signed_by_m is
/// set and +1 otherwise.
MultimonotoneParams multimonotone_reparam(const Rational& s, const std::vector<Rational>& u, bool signed_by_m);

} // namespace hurwitz
