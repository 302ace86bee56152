#include "hurwitz/determinant.hpp"

#include <functional>
#include <limits>
#include <set>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

void require_distinct(const std::vector<Rational>& x, const char* what) {
    std::set<Rational> seen(x.begin(), x.end());
    if (seen.size() != x.size())
        throw ArgumentError(std::string("repeated ") + what + " values: the Vandermonde determinant vanishes");
}

// Builds det(f(a_i b_j)) / (Delta(a) Delta(b)) where the entry series keeps
// `precision` orders, raising precision until the result is known to `need`.
TruncSeries scaled_determinant(int N, const std::vector<Rational>& a, const std::vector<Rational>& b,
                               const std::string& param, int need,
                               const std::function<Rational(int)>& coeff) {
    if (static_cast<int>(a.size()) != N || static_cast<int>(b.size()) != N)
        throw ArgumentError("determinant: expected " + std::to_string(N) + " values per side");
    require_distinct(a, "a");
    require_distinct(b, "b");
    Rational delta = vandermonde(a) * vandermonde(b);
    int precision = need;
    for (int attempt = 0; attempt < 8; ++attempt) {
        SeriesMatrix m(N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                Rational ab = a[i] * b[j];
                TruncSeries e = TruncSeries(Rational(0)).with_param(param, precision);
                Rational power(1);
                for (int k = 0; k <= precision; ++k) {
                    Rational c = coeff(k) * power;
                    if (!c.is_zero()) e += TruncSeries::monomial(c, {{param, k}}, {{param, precision}});
                    power *= ab;
                }
                m(i, j) = e;
            }
        TruncSeries det = bareiss_determinant(std::move(m));
        int known = det.has_param(param) ? det.cap(param) : std::numeric_limits<int>::max();
        if (known >= need) return det.truncated(param, need) * delta.inverse();
        precision += need - known;
    }
    throw Error(ErrorCode::internal, "determinant: precision did not stabilise");
}

} // namespace

TruncSeries bareiss_determinant(SeriesMatrix m) {
    std::size_t n = m.size();
    if (n == 0) return TruncSeries(Rational(1));
    int sign = 1;
    TruncSeries prev(Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t best = n;
        int best_val = std::numeric_limits<int>::max();
        for (std::size_t r = k; r < n; ++r) {
            int v = m(r, k).total_valuation();
            if (v >= 0 && v < best_val) {
                best_val = v;
                best = r;
            }
        }
        if (best == n) {
            TruncSeries zero = TruncSeries(Rational(0));
            for (const auto& p : m(k, k).params()) zero = zero.with_param(p.name, p.cap);
            return zero;
        }
        if (best != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(best, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                TruncSeries num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = k == 0 ? num : num.divide_exact(prev);
            }
        }
        prev = m(k, k);
    }
    TruncSeries det = m(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

Rational vandermonde(const std::vector<Rational>& x) {
    Rational v(1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) v *= x[i] - x[j];
    return v;
}

TruncSeries hciz_determinant(int N, const std::vector<Rational>& a, const std::vector<Rational>& b, int z_cap) {
    if (N < 1) throw ArgumentError("hciz_determinant: N must be positive");
    if (z_cap < 0) throw ArgumentError("hciz_determinant: negative z cap");
    int shift = N * (N - 1) / 2;
    Rational scale(-N);
    auto coeff = [&](int k) { return scale.pow(k) / factorial(k); };
    TruncSeries det = scaled_determinant(N, a, b, "z", z_cap + shift, coeff);
    // Low orders must vanish: Cauchy-Binet starts at (-zN)^{N(N-1)/2}.
    TruncSeries out = det.shift_down("z", shift) * scale.pow(-shift);
    return out.with_param("z", z_cap);
}

TruncSeries alpha_q_determinant(int N, const Rational& alpha, const std::vector<Rational>& a,
                                const std::vector<Rational>& b, int q_cap) {
    if (N < 1) throw ArgumentError("alpha_q_determinant: N must be positive");
    if (alpha.is_integer() && alpha.sign() > 0) throw ArgumentError("alpha must not be a positive integer");
    Rational one_minus = Rational(1) - alpha;
    // (1 - u)^{alpha-1} = sum_k (1-alpha)_k u^k / k!
    auto coeff = [&](int k) { return rising(one_minus, k) / factorial(k); };
    return scaled_determinant(N, a, b, "q", q_cap, coeff).with_param("q", q_cap);
}

TruncSeries alpha_q_base_determinant(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::size_t N = a.size();
    if (b.size() != N) throw ArgumentError("alpha_q_base_determinant: size mismatch");
    int cap = static_cast<int>(N);
    SeriesMatrix m(N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            m(i, j) = TruncSeries(Rational(1)).with_param("q", cap + cap) -
                      TruncSeries::variable("q", cap + cap) * (a[i] * b[j]);
    return bareiss_determinant(std::move(m)).truncated("q", cap);
}

} // namespace hurwitz
