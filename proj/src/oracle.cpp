#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "hurwitz/error.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz::oracle {

namespace {

// Number of ways to send each part of mu to one of the variables so that
// variable i receives total target[i].
std::int64_t assignments(std::span<const int> parts, std::vector<int>& target, std::size_t k) {
    if (k == parts.size()) {
        for (int t : target)
            if (t != 0) return 0;
        return 1;
    }
    std::int64_t total = 0;
    for (auto& t : target) {
        if (t < parts[k]) continue;
        t -= parts[k];
        total += assignments(parts, target, k + 1);
        t += parts[k];
    }
    return total;
}

int sign_of(const std::vector<int>& perm) {
    int s = 1;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

Rational rational_det(std::vector<std::vector<Rational>> a) {
    std::size_t n = a.size();
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational f = a[i][k] / a[k][k];
            if (f.is_zero()) continue;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

} // namespace

std::int64_t character_by_frobenius(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw ArgumentError("character: size mismatch");
    int m = lambda.length();
    if (m == 0) return 1;
    std::vector<int> shifted(m), perm(m);
    for (int i = 0; i < m; ++i) shifted[i] = lambda[i] + m - 1 - i;
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t total = 0;
    do {
        // a_delta contributes sign(perm) x_i^{m-1-perm[i]}
        std::vector<int> target(m);
        bool ok = true;
        for (int i = 0; i < m; ++i) {
            target[i] = shifted[i] - (m - 1 - perm[i]);
            if (target[i] < 0) ok = false;
        }
        if (!ok) continue;
        total += sign_of(perm) * assignments(mu.parts(), target, 0);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Rational schur_by_alternant(const Partition& lambda, const std::vector<Rational>& x) {
    int m = static_cast<int>(x.size());
    if (lambda.length() > m) return Rational(0);
    if (m == 0) return Rational(1);
    std::vector<std::vector<Rational>> num(m, std::vector<Rational>(m)), den = num;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            num[i][j] = x[i].pow(lambda.part_or_zero(j) + m - 1 - j);
            den[i][j] = x[i].pow(m - 1 - j);
        }
    Rational d = rational_det(den);
    if (d.is_zero()) throw ArgumentError("alternant: repeated variable values");
    return rational_det(num) / d;
}

std::uint64_t ssyt_count(const Partition& lambda, int m) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) cells.push_back({i, j});
    std::map<std::pair<int, int>, int> fill;
    std::function<std::uint64_t(std::size_t)> rec = [&](std::size_t k) -> std::uint64_t {
        if (k == cells.size()) return 1;
        auto [i, j] = cells[k];
        int lo = 1;
        if (j > 0) lo = std::max(lo, fill[{i, j - 1}]);
        if (i > 0) lo = std::max(lo, fill[{i - 1, j}] + 1);
        std::uint64_t total = 0;
        for (int v = lo; v <= m; ++v) {
            fill[{i, j}] = v;
            total += rec(k + 1);
        }
        return total;
    };
    return rec(0);
}

Rational dimension_by_determinant(const Partition& lambda) {
    int m = lambda.length();
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int e = lambda[i] - i + j;
            a[i][j] = e < 0 ? Rational(0) : factorial(e).inverse();
        }
    return factorial(lambda.size()) * rational_det(a);
}

std::uint64_t partition_count_pentagonal(int n) {
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = 1;
    for (int i = 1; i <= n; ++i) {
        std::int64_t s = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > i) break;
            int sign = k % 2 ? 1 : -1;
            s += sign * p[i - g1];
            if (g2 <= i) s += sign * p[i - g2];
        }
        p[i] = s;
    }
    return static_cast<std::uint64_t>(p[n]);
}

std::uint64_t class_size_by_enumeration(const Partition& mu) {
    std::uint64_t count = 0;
    for (const auto& g : all_permutations(mu.size()))
        if (g.cycle_type() == mu) ++count;
    return count;
}

std::map<Partition, Rational> structure_constants(const Partition& mu, const Partition& nu) {
    int n = mu.size();
    if (nu.size() != n) throw ArgumentError("structure constants: size mismatch");
    auto perms = all_permutations(n);
    std::map<Partition, Rational> out;
    for (const auto& kappa : partitions_of(n)) {
        Permutation h = Permutation::canonical_representative(kappa);
        std::int64_t count = 0;
        for (const auto& g : perms) {
            if (g.cycle_type() != mu) continue;
            if ((g.inverse() * h).cycle_type() == nu) ++count;
        }
        if (count) out[kappa] = Rational(count);
    }
    return out;
}

std::vector<std::vector<Rational>> plain_walks_class_dp(int n, int k) {
    auto order = partitions_of(n);
    std::size_t d = order.size();
    // t[nu][kappa] = #{tau : cyc(tau h) = kappa} for h of type nu
    std::vector<std::vector<Rational>> t(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t v = 0; v < d; ++v) {
        Permutation h = Permutation::canonical_representative(order[v]);
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                Partition kappa = (Permutation::transposition(n, a, b) * h).cycle_type();
                std::size_t ki = std::find(order.begin(), order.end(), kappa) - order.begin();
                t[v][ki] += Rational(1);
            }
    }
    std::vector<std::vector<Rational>> out(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t mu = 0; mu < d; ++mu) {
        std::vector<Rational> vec(d, Rational(0));
        vec[mu] = Rational(1);
        for (int step = 0; step < k; ++step) {
            std::vector<Rational> next(d, Rational(0));
            for (std::size_t v = 0; v < d; ++v)
                if (!vec[v].is_zero())
                    for (std::size_t kk = 0; kk < d; ++kk) next[kk] += vec[v] * t[v][kk];
            vec = next;
        }
        for (std::size_t l = 0; l < d; ++l) out[l][mu] = vec[l];
    }
    return out;
}

std::uint64_t walks_brute_force(int n, const Partition& from, const Partition& to,
                                const std::vector<std::pair<int, int>>& segments, bool transitive) {
    // segments: (kind, length) with kind 0 plain, 1 weak, 2 strict
    std::vector<int> kinds;
    std::vector<bool> starts;
    for (auto [kind, len] : segments)
        for (int i = 0; i < len; ++i) {
            kinds.push_back(kind);
            starts.push_back(i == 0);
        }
    std::vector<std::pair<int, int>> transpositions;
    for (int b = 2; b <= n; ++b)
        for (int a = 1; a < b; ++a) transpositions.push_back({a, b});
    Permutation h0 = Permutation::canonical_representative(to);
    std::uint64_t total = 0;
    std::vector<std::pair<int, int>> chosen;
    std::function<void(const Permutation&, const Permutation&, std::size_t)> rec =
        [&](const Permutation& g, const Permutation& cur, std::size_t t) {
            if (t == kinds.size()) {
                if (!(cur == h0)) return;
                if (transitive) {
                    std::vector<int> parent(n);
                    std::iota(parent.begin(), parent.end(), 0);
                    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
                    for (int x = 0; x < n; ++x) parent[find(x)] = find(g(x));
                    for (auto [a, b] : chosen) parent[find(a - 1)] = find(b - 1);
                    for (int x = 0; x < n; ++x)
                        if (find(x) != find(0)) return;
                }
                ++total;
                return;
            }
            for (auto [a, b] : transpositions) {
                if (!starts[t] && kinds[t] != 0) {
                    int prev = chosen.back().second;
                    if (kinds[t] == 1 && b < prev) continue;
                    if (kinds[t] == 2 && b <= prev) continue;
                }
                chosen.push_back({a, b});
                rec(g, Permutation::transposition(n, a, b) * cur, t + 1);
                chosen.pop_back();
            }
        };
    for (const auto& g : all_permutations(n))
        if (g.cycle_type() == from) rec(g, g, 0);
    return total;
}

GroupAlgebraElement jm_complete(int n, int k) {
    std::vector<GroupAlgebraElement> h{GroupAlgebraElement::identity(n)};
    std::vector<GroupAlgebraElement> p(k + 1, GroupAlgebraElement(n));
    for (int i = 1; i <= k; ++i) p[i] = jm_power_sum(n, i);
    for (int m = 1; m <= k; ++m) {
        GroupAlgebraElement s(n);
        for (int i = 1; i <= m; ++i) s += multiply(p[i], h[m - i]);
        h.push_back(s * Rational(1, m));
    }
    return h[k];
}

GroupAlgebraElement jm_elementary(int n, int k) {
    std::vector<GroupAlgebraElement> e{GroupAlgebraElement::identity(n)};
    std::vector<GroupAlgebraElement> p(k + 1, GroupAlgebraElement(n));
    for (int i = 1; i <= k; ++i) p[i] = jm_power_sum(n, i);
    for (int m = 1; m <= k; ++m) {
        GroupAlgebraElement s(n);
        for (int i = 1; i <= m; ++i) {
            GroupAlgebraElement term = multiply(p[i], e[m - i]);
            if (i % 2 == 0) term *= Rational(-1);
            s += term;
        }
        e.push_back(s * Rational(1, m));
    }
    return e[k];
}

TruncSeries leibniz_determinant(const SeriesMatrix& m) {
    int n = static_cast<int>(m.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    TruncSeries total;
    do {
        TruncSeries term(Rational(sign_of(perm)));
        for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

std::vector<Rational> seeded_rationals(std::uint64_t seed, std::size_t count, bool distinct) {
    std::mt19937_64 gen(seed);
    std::vector<Rational> out;
    std::set<Rational> seen;
    while (out.size() < count) {
        std::uint64_t r = gen();
        long num = static_cast<long>(r % 19) - 9;
        long den = static_cast<long>((r >> 8) % 6) + 1;
        if (num == 0) continue;
        Rational v(num, den);
        if (distinct && !seen.insert(v).second) continue;
        out.push_back(v);
    }
    return out;
}

} // namespace hurwitz::oracle
