#include "hurwitz/symfunc.hpp"

#include <algorithm>

#include "hurwitz/characters.hpp"
#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

Partition remove_part(const Partition& p, int k) {
    std::vector<int> parts(p.parts().begin(), p.parts().end());
    auto it = std::find(parts.begin(), parts.end(), k);
    if (it == parts.end()) throw ArgumentError("remove_part: missing part");
    parts.erase(it);
    return Partition(std::move(parts));
}

Partition add_parts(const Partition& p, std::initializer_list<int> extra) {
    std::vector<int> parts(p.parts().begin(), p.parts().end());
    parts.insert(parts.end(), extra.begin(), extra.end());
    return Partition::from_unsorted(std::move(parts));
}

} // namespace

SymFunc SymFunc::single(SymBasis basis, const Partition& p, const Rational& c, int degree_cap) {
    SymFunc f;
    f.basis = basis;
    f.degree_cap = degree_cap;
    f.add(p, c);
    return f;
}

void SymFunc::add(const Partition& p, const Rational& c) {
    if (c.is_zero()) return;
    if (p.size() > degree_cap) {
        truncated = true;
        return;
    }
    auto [it, fresh] = terms.emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Rational SymFunc::coefficient(const Partition& p) const {
    auto it = terms.find(p);
    return it == terms.end() ? Rational(0) : it->second;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (o.basis != basis) throw ArgumentError("SymFunc addition across bases");
    for (const auto& [p, c] : o.terms) add(p, c);
    truncated = truncated || o.truncated;
    return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
    if (c.is_zero()) terms.clear();
    for (auto& [p, v] : terms) v *= c;
    return *this;
}

SymFunc schur_to_powersum(const Partition& lambda) {
    auto table = character_table(lambda.size());
    SymFunc f;
    f.degree_cap = std::max(kDefaultDegreeCap, lambda.size());
    std::size_t li = table->index(lambda);
    for (std::size_t mi = 0; mi < table->dim(); ++mi)
        f.add(table->order()[mi], Rational(static_cast<long>((*table)(li, mi))) / table->z(mi));
    return f;
}

SymFunc powersum_to_schur(const Partition& mu) {
    auto table = character_table(mu.size());
    SymFunc f;
    f.basis = SymBasis::Schur;
    f.degree_cap = std::max(kDefaultDegreeCap, mu.size());
    std::size_t mi = table->index(mu);
    for (std::size_t li = 0; li < table->dim(); ++li)
        f.add(table->order()[li], Rational(static_cast<long>((*table)(li, mi))));
    return f;
}

SymFunc to_powersum(const SymFunc& f) {
    if (f.basis == SymBasis::PowerSum) return f;
    SymFunc out;
    out.degree_cap = f.degree_cap;
    out.truncated = f.truncated;
    for (const auto& [lambda, c] : f.terms) {
        auto e = schur_to_powersum(lambda);
        for (const auto& [mu, v] : e.terms) out.add(mu, c * v);
    }
    return out;
}

SymFunc to_schur(const SymFunc& f) {
    if (f.basis == SymBasis::Schur) return f;
    SymFunc out;
    out.basis = SymBasis::Schur;
    out.degree_cap = f.degree_cap;
    out.truncated = f.truncated;
    for (const auto& [mu, c] : f.terms) {
        auto e = powersum_to_schur(mu);
        for (const auto& [lambda, v] : e.terms) out.add(lambda, c * v);
    }
    return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    SymFunc a = to_powersum(f), b = to_powersum(g);
    SymFunc out;
    out.degree_cap = std::min(a.degree_cap, b.degree_cap);
    out.truncated = a.truncated || b.truncated;
    for (const auto& [p, c] : a.terms)
        for (const auto& [q, d] : b.terms) out.add(p.merged_with(q), c * d);
    return out;
}

Rational power_sum_at(int k, std::span<const Rational> x) {
    Rational s(0);
    for (const auto& v : x) s += v.pow(k);
    return s;
}

Rational power_sum_at(const Partition& mu, std::span<const Rational> x) {
    Rational r(1);
    for (int k : mu.parts()) r *= power_sum_at(k, x);
    return r;
}

Rational evaluate(const SymFunc& f, std::span<const Rational> x) {
    SymFunc p = to_powersum(f);
    int maxk = 0;
    for (const auto& [mu, c] : p.terms)
        if (!mu.empty()) maxk = std::max(maxk, mu[0]);
    std::vector<Rational> pk(maxk + 1);
    for (int k = 1; k <= maxk; ++k) pk[k] = power_sum_at(k, x);
    Rational total(0);
    for (const auto& [mu, c] : p.terms) {
        Rational t = c;
        for (int k : mu.parts()) t *= pk[k];
        total += t;
    }
    return total;
}

Rational schur_at(const Partition& lambda, std::span<const Rational> x) {
    return evaluate(SymFunc::single(SymBasis::Schur, lambda), x);
}

CauchySides cauchy_sides(int n, std::span<const Rational> x, std::span<const Rational> y) {
    CauchySides out{Rational(0), Rational(0), Rational(0)};
    auto table = character_table(n);
    for (std::size_t i = 0; i < table->dim(); ++i) {
        const auto& p = table->order()[i];
        out.powersum_side += power_sum_at(p, x) * power_sum_at(p, y) / table->z(i);
        out.schur_side += schur_at(p, x) * schur_at(p, y);
    }
    // Degree-n coefficient of prod 1/(1 - t x_a y_b), by truncated polynomial products in t.
    std::vector<Rational> poly(n + 1, Rational(0));
    poly[0] = Rational(1);
    for (const auto& a : x)
        for (const auto& b : y) {
            Rational u = a * b;
            // multiply by 1/(1 - u t): running sum recurrence c_k += u c_{k-1}
            for (int k = 1; k <= n; ++k) poly[k] += u * poly[k - 1];
        }
    out.kernel = poly[n];
    return out;
}

SymFunc euler_operator(const SymFunc& f) {
    SymFunc p = to_powersum(f);
    SymFunc out;
    out.degree_cap = p.degree_cap;
    for (const auto& [mu, c] : p.terms) out.add(mu, c * Rational(mu.size()));
    return out;
}

SymFunc cut_and_join(const SymFunc& f) {
    SymFunc p = to_powersum(f);
    SymFunc out;
    out.degree_cap = p.degree_cap;
    for (const auto& [mu, c] : p.terms) {
        auto m = mu.multiplicities();
        auto mult = [&](int k) { return k < static_cast<int>(m.size()) ? m[k] : 0; };
        int top = m.size() - 1;
        // cut: (1/2) sum_{i,j>=1} (i+j) p_i p_j d/dp_{i+j}
        for (int s = 2; s <= top; ++s) {
            if (mult(s) == 0) continue;
            Partition rest = remove_part(mu, s);
            for (int i = 1; i < s; ++i) {
                int j = s - i;
                out.add(add_parts(rest, {i, j}), c * Rational(s * mult(s), 2));
            }
        }
        // join: (1/2) sum_{i,j>=1} i j p_{i+j} d^2/dp_i dp_j
        for (int i = 1; i <= top; ++i)
            for (int j = 1; j <= top; ++j) {
                long d2 = (i == j) ? static_cast<long>(mult(i)) * (mult(i) - 1)
                                   : static_cast<long>(mult(i)) * mult(j);
                if (d2 == 0) continue;
                Partition rest = remove_part(remove_part(mu, i), j);
                out.add(add_parts(rest, {i + j}), c * Rational(static_cast<long>(i) * j * d2, 2));
            }
    }
    return out;
}

void TensorSymFunc::add(const Partition& x, const Partition& y, const TruncSeries& c) {
    if (c.is_zero()) return;
    if (x.size() > degree_cap || y.size() > degree_cap) return;
    auto key = std::make_pair(x, y);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

TruncSeries TensorSymFunc::coefficient(const Partition& x, const Partition& y) const {
    auto it = terms.find({x, y});
    return it == terms.end() ? TruncSeries() : it->second;
}

TensorSymFunc& TensorSymFunc::operator+=(const TensorSymFunc& o) {
    for (const auto& [k, c] : o.terms) add(k.first, k.second, c);
    return *this;
}

TensorSymFunc& TensorSymFunc::operator-=(const TensorSymFunc& o) {
    for (const auto& [k, c] : o.terms) add(k.first, k.second, -c);
    return *this;
}

TensorSymFunc& TensorSymFunc::operator*=(const Rational& c) {
    if (c.is_zero()) terms.clear();
    for (auto& [k, v] : terms) v *= c;
    return *this;
}

bool operator==(const TensorSymFunc& a, const TensorSymFunc& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (const auto& [k, c] : a.terms) {
        auto it = b.terms.find(k);
        if (it == b.terms.end() || !(it->second == c)) return false;
    }
    return true;
}

TensorSymFunc multiply(const TensorSymFunc& f, const TensorSymFunc& g) {
    TensorSymFunc out;
    out.degree_cap = std::min(f.degree_cap, g.degree_cap);
    for (const auto& [kf, cf] : f.terms)
        for (const auto& [kg, cg] : g.terms) {
            if (kf.first.size() + kg.first.size() > out.degree_cap ||
                kf.second.size() + kg.second.size() > out.degree_cap)
                continue;
            out.add(kf.first.merged_with(kg.first), kf.second.merged_with(kg.second), cf * cg);
        }
    return out;
}

TruncSeries evaluate(const TensorSymFunc& f, std::span<const Rational> x, std::span<const Rational> y) {
    TruncSeries total;
    for (const auto& [k, c] : f.terms) total += c * (power_sum_at(k.first, x) * power_sum_at(k.second, y));
    return total;
}

TensorSymFunc tensor(const SymFunc& f, const SymFunc& g) {
    SymFunc a = to_powersum(f), b = to_powersum(g);
    TensorSymFunc out;
    out.degree_cap = std::max(a.degree_cap, b.degree_cap);
    for (const auto& [p, c] : a.terms)
        for (const auto& [q, d] : b.terms) out.add(p, q, TruncSeries(c * d));
    return out;
}

} // namespace hurwitz
