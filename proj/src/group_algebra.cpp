#include "hurwitz/group_algebra.hpp"

#include <memory>
#include <mutex>

namespace hurwitz {

namespace {

const std::vector<Permutation>& cached_permutations(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<const std::vector<Permutation>>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<const std::vector<Permutation>>(all_permutations(n));
    return *slot;
}

} // namespace

GroupAlgebraElement GroupAlgebraElement::delta(const Permutation& g, const Rational& c) {
    GroupAlgebraElement e(g.degree());
    e.add(g, c);
    return e;
}

GroupAlgebraElement GroupAlgebraElement::identity(int n, const Rational& c) {
    return delta(Permutation(n), c);
}

Rational GroupAlgebraElement::coefficient(const Permutation& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add(const Permutation& g, const Rational& c) {
    if (g.degree() != n_) throw ArgumentError("group algebra: permutation degree mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(g, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
    if (o.n_ != n_) throw ArgumentError("group algebra: degree mismatch");
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
    if (o.n_ != n_) throw ArgumentError("group algebra: degree mismatch");
    for (const auto& [g, c] : o.terms_) add(g, -c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [g, v] : terms_) v *= c;
    return *this;
}

GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.degree() != b.degree())
        throw ArgumentError("group algebra multiply: n mismatch (" + std::to_string(a.degree()) +
                            " vs " + std::to_string(b.degree()) + ")");
    GroupAlgebraElement out(a.degree());
    for (const auto& [g, c] : a.terms())
        for (const auto& [h, d] : b.terms()) out.add(g * h, c * d);
    return out;
}

GroupAlgebraElement power(const GroupAlgebraElement& a, int k) {
    GroupAlgebraElement r = GroupAlgebraElement::identity(a.degree());
    for (int i = 0; i < k; ++i) r = multiply(r, a);
    return r;
}

GroupAlgebraElement class_sum(int n, const Partition& mu) {
    if (mu.size() != n)
        throw ArgumentError("class_sum: |mu|=" + std::to_string(mu.size()) + " but n=" + std::to_string(n));
    GroupAlgebraElement out(n);
    for (const auto& g : cached_permutations(n))
        if (g.cycle_type() == mu) out.add(g, Rational(1));
    return out;
}

GroupAlgebraElement jm_element(int n, int b) {
    if (b < 1 || b > n)
        throw ArgumentError("jm_element: b=" + std::to_string(b) + " outside 1.." + std::to_string(n));
    GroupAlgebraElement out(n);
    for (int a = 1; a < b; ++a) out.add(Permutation::transposition(n, a, b), Rational(1));
    return out;
}

GroupAlgebraElement jm_power_sum(int n, int i) {
    if (i < 0) throw ArgumentError("jm_power_sum: negative exponent");
    if (i == 0) return GroupAlgebraElement::identity(n, Rational(n));
    GroupAlgebraElement out(n);
    for (int b = 1; b <= n; ++b) out += power(jm_element(n, b), i);
    return out;
}

CenterElement project_to_classes(const GroupAlgebraElement& a) {
    int n = a.degree();
    CenterElement out;
    out.n = n;
    out.basis = CenterBasis::ClassSums;
    std::map<Partition, std::pair<Permutation, Rational>> seen;
    std::map<Partition, std::size_t> support;
    for (const auto& [g, c] : a.terms()) {
        Partition t = g.cycle_type();
        auto [it, fresh] = seen.emplace(t, std::make_pair(g, c));
        if (!fresh && it->second.second != c)
            throw CentralityError("element is not central: conjugates " + it->second.first.str() + " and " +
                                      g.str() + " carry different coefficients",
                                  it->second.first, g);
        ++support[t];
    }
    for (const auto& [t, entry] : seen) {
        Rational class_size = factorial(n) / z_of(t);
        if (Rational(static_cast<long>(support[t])) != class_size) {
            for (const auto& h : cached_permutations(n))
                if (h.cycle_type() == t && a.coefficient(h).is_zero())
                    throw CentralityError("element is not central: conjugates " + entry.first.str() + " and " +
                                              h.str() + " carry different coefficients",
                                          entry.first, h);
        }
        out.add(t, TruncSeries(entry.second));
    }
    return out;
}

GroupAlgebraElement embed_center(const CenterElement& v) {
    if (v.basis != CenterBasis::ClassSums) return embed_center(to_basis(v, CenterBasis::ClassSums));
    GroupAlgebraElement out(v.n);
    for (const auto& [mu, c] : v.coords) {
        if (!c.is_constant()) throw ArgumentError("embed_center: coordinates must be constants");
        out += class_sum(v.n, mu) * c.constant_term();
    }
    return out;
}

} // namespace hurwitz
