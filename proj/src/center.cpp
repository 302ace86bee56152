#include "hurwitz/center.hpp"

#include "hurwitz/characters.hpp"
#include "hurwitz/error.hpp"

namespace hurwitz {

CenterElement CenterElement::unit(int n, CenterBasis basis, const Partition& p) {
    if (p.size() != n) throw ArgumentError("center element: partition size mismatch");
    CenterElement e;
    e.n = n;
    e.basis = basis;
    e.add(p, TruncSeries(Rational(1)));
    return e;
}

void CenterElement::add(const Partition& p, const TruncSeries& c) {
    if (p.size() != n) throw ArgumentError("center element: (" + p.str() + ") is not a partition of " + std::to_string(n));
    if (c.is_zero()) return;
    auto it = coords.find(p);
    if (it == coords.end()) {
        coords.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coords.erase(it);
}

TruncSeries CenterElement::coordinate(const Partition& p) const {
    auto it = coords.find(p);
    return it == coords.end() ? TruncSeries() : it->second;
}

CenterElement CenterElement::slice(const TruncSeries::Monomial& exps) const {
    CenterElement out;
    out.n = n;
    out.basis = basis;
    for (const auto& [p, c] : coords) out.add(p, TruncSeries(c.coefficient(exps)));
    return out;
}

bool operator==(const CenterElement& a, const CenterElement& b) {
    if (a.n != b.n || a.basis != b.basis || a.coords.size() != b.coords.size()) return false;
    for (const auto& [p, c] : a.coords) {
        auto it = b.coords.find(p);
        if (it == b.coords.end() || !(it->second == c)) return false;
    }
    return true;
}

CenterElement class_to_idem(const CenterElement& v) {
    if (v.basis != CenterBasis::ClassSums) throw ArgumentError("class_to_idem: input not in class-sum basis");
    auto t = character_table(v.n);
    CenterElement out;
    out.n = v.n;
    out.basis = CenterBasis::Idempotents;
    for (const auto& [mu, c] : v.coords) {
        std::size_t mi = t->index(mu);
        for (std::size_t li = 0; li < t->dim(); ++li) {
            auto chi = (*t)(li, mi);
            if (chi == 0) continue;
            out.add(t->order()[li], c * (t->hook(li) * Rational(static_cast<long>(chi)) / t->z(mi)));
        }
    }
    return out;
}

CenterElement idem_to_class(const CenterElement& v) {
    if (v.basis != CenterBasis::Idempotents) throw ArgumentError("idem_to_class: input not in idempotent basis");
    auto t = character_table(v.n);
    CenterElement out;
    out.n = v.n;
    out.basis = CenterBasis::ClassSums;
    for (const auto& [lambda, c] : v.coords) {
        std::size_t li = t->index(lambda);
        for (std::size_t mi = 0; mi < t->dim(); ++mi) {
            auto chi = (*t)(li, mi);
            if (chi == 0) continue;
            out.add(t->order()[mi], c * (Rational(static_cast<long>(chi)) / t->hook(li)));
        }
    }
    return out;
}

CenterElement to_basis(const CenterElement& v, CenterBasis basis) {
    if (v.basis == basis) return v;
    return basis == CenterBasis::Idempotents ? class_to_idem(v) : idem_to_class(v);
}

CenterElement center_multiply(const CenterElement& u, const CenterElement& v) {
    if (u.n != v.n) throw ArgumentError("center_multiply: n mismatch");
    auto a = to_basis(u, CenterBasis::Idempotents);
    auto b = to_basis(v, CenterBasis::Idempotents);
    CenterElement out;
    out.n = u.n;
    out.basis = CenterBasis::Idempotents;
    for (const auto& [lambda, c] : a.coords) {
        auto it = b.coords.find(lambda);
        if (it != b.coords.end()) out.add(lambda, c * it->second);
    }
    return to_basis(out, u.basis);
}

SymFunc characteristic_map(const CenterElement& v) {
    SymFunc out;
    out.degree_cap = std::max(kDefaultDegreeCap, v.n);
    out.basis = v.basis == CenterBasis::ClassSums ? SymBasis::PowerSum : SymBasis::Schur;
    for (const auto& [p, c] : v.coords) {
        if (!c.is_constant()) throw ArgumentError("characteristic_map: coordinates must be constants");
        Rational norm = v.basis == CenterBasis::ClassSums ? z_of(p) : hook_product(p);
        out.add(p, c.constant_term() / norm);
    }
    return out;
}

} // namespace hurwitz
