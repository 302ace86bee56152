#include "hurwitz/twist.hpp"

#include <set>

#include "hurwitz/characters.hpp"
#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

std::vector<std::string> atom_params(const TwistAtom& a) {
    return std::visit(
        [](const auto& x) -> std::vector<std::string> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ExpAtom>) {
                std::vector<std::string> out;
                if (!x.scale_param.empty()) out.push_back(x.scale_param);
                if (!x.beta_param.empty()) out.push_back(x.beta_param);
                return out;
            } else if constexpr (std::is_same_v<T, ScaleAtom>) {
                if (x.param.empty()) return {};
                return {x.param};
            } else {
                if (x.value) return {};
                return {x.param};
            }
        },
        a);
}

TruncSeries scale_power(const std::string& param, const Rational& factor, int exponent, int cap) {
    Rational c = factor.pow(exponent);
    if (param.empty()) return TruncSeries(c);
    if (exponent > cap) return TruncSeries(Rational(0)).with_param(param, cap);
    return TruncSeries::monomial(c, {{param, exponent}}, {{param, cap}});
}

} // namespace

TwistSpec::TwistSpec(std::vector<TwistAtom> atoms, std::map<std::string, int> caps)
    : atoms_(std::move(atoms)), caps_(std::move(caps)) {
    std::set<std::string> seen;
    for (const auto& a : atoms_)
        for (const auto& p : atom_params(a)) {
            if (!seen.insert(p).second) throw ArgumentError("twist parameter '" + p + "' used twice");
            if (!caps_.count(p)) {
                bool scale_like = std::holds_alternative<ScaleAtom>(a) ||
                                  (std::holds_alternative<ExpAtom>(a) && std::get<ExpAtom>(a).scale_param == p);
                if (!scale_like) throw ArgumentError("twist parameter '" + p + "' has no degree cap");
                caps_[p] = kDefaultScaleCap;
            }
            if (caps_[p] < 0) throw ArgumentError("negative cap for '" + p + "'");
        }
}

TwistSpec TwistSpec::plain(int beta_cap) { return TwistSpec({ExpAtom{"", "beta"}}, {{"beta", beta_cap}}); }
TwistSpec TwistSpec::monotone(int z_cap) { return TwistSpec({HAtom{"z", {}}}, {{"z", z_cap}}); }
TwistSpec TwistSpec::strict(int w_cap) { return TwistSpec({EAtom{"w", {}}}, {{"w", w_cap}}); }
TwistSpec TwistSpec::okounkov(int q_cap, int beta_cap) {
    return TwistSpec({ExpAtom{"q", "beta"}}, {{"q", q_cap}, {"beta", beta_cap}});
}

int TwistSpec::cap(const std::string& param) const {
    auto it = caps_.find(param);
    if (it == caps_.end()) throw ArgumentError("twist has no parameter '" + param + "'");
    return it->second;
}

std::string TwistSpec::label() const {
    std::string s;
    for (const auto& a : atoms_) {
        if (!s.empty()) s += '*';
        s += std::visit(
            [](const auto& x) -> std::string {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, HAtom>) return "H";
                else if constexpr (std::is_same_v<T, EAtom>) return "E";
                else if constexpr (std::is_same_v<T, ExpAtom>) return "Exp";
                else return "Scale";
            },
            a);
    }
    return s.empty() ? "1" : s;
}

TwistSpec TwistSpec::operator*(const TwistSpec& other) const {
    auto atoms = atoms_;
    atoms.insert(atoms.end(), other.atoms_.begin(), other.atoms_.end());
    auto caps = caps_;
    for (const auto& [k, v] : other.caps_) caps[k] = v;
    return TwistSpec(std::move(atoms), std::move(caps));
}

TruncSeries twist_eigenvalue(const TwistSpec& t, const Partition& lambda) {
    auto cs = contents(lambda);
    TruncSeries result(Rational(1));
    for (const auto& atom : t.atoms()) {
        if (const auto* h = std::get_if<HAtom>(&atom); h && h->value) {
            Rational f(1);
            for (int c : cs) {
                Rational d = Rational(1) - *h->value * Rational(c);
                if (d.is_zero()) throw SingularParameterError("H twist: 1 - z*c vanishes at content " + std::to_string(c), c);
                f /= d;
            }
            result *= TruncSeries(f);
        } else if (const auto* e = std::get_if<EAtom>(&atom); e && e->value) {
            Rational f(1);
            for (int c : cs) f *= Rational(1) + *e->value * Rational(c);
            result *= TruncSeries(f);
        } else if (h) {
            int cap = t.cap(h->param);
            TruncSeries f = TruncSeries(Rational(1)).with_param(h->param, cap);
            for (int c : cs)
                if (c != 0) f *= geometric(Rational(c), h->param, cap);
            result *= f;
        } else if (e) {
            int cap = t.cap(e->param);
            TruncSeries f = TruncSeries(Rational(1)).with_param(e->param, cap);
            for (int c : cs)
                if (c != 0) f *= TruncSeries(Rational(1)) + TruncSeries::variable(e->param, cap) * Rational(c);
            result *= f;
        } else if (const auto* x = std::get_if<ExpAtom>(&atom)) {
            if (!x->scale_param.empty())
                result *= scale_power(x->scale_param, Rational(1), lambda.size(), t.cap(x->scale_param));
            if (!x->beta_param.empty()) {
                long cont = content_sum(lambda);
                int cap = t.cap(x->beta_param);
                result *= (TruncSeries::variable(x->beta_param, cap) * Rational(cont)).exp().with_param(x->beta_param, cap);
            }
        } else {
            const auto& s = std::get<ScaleAtom>(atom);
            int cap = s.param.empty() ? 0 : t.cap(s.param);
            result *= scale_power(s.param, s.factor, lambda.size(), cap);
        }
    }
    return result;
}

EigenvalueFn eigenvalue_fn(const TwistSpec& t) {
    return [t](const Partition& lambda) { return twist_eigenvalue(t, lambda); };
}

const TruncSeries& ConnectionMatrix::at(const Partition& lambda, const Partition& mu) const {
    auto find = [&](const Partition& p) {
        for (std::size_t i = 0; i < order.size(); ++i)
            if (order[i] == p) return i;
        throw ArgumentError("connection matrix: (" + p.str() + ") is not a partition of " + std::to_string(n));
    };
    return (*this)(find(lambda), find(mu));
}

ConnectionMatrix connection_coeffs(const EigenvalueFn& eigen, int n) {
    auto t = character_table(n);
    ConnectionMatrix m;
    m.n = n;
    m.order = t->order();
    std::size_t d = t->dim();
    std::vector<TruncSeries> ev;
    ev.reserve(d);
    for (const auto& nu : t->order()) ev.push_back(eigen(nu));
    m.entries.assign(d * d, TruncSeries());
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t mu = 0; mu < d; ++mu) {
            TruncSeries s;
            for (std::size_t nu = 0; nu < d; ++nu) {
                long w = static_cast<long>((*t)(nu, l) * (*t)(nu, mu));
                if (w != 0) s += ev[nu] * Rational(w);
            }
            m.entries[l * d + mu] = s * t->z(l).inverse();
        }
    return m;
}

ConnectionMatrix connection_coeffs(const TwistSpec& t, int n) { return connection_coeffs(eigenvalue_fn(t), n); }

ConnectionMatrix compose(const ConnectionMatrix& a, const ConnectionMatrix& b) {
    if (a.n != b.n) throw ArgumentError("compose: n mismatch");
    ConnectionMatrix m;
    m.n = a.n;
    m.order = a.order;
    std::size_t d = a.dim();
    m.entries.assign(d * d, TruncSeries());
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t mu = 0; mu < d; ++mu) {
            TruncSeries s;
            for (std::size_t nu = 0; nu < d; ++nu) s += a(l, nu) * b(nu, mu);
            m.entries[l * d + mu] = s;
        }
    return m;
}

CenterElement apply_twist(const EigenvalueFn& eigen, const CenterElement& v) {
    auto idem = to_basis(v, CenterBasis::Idempotents);
    CenterElement out;
    out.n = v.n;
    out.basis = CenterBasis::Idempotents;
    for (const auto& [lambda, c] : idem.coords) out.add(lambda, c * eigen(lambda));
    return to_basis(out, v.basis);
}

CenterElement apply_twist(const TwistSpec& t, const CenterElement& v) { return apply_twist(eigenvalue_fn(t), v); }

} // namespace hurwitz
