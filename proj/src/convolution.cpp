#include "hurwitz/convolution.hpp"

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

TruncSeries scale_monomial(const std::string& param, const Rational& factor, long e, int cap) {
    if (param.empty()) return TruncSeries(factor.pow(e));
    if (e < 0) throw ArgumentError("negative power of formal parameter '" + param + "'");
    if (e > cap) return TruncSeries(Rational(0)).with_param(param, cap);
    return TruncSeries::monomial(factor.pow(e), {{param, static_cast<int>(e)}}, {{param, cap}});
}

// sum_{m=1}^{cap} sign^{m+1} (c x)^m / m: ln(1/(1 - c x)) for sign = +1 after
// the caller's choice, ln(1 + c x) for sign = -1 with c negated.
TruncSeries log_series(const Rational& c, int alternating, const std::string& name, int cap) {
    TruncSeries out = TruncSeries(Rational(0)).with_param(name, cap);
    Rational power(1);
    for (int m = 1; m <= cap; ++m) {
        power *= c;
        Rational coeff = power / Rational(m);
        if (alternating && m % 2 == 0) coeff = -coeff;
        out += TruncSeries::monomial(coeff, {{name, m}}, {{name, cap}});
    }
    return out;
}

struct CoreFactor {
    enum Kind { H, E, Beta } kind;
    std::string param;
    std::optional<Rational> value;
    int cap = 0;
};

// Factor of r_j for one atom, with the scale removed.
TruncSeries r_factor(const CoreFactor& f, long j) {
    Rational jr(j);
    switch (f.kind) {
    case CoreFactor::H:
        if (f.value) {
            Rational d = Rational(1) - jr * *f.value;
            if (d.is_zero()) throw SingularParameterError("r_j is singular: 1 - j z = 0 at j = " + std::to_string(j), j);
            return TruncSeries(d.inverse());
        }
        return geometric(jr, f.param, f.cap);
    case CoreFactor::E:
        if (f.value) return TruncSeries(Rational(1) + jr * *f.value);
        return TruncSeries(Rational(1)) + TruncSeries::variable(f.param, f.cap) * jr;
    case CoreFactor::Beta:
        return (TruncSeries::variable(f.param, f.cap) * jr).exp().with_param(f.param, f.cap);
    }
    return TruncSeries(Rational(1));
}

TruncSeries inverse_factor(const CoreFactor& f, long k) {
    Rational kr(k);
    switch (f.kind) {
    case CoreFactor::H:
        if (f.value) return TruncSeries(Rational(1) - kr * *f.value);
        return TruncSeries(Rational(1)) - TruncSeries::variable(f.param, f.cap) * kr;
    case CoreFactor::E:
        if (f.value) {
            Rational d = Rational(1) + kr * *f.value;
            if (d.is_zero()) throw SingularParameterError("rho_j is singular: 1 + k w = 0 at k = " + std::to_string(k), k);
            return TruncSeries(d.inverse());
        }
        return geometric(-kr, f.param, f.cap);
    case CoreFactor::Beta:
        return (TruncSeries::variable(f.param, f.cap) * (-kr)).exp().with_param(f.param, f.cap);
    }
    return TruncSeries(Rational(1));
}

std::optional<TruncSeries> log_factor(const CoreFactor& f, long j) {
    if (f.value) return std::nullopt;
    TruncSeries out = TruncSeries(Rational(0)).with_param(f.param, f.cap);
    if (f.kind == CoreFactor::Beta)
        return out + TruncSeries::variable(f.param, f.cap) * Rational(j * (j + 1) / 2);
    if (j > 0) {
        for (long k = 1; k <= j; ++k)
            out += f.kind == CoreFactor::H ? log_series(Rational(k), 0, f.param, f.cap)
                                           : log_series(Rational(k), 1, f.param, f.cap);
    } else {
        for (long k = j + 1; k <= 0; ++k)
            out -= f.kind == CoreFactor::H ? log_series(Rational(k), 0, f.param, f.cap)
                                           : log_series(Rational(k), 1, f.param, f.cap);
    }
    return out;
}

} // namespace

TruncSeries ConvolutionCoeffs::expand(const ScaledSeries& v) const {
    return v.core * scale_monomial(scale_param, scale_factor, v.exponent, scale_cap);
}

ConvolutionCoeffs intertwine(const TwistSpec& t) {
    ConvolutionCoeffs c;
    std::vector<CoreFactor> factors;
    auto set_scale = [&](const std::string& param) {
        if (!c.scale_param.empty())
            throw ArgumentError("intertwine: more than one formal scale parameter ('" + c.scale_param + "', '" + param + "')");
        c.scale_param = param;
        c.scale_cap = t.cap(param);
    };
    for (const auto& atom : t.atoms()) {
        if (const auto* h = std::get_if<HAtom>(&atom)) {
            factors.push_back({CoreFactor::H, h->param, h->value, h->value ? 0 : t.cap(h->param)});
        } else if (const auto* e = std::get_if<EAtom>(&atom)) {
            factors.push_back({CoreFactor::E, e->param, e->value, e->value ? 0 : t.cap(e->param)});
        } else if (const auto* x = std::get_if<ExpAtom>(&atom)) {
            if (!x->scale_param.empty()) set_scale(x->scale_param);
            if (!x->beta_param.empty()) factors.push_back({CoreFactor::Beta, x->beta_param, std::nullopt, t.cap(x->beta_param)});
        } else {
            const auto& s = std::get<ScaleAtom>(atom);
            if (!s.param.empty()) set_scale(s.param);
            c.scale_factor *= s.factor;
        }
    }
    c.r = [factors](long j) {
        ScaledSeries v{1, TruncSeries(Rational(1))};
        for (const auto& f : factors) v.core *= r_factor(f, j);
        return v;
    };
    c.rho = [factors](long j) {
        ScaledSeries v{j, TruncSeries(Rational(1))};
        for (const auto& f : factors) {
            if (j > 0)
                for (long k = 1; k <= j; ++k) v.core *= r_factor(f, k);
            else
                for (long k = j + 1; k <= 0; ++k) v.core *= inverse_factor(f, k);
        }
        return v;
    };
    c.log_rho = [factors](long j) -> std::optional<ScaledSeries> {
        ScaledSeries v{j, TruncSeries(Rational(0))};
        for (const auto& f : factors) {
            auto l = log_factor(f, j);
            if (!l) return std::nullopt;
            v.core += *l;
        }
        return v;
    };
    return c;
}

ScaledSeries r_lambda_shifted_scaled(const ConvolutionCoeffs& c, const Partition& lambda, long N) {
    ScaledSeries out{0, TruncSeries(Rational(1))};
    if (N > 0) {
        for (long j = 0; j < N; ++j) {
            auto v = c.rho(j);
            out.exponent += v.exponent;
            out.core *= v.core;
        }
    } else if (N < 0) {
        for (long j = N; j < 0; ++j) {
            auto v = c.rho(j);
            if (v.core.constant_term().is_zero())
                throw SingularParameterError("rho_j has no inverse at j = " + std::to_string(j), j);
            out.exponent -= v.exponent;
            out.core *= v.core.inverse();
        }
    }
    for (int content : contents(lambda)) {
        auto v = c.r(N + content);
        out.exponent += v.exponent;
        out.core *= v.core;
    }
    return out;
}

TruncSeries r_lambda_shifted(const ConvolutionCoeffs& c, const Partition& lambda, long N) {
    return c.expand(r_lambda_shifted_scaled(c, lambda, N));
}

Family Family::vacuum() { return Family{}; }

Family Family::okounkov(int beta_cap, long N, int q_cap) {
    Family f;
    f.kind = FamilyKind::Okounkov;
    f.beta_cap = beta_cap;
    f.N = N;
    f.q_cap = q_cap;
    return f;
}

Family Family::hciz_exp(long N, int z_cap) {
    if (N < 1) throw ArgumentError("hciz_exp needs N >= 1");
    Family f;
    f.kind = FamilyKind::HcizExp;
    f.N = N;
    f.z_cap = z_cap;
    return f;
}

Family Family::alpha_q(const Rational& alpha, long N, int q_cap) {
    if (alpha.is_integer() && alpha.sign() > 0) throw ArgumentError("alpha_q: alpha must not be a positive integer");
    if (N < 1) throw ArgumentError("alpha_q needs N >= 1");
    Family f;
    f.kind = FamilyKind::AlphaQ;
    f.alpha = alpha;
    f.N = N;
    f.q_cap = q_cap;
    return f;
}

Family Family::multimonotone(int m, int w_cap, int q_cap) {
    if (m < 1) throw ArgumentError("multimonotone needs m >= 1");
    Family f;
    f.kind = FamilyKind::Multimonotone;
    f.m = m;
    f.w_cap = w_cap;
    f.q_cap = q_cap;
    return f;
}

Family Family::from_twist(const TwistSpec& t) {
    Family f;
    f.kind = FamilyKind::Twist;
    f.twist = t;
    return f;
}

std::string Family::name() const {
    switch (kind) {
    case FamilyKind::Vacuum: return "vacuum";
    case FamilyKind::Okounkov: return "okounkov";
    case FamilyKind::HcizExp: return "hciz";
    case FamilyKind::AlphaQ: return "alpha_q";
    case FamilyKind::Multimonotone: return "multimonotone";
    case FamilyKind::Twist: return "twist:" + twist->label();
    }
    return "";
}

std::vector<SeriesParam> Family::params() const {
    switch (kind) {
    case FamilyKind::Vacuum: return {};
    case FamilyKind::Okounkov: return {{"beta", beta_cap}, {"q", q_cap}};
    case FamilyKind::HcizExp: return {{"z", z_cap}};
    case FamilyKind::AlphaQ: return {{"q", q_cap}};
    case FamilyKind::Multimonotone: {
        std::vector<SeriesParam> out{{"q", q_cap}};
        for (int a = 1; a <= m; ++a) out.push_back({"w" + std::to_string(a), w_cap});
        return out;
    }
    case FamilyKind::Twist: {
        std::vector<SeriesParam> out;
        for (const auto& [k, v] : twist->caps()) out.push_back({k, v});
        return out;
    }
    }
    return {};
}

OkounkovExponents okounkov_exponents(const Partition& lambda, long N) {
    long n = lambda.size();
    return {N * (N - 1) / 2 + n, N * (N * N - 1) / 6 + N * n + content_sum(lambda)};
}

OkounkovExponents okounkov_exponents_by_product(const Partition& lambda, long N) {
    OkounkovExponents e;
    // rho_j = q^j e^{beta j(j+1)/2}
    if (N > 0)
        for (long j = 0; j < N; ++j) {
            e.q += j;
            e.beta += j * (j + 1) / 2;
        }
    else
        for (long j = N; j < 0; ++j) {
            e.q -= j;
            e.beta -= j * (j + 1) / 2;
        }
    // r_j = q e^{j beta}
    for (int c : contents(lambda)) {
        e.q += 1;
        e.beta += N + c;
    }
    return e;
}

FamilyValue family_coeffs(const Family& f, const Partition& lambda) {
    long n = lambda.size();
    switch (f.kind) {
    case FamilyKind::Vacuum:
        return {TruncSeries(Rational(1)), false};
    case FamilyKind::Okounkov: {
        auto e = okounkov_exponents(lambda, f.N);
        TruncSeries v = scale_monomial("q", Rational(1), e.q, f.q_cap);
        v *= (TruncSeries::variable("beta", f.beta_cap) * Rational(e.beta)).exp().with_param("beta", f.beta_cap);
        return {v, false};
    }
    case FamilyKind::HcizExp: {
        if (lambda.length() > f.N) return {TruncSeries(Rational(0)).with_param("z", f.z_cap), true};
        Rational denom = pochhammer_partition(Rational(f.N), lambda);
        for (long k = 0; k < f.N; ++k) denom *= factorial(static_cast<int>(k));
        return {scale_monomial("z", Rational(-f.N), n, f.z_cap) * denom.inverse(), false};
    }
    case FamilyKind::AlphaQ: {
        if (lambda.length() > f.N) return {TruncSeries(Rational(0)).with_param("q", f.q_cap), true};
        Rational r0(1);
        for (long j = 0; j < f.N; ++j)
            r0 *= rising(Rational(1) - f.alpha, static_cast<int>(j)) / factorial(static_cast<int>(j));
        Rational ratio = pochhammer_partition(Rational(f.N) - f.alpha, lambda) /
                         pochhammer_partition(Rational(f.N), lambda);
        return {scale_monomial("q", Rational(1), f.N * (f.N - 1) / 2 + n, f.q_cap) * (r0 * ratio), false};
    }
    case FamilyKind::Multimonotone: {
        TruncSeries v = scale_monomial("q", Rational(1), n, f.q_cap);
        auto cs = contents(lambda);
        for (int a = 1; a <= f.m; ++a) {
            std::string w = "w" + std::to_string(a);
            TruncSeries prod = TruncSeries(Rational(1)).with_param(w, f.w_cap);
            for (int c : cs)
                if (c != 0) prod *= TruncSeries(Rational(1)) + TruncSeries::variable(w, f.w_cap) * Rational(c);
            v *= prod;
        }
        return {v, false};
    }
    case FamilyKind::Twist:
        return {twist_eigenvalue(*f.twist, lambda), false};
    }
    throw Error(ErrorCode::internal, "unknown family");
}

ConvolutionCoeffs family_convolution(const Family& f) {
    switch (f.kind) {
    case FamilyKind::Okounkov:
        return intertwine(TwistSpec::okounkov(f.q_cap, f.beta_cap));
    case FamilyKind::Multimonotone: {
        std::vector<TwistAtom> atoms{ScaleAtom{"q", Rational(1)}};
        std::map<std::string, int> caps{{"q", f.q_cap}};
        for (int a = 1; a <= f.m; ++a) {
            std::string w = "w" + std::to_string(a);
            atoms.push_back(EAtom{w, std::nullopt});
            caps[w] = f.w_cap;
        }
        return intertwine(TwistSpec(atoms, caps));
    }
    case FamilyKind::Twist:
        return intertwine(*f.twist);
    case FamilyKind::HcizExp: {
        ConvolutionCoeffs c;
        c.scale_param = "z";
        c.scale_factor = Rational(-f.N);
        c.scale_cap = f.z_cap;
        c.rho = [](long j) {
            if (j < 0) return ScaledSeries{0, TruncSeries(Rational(1))};
            return ScaledSeries{j, TruncSeries(factorial(static_cast<int>(j)).inverse())};
        };
        c.r = [](long j) {
            if (j <= 0) return ScaledSeries{0, TruncSeries(Rational(1))};
            return ScaledSeries{1, TruncSeries(Rational(1, j))};
        };
        c.log_rho = [](long) -> std::optional<ScaledSeries> { return std::nullopt; };
        return c;
    }
    case FamilyKind::AlphaQ: {
        ConvolutionCoeffs c;
        c.scale_param = "q";
        c.scale_cap = f.q_cap;
        Rational alpha = f.alpha;
        c.rho = [alpha](long j) {
            if (j <= 0) return ScaledSeries{0, TruncSeries(Rational(1))};
            int ji = static_cast<int>(j);
            return ScaledSeries{j, TruncSeries(rising(Rational(1) - alpha, ji) / factorial(ji))};
        };
        c.r = [alpha](long j) {
            if (j <= 0) return ScaledSeries{0, TruncSeries(Rational(1))};
            return ScaledSeries{1, TruncSeries((Rational(j) - alpha) / Rational(j))};
        };
        c.log_rho = [](long) -> std::optional<ScaledSeries> { return std::nullopt; };
        return c;
    }
    case FamilyKind::Vacuum: {
        ConvolutionCoeffs c;
        c.rho = [](long) { return ScaledSeries{0, TruncSeries(Rational(1))}; };
        c.r = c.rho;
        c.log_rho = [](long) -> std::optional<ScaledSeries> { return ScaledSeries{0, TruncSeries(Rational(0))}; };
        return c;
    }
    }
    throw Error(ErrorCode::internal, "unknown family");
}

Rational multimonotone_z_coefficient(const Rational& s, const std::vector<Rational>& u, const Partition& lambda) {
    Rational v = s.pow(lambda.size());
    auto cs = contents(lambda);
    for (const auto& ua : u)
        for (int c : cs) v *= ua - Rational(c);
    return v;
}

MultimonotoneParams multimonotone_reparam(const Rational& s, const std::vector<Rational>& u, bool signed_by_m) {
    MultimonotoneParams p;
    p.q = s;
    for (const auto& ua : u) {
        if (ua.is_zero()) throw ArgumentError("multimonotone: u_a must be nonzero");
        p.q *= ua;
        p.w.push_back(-ua.inverse());
    }
    if (signed_by_m && u.size() % 2 == 1) p.q = -p.q;
    return p;
}

} // namespace hurwitz
