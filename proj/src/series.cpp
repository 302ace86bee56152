#include "hurwitz/series.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "hurwitz/error.hpp"

namespace hurwitz {

TruncSeries::TruncSeries(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

TruncSeries TruncSeries::variable(std::string name, int cap) {
    if (cap < 0) throw ArgumentError("series cap must be nonnegative");
    TruncSeries s;
    s.params_.push_back({std::move(name), cap});
    if (cap >= 1) s.terms_.emplace(Exponents{1}, Rational(1));
    return s;
}

TruncSeries TruncSeries::monomial(const Rational& coeff, const Monomial& exps,
                                  std::vector<SeriesParam> params) {
    std::sort(params.begin(), params.end(),
              [](const SeriesParam& a, const SeriesParam& b) { return a.name < b.name; });
    for (std::size_t i = 1; i < params.size(); ++i)
        if (params[i].name == params[i - 1].name)
            throw ArgumentError("duplicate series parameter '" + params[i].name + "'");
    TruncSeries s;
    s.params_ = std::move(params);
    Exponents e(s.params_.size(), 0);
    for (const auto& [name, exp] : exps) {
        auto it = std::find_if(s.params_.begin(), s.params_.end(),
                               [&](const SeriesParam& p) { return p.name == name; });
        if (it == s.params_.end()) throw ArgumentError("monomial uses unknown parameter '" + name + "'");
        if (exp < 0) throw ArgumentError("negative exponent in series monomial");
        e[it - s.params_.begin()] += exp;
    }
    s.insert(e, coeff);
    return s;
}

bool TruncSeries::has_param(std::string_view name) const {
    return std::any_of(params_.begin(), params_.end(), [&](const SeriesParam& p) { return p.name == name; });
}

int TruncSeries::cap(std::string_view name) const {
    for (const auto& p : params_)
        if (p.name == name) return p.cap;
    throw ArgumentError("series has no parameter '" + std::string(name) + "'");
}

bool TruncSeries::within_caps(const Exponents& e) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > params_[i].cap) return false;
    return true;
}

void TruncSeries::insert(const Exponents& e, const Rational& c) {
    if (c.is_zero() || !within_caps(e)) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::vector<SeriesParam> TruncSeries::merge_params(const std::vector<SeriesParam>& a,
                                                   const std::vector<SeriesParam>& b) {
    std::vector<SeriesParam> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].name < b[j].name)) out.push_back(a[i++]);
        else if (i == a.size() || b[j].name < a[i].name) out.push_back(b[j++]);
        else {
            out.push_back({a[i].name, std::min(a[i].cap, b[j].cap)});
            ++i, ++j;
        }
    }
    return out;
}

TruncSeries TruncSeries::reparam(const std::vector<SeriesParam>& target) const {
    if (target == params_) return *this;
    TruncSeries out;
    out.params_ = target;
    std::vector<std::size_t> where(params_.size());
    for (std::size_t i = 0; i < params_.size(); ++i) {
        auto it = std::find_if(target.begin(), target.end(),
                               [&](const SeriesParam& p) { return p.name == params_[i].name; });
        if (it == target.end()) throw ArgumentError("reparam: lost parameter " + params_[i].name);
        where[i] = static_cast<std::size_t>(it - target.begin());
    }
    for (const auto& [e, c] : terms_) {
        Exponents ne(target.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
        out.insert(ne, c);
    }
    return out;
}

TruncSeries TruncSeries::with_param(const std::string& name, int cap) const {
    return reparam(merge_params(params_, {{name, cap}}));
}

TruncSeries TruncSeries::truncated(std::string_view name, int cap) const {
    if (!has_param(name)) return *this;
    return with_param(std::string(name), cap);
}

Rational TruncSeries::coefficient(const Monomial& exps) const {
    Exponents e(params_.size(), 0);
    for (const auto& [name, exp] : exps) {
        auto it = std::find_if(params_.begin(), params_.end(),
                               [&](const SeriesParam& p) { return p.name == name; });
        if (it == params_.end()) {
            if (exp == 0) continue;
            return Rational(0);
        }
        e[it - params_.begin()] += exp;
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncSeries::constant_term() const {
    auto it = terms_.find(Exponents(params_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

bool TruncSeries::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && !constant_term().is_zero());
}

int TruncSeries::valuation(std::string_view name) const {
    if (terms_.empty()) return -1;
    std::size_t idx = params_.size();
    for (std::size_t i = 0; i < params_.size(); ++i)
        if (params_[i].name == name) idx = i;
    if (idx == params_.size()) return 0;
    int v = std::numeric_limits<int>::max();
    for (const auto& [e, c] : terms_) v = std::min(v, e[idx]);
    return v;
}

int TruncSeries::total_valuation() const {
    if (terms_.empty()) return -1;
    int v = std::numeric_limits<int>::max();
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int x : e) d += x;
        v = std::min(v, d);
    }
    return v;
}

int TruncSeries::max_total_degree() const {
    int d = 0;
    for (const auto& p : params_) d += p.cap;
    return d;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (&o == this) return *this *= Rational(2);
    auto merged = merge_params(params_, o.params_);
    if (merged != params_) *this = reparam(merged);
    if (o.params_ == merged) {
        for (const auto& [e, c] : o.terms_) insert(e, c);
    } else {
        auto tmp = o.reparam(merged);
        for (const auto& [e, c] : tmp.terms_) insert(e, c);
    }
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) { return *this += -o; }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    auto merged = TruncSeries::merge_params(a.params_, b.params_);
    TruncSeries x = a.reparam(merged), y = b.reparam(merged);
    TruncSeries out;
    out.params_ = merged;
    TruncSeries::Exponents e(merged.size());
    for (const auto& [ea, ca] : x.terms_)
        for (const auto& [eb, cb] : y.terms_) {
            bool ok = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > merged[i].cap) { ok = false; break; }
            }
            if (ok) out.insert(e, ca * cb);
        }
    return out;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& o) { return *this = *this * o; }

TruncSeries& TruncSeries::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    // Compare as polynomials: lift both to the union of parameters with the
    // larger cap so nothing is dropped.
    std::vector<SeriesParam> merged;
    std::size_t i = 0, j = 0;
    const auto& pa = a.params_;
    const auto& pb = b.params_;
    while (i < pa.size() || j < pb.size()) {
        if (j == pb.size() || (i < pa.size() && pa[i].name < pb[j].name)) merged.push_back(pa[i++]);
        else if (i == pa.size() || pb[j].name < pa[i].name) merged.push_back(pb[j++]);
        else {
            merged.push_back({pa[i].name, std::max(pa[i].cap, pb[j].cap)});
            ++i, ++j;
        }
    }
    return a.reparam(merged).terms_ == b.reparam(merged).terms_;
}

TruncSeries TruncSeries::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    TruncSeries r = *this;
    r.terms_.clear();
    r.insert(Exponents(params_.size(), 0), Rational(1));
    TruncSeries base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

TruncSeries TruncSeries::inverse() const {
    Rational c0 = constant_term();
    if (c0.is_zero()) throw ArgumentError("series inverse: zero constant term");
    // 1/(c0 (1 + u)) = (1/c0) sum_k (-u)^k; u^k vanishes past the total cap.
    TruncSeries u = *this * c0.inverse() - TruncSeries(Rational(1));
    TruncSeries neg_u = -u;
    TruncSeries result = TruncSeries(Rational(1)).reparam(params_);
    TruncSeries power = result;
    for (int k = 1; k <= max_total_degree(); ++k) {
        power *= neg_u;
        if (power.is_zero()) break;
        result += power;
    }
    return result * c0.inverse();
}

TruncSeries TruncSeries::shift_down(std::string_view name, int v) const {
    if (v == 0 || is_zero()) return *this;
    std::size_t idx = params_.size();
    for (std::size_t i = 0; i < params_.size(); ++i)
        if (params_[i].name == name) idx = i;
    if (idx == params_.size())
        throw ConsistencyError("shift_down: series is not divisible by " + std::string(name));
    if (params_[idx].cap < v)
        throw ArgumentError("shift_down: precision of " + std::string(name) + " exhausted");
    TruncSeries out;
    out.params_ = params_;
    out.params_[idx].cap -= v;
    for (const auto& [e, c] : terms_) {
        if (e[idx] < v)
            throw ConsistencyError("exact division by " + std::string(name) + "^" + std::to_string(v) +
                                   " left a nonzero remainder");
        Exponents ne = e;
        ne[idx] -= v;
        out.insert(ne, c);
    }
    return out;
}

TruncSeries TruncSeries::divide_exact(const TruncSeries& b) const {
    if (b.is_zero()) throw ArgumentError("divide_exact: division by zero series");
    if (!b.constant_term().is_zero()) return *this * b.inverse();
    std::set<std::size_t> used;
    for (const auto& [e, c] : b.terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) used.insert(i);
    if (used.size() != 1)
        throw ArgumentError("divide_exact: non-unit multivariate divisor is not supported");
    const std::string& x = b.params_[*used.begin()].name;
    int v = b.valuation(x);
    return shift_down(x, v) * b.shift_down(x, v).inverse();
}

TruncSeries TruncSeries::exp() const {
    if (!constant_term().is_zero()) throw ArgumentError("series exp: constant term must be zero");
    TruncSeries result = TruncSeries(Rational(1)).reparam(params_);
    TruncSeries power = result;
    for (int k = 1; k <= max_total_degree(); ++k) {
        power = power * *this * Rational(1, k);
        if (power.is_zero()) break;
        result += power;
    }
    return result;
}

TruncSeries TruncSeries::log() const {
    if (constant_term() != Rational(1)) throw ArgumentError("series log: constant term must be 1");
    TruncSeries u = *this - TruncSeries(Rational(1));
    TruncSeries result = TruncSeries(Rational(0)).reparam(params_);
    TruncSeries power = TruncSeries(Rational(1)).reparam(params_);
    for (int k = 1; k <= max_total_degree(); ++k) {
        power *= u;
        if (power.is_zero()) break;
        result += power * Rational(k % 2 ? 1 : -1, k);
    }
    return result;
}

std::vector<std::pair<std::string, std::string>> TruncSeries::to_strings() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [e, c] : terms_) {
        std::string key;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!key.empty()) key += '*';
            key += params_[i].name + "^" + std::to_string(e[i]);
        }
        if (key.empty()) key = "1";
        out.emplace_back(std::move(key), c.str());
    }
    return out;
}

std::string TruncSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : to_strings()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v << ")";
        if (k != "1") os << "*" << k;
    }
    return os.str();
}

TruncSeries geometric(const Rational& c, const std::string& name, int cap) {
    TruncSeries s = TruncSeries(Rational(1)).with_param(name, cap);
    Rational ck(1);
    for (int k = 1; k <= cap; ++k) {
        ck *= c;
        s += TruncSeries::monomial(ck, {{name, k}}, {{name, cap}});
    }
    return s;
}

Rational substitute(const TruncSeries& f, const std::map<std::string, Rational>& values) {
    std::vector<Rational> v;
    for (const auto& p : f.params()) {
        auto it = values.find(p.name);
        if (it == values.end()) throw ArgumentError("substitute: no value for '" + p.name + "'");
        v.push_back(it->second);
    }
    Rational sum(0);
    for (const auto& [e, c] : f.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= v[i].pow(e[i]);
        sum += t;
    }
    return sum;
}

} // namespace hurwitz
