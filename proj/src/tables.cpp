#include "hurwitz/tables.hpp"

#include <algorithm>
#include <functional>

#include "hurwitz/characters.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/tau.hpp"

namespace hurwitz {

namespace {

using Steps = std::vector<std::pair<std::string, int>>;

// All step tuples with the given keys and total <= max, lexicographic.
std::vector<std::vector<int>> compositions_up_to(int parts, int max) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == parts) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, max);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int sa = 0, sb = 0;
        for (int x : a) sa += x;
        for (int x : b) sb += x;
        return sa < sb;
    });
    return out;
}

struct StepPlan {
    Steps steps;
    TruncSeries::Monomial monomial;
    Rational factor{1};
};

std::vector<StepPlan> step_plans(const TableSpec& spec) {
    std::vector<StepPlan> plans;
    switch (spec.kind) {
    case TableKind::Plain:
        for (int b = 0; b <= spec.step_max; ++b) plans.push_back({{{"b", b}}, {{"beta", b}}, factorial(b)});
        break;
    case TableKind::Monotone:
        for (int k = 0; k <= spec.step_max; ++k) plans.push_back({{{"k", k}}, {{"z", k}}, Rational(1)});
        break;
    case TableKind::Strict:
        for (int k = 0; k <= spec.step_max; ++k) plans.push_back({{{"k", k}}, {{"w", k}}, Rational(1)});
        break;
    case TableKind::WeakStrict:
        for (const auto& c : compositions_up_to(2, spec.step_max))
            plans.push_back({{{"k", c[0]}, {"l", c[1]}}, {{"w", c[1]}, {"z", c[0]}}, Rational(1)});
        break;
    case TableKind::Mixed:
        for (int k = 0; k <= spec.step_max; ++k)
            for (int p = 0; p <= k; ++p)
                plans.push_back({{{"p", p}, {"k", k}}, {{"beta", k - p}, {"z", p}}, factorial(k - p)});
        break;
    case TableKind::Multi:
        for (const auto& c : compositions_up_to(spec.segments, spec.step_max)) {
            StepPlan plan;
            for (int a = 0; a < spec.segments; ++a) {
                std::string key = std::to_string(a + 1);
                plan.steps.push_back({"d" + key, c[a]});
                plan.monomial.push_back({"w" + key, c[a]});
            }
            plans.push_back(plan);
        }
        break;
    }
    return plans;
}

} // namespace

TableKind parse_table_kind(std::string_view name) {
    if (name == "plain" || name == "okounkov") return TableKind::Plain;
    if (name == "monotone" || name == "hciz") return TableKind::Monotone;
    if (name == "strict") return TableKind::Strict;
    if (name == "weak-strict" || name == "alpha_q") return TableKind::WeakStrict;
    if (name == "mixed") return TableKind::Mixed;
    if (name == "multi" || name == "multimonotone") return TableKind::Multi;
    throw ArgumentError("unknown table kind '" + std::string(name) + "'");
}

std::string table_kind_name(TableKind kind) {
    switch (kind) {
    case TableKind::Plain: return "plain";
    case TableKind::Monotone: return "monotone";
    case TableKind::Strict: return "strict";
    case TableKind::WeakStrict: return "weak-strict";
    case TableKind::Mixed: return "mixed";
    case TableKind::Multi: return "multi";
    }
    return "";
}

TwistSpec table_twist(const TableSpec& spec) {
    int c = spec.step_max;
    switch (spec.kind) {
    case TableKind::Plain: return TwistSpec::plain(c);
    case TableKind::Monotone: return TwistSpec::monotone(c);
    case TableKind::Strict: return TwistSpec::strict(c);
    case TableKind::WeakStrict: return TwistSpec({HAtom{"z", {}}, EAtom{"w", {}}}, {{"z", c}, {"w", c}});
    case TableKind::Mixed: return TwistSpec({HAtom{"z", {}}, ExpAtom{"", "beta"}}, {{"z", c}, {"beta", c}});
    case TableKind::Multi: {
        if (spec.segments < 1) throw ArgumentError("multi table needs at least one segment");
        std::vector<TwistAtom> atoms;
        std::map<std::string, int> caps;
        for (int a = 1; a <= spec.segments; ++a) {
            std::string w = "w" + std::to_string(a);
            atoms.push_back(EAtom{w, {}});
            caps[w] = c;
        }
        return TwistSpec(atoms, caps);
    }
    }
    throw Error(ErrorCode::internal, "unknown table kind");
}

WalkConstraint row_constraint(TableKind kind, const Steps& steps) {
    auto get = [&](const std::string& key) {
        for (const auto& [k, v] : steps)
            if (k == key) return v;
        throw ArgumentError("row has no step '" + key + "'");
    };
    switch (kind) {
    case TableKind::Plain: return WalkConstraint::plain(get("b"));
    case TableKind::Monotone: return WalkConstraint::weakly_monotone(get("k"));
    case TableKind::Strict: return WalkConstraint::strictly_monotone(get("k"));
    case TableKind::WeakStrict: return WalkConstraint::weak_then_strict(get("k"), get("l"));
    case TableKind::Mixed: return WalkConstraint::mixed(get("p"), get("k"));
    case TableKind::Multi: {
        std::vector<int> d;
        for (const auto& [k, v] : steps) d.push_back(v);
        return WalkConstraint::multi_monotone(d);
    }
    }
    throw Error(ErrorCode::internal, "unknown table kind");
}

std::vector<TableRow> hurwitz_table(const TableSpec& spec) {
    if (spec.n_max < 1) throw ArgumentError("table: n_max must be at least 1");
    if (spec.step_max < 0) throw ArgumentError("table: negative step cap");
    if (spec.n_max > kDefaultTauCap)
        throw SizeLimitError("table: n_max " + std::to_string(spec.n_max) + " exceeds " + std::to_string(kDefaultTauCap));
    TwistSpec twist = table_twist(spec);
    auto plans = step_plans(spec);
    TensorSymFunc connected;
    if (spec.connected) connected = log_tau(build_tau(Family::from_twist(twist), spec.n_max));
    std::vector<TableRow> rows;
    for (int n = 1; n <= spec.n_max; ++n) {
        auto order = partitions_of(n);
        auto table = character_table(n);
        ConnectionMatrix g;
        if (!spec.connected) g = connection_coeffs(twist, n);
        for (std::size_t l = 0; l < order.size(); ++l)
            for (std::size_t m = 0; m < order.size(); ++m) {
                TruncSeries series = spec.connected ? connected.coefficient(order[l], order[m]) * table->z(m) : g(l, m);
                for (const auto& plan : plans) {
                    TableRow row;
                    row.n = n;
                    row.from = order[l];
                    row.to = order[m];
                    row.steps = plan.steps;
                    row.count = series.coefficient(plan.monomial) * plan.factor;
                    row.connected = spec.connected;
                    if (!row.count.is_integer())
                        throw ConsistencyError("table: non-integer count " + row.count.str() + " at n = " +
                                               std::to_string(n) + " (" + row.from.str() + ") -> (" + row.to.str() + ")");
                    rows.push_back(std::move(row));
                }
            }
    }
    return rows;
}

} // namespace hurwitz
