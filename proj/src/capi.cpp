#include "hurwitz/hurwitz.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hurwitz/characters.hpp"
#include "hurwitz/convolution.hpp"
#include "hurwitz/determinant.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/serialize.hpp"
#include "hurwitz/tables.hpp"
#include "hurwitz/tau.hpp"
#include "hurwitz/verify.hpp"
#include "hurwitz/walks.hpp"

struct hw_context {
    std::string last_error;
};

struct hw_tau {
    hurwitz::TauSeries tau;
};

namespace {

using namespace hurwitz;
using ordered_json = nlohmann::ordered_json;

hw_status guarded(hw_context* ctx, const std::function<void()>& body) {
    if (!ctx) return HW_ERR_ARGUMENT;
    ctx->last_error.clear();
    try {
        body();
        return HW_OK;
    } catch (const Error& e) {
        ctx->last_error = e.what();
        return static_cast<hw_status>(e.code());
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return HW_ERR_INTERNAL;
    } catch (...) {
        ctx->last_error = "unknown failure";
        return HW_ERR_INTERNAL;
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void need(const void* p, const char* what) {
    if (!p) throw ArgumentError(std::string(what) + " is null");
}

std::vector<Rational> rationals(const char* text) {
    need(text, "rational list");
    std::vector<Rational> out;
    std::string s(text);
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    return out;
}

std::vector<int> integers(const char* text) {
    std::vector<int> out;
    for (const auto& r : rationals(text)) {
        if (!r.is_integer() || r < Rational(0)) throw ArgumentError("expected non-negative integers, got '" + std::string(text) + "'");
        out.push_back(static_cast<int>(r.to_int64()));
    }
    return out;
}

ordered_json tensor_json(const TensorSymFunc& f) {
    ordered_json terms = ordered_json::array();
    for (const auto& [key, c] : f.terms) {
        if (c.is_zero()) continue;
        terms.push_back({{"x", key.first.str()}, {"y", key.second.str()}, {"series", ordered_json::parse(series_json(c))}});
    }
    return terms;
}

Family family_by_name(const std::string& name, int N, const char* alpha, int m, int cap) {
    if (name == "vacuum") return Family::vacuum();
    if (name == "okounkov") return Family::okounkov(cap, N);
    if (name == "hciz") return Family::hciz_exp(N, cap);
    if (name == "alpha_q") {
        need(alpha, "alpha");
        return Family::alpha_q(Rational::parse(alpha), N);
    }
    if (name == "multimonotone") return Family::multimonotone(m, cap);
    if (name == "plain") return Family::from_twist(TwistSpec::plain(cap));
    if (name == "monotone") return Family::from_twist(TwistSpec::monotone(cap));
    if (name == "strict") return Family::from_twist(TwistSpec::strict(cap));
    throw ArgumentError("unknown family '" + name + "'");
}

} // namespace

extern "C" {

hw_status hw_context_create(hw_context** out) {
    if (!out) return HW_ERR_ARGUMENT;
    *out = new (std::nothrow) hw_context();
    return *out ? HW_OK : HW_ERR_INTERNAL;
}

void hw_context_destroy(hw_context* ctx) { delete ctx; }

const char* hw_last_error(const hw_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

void hw_string_free(char* s) { std::free(s); }

hw_status hw_chartable(hw_context* ctx, int n, char** out_json) {
    return guarded(ctx, [&] {
        need(out_json, "out_json");
        if (n < 1) throw ArgumentError("n must be positive");
        *out_json = dup(chartable_json(*character_table(n)));
    });
}

hw_status hw_walks(hw_context* ctx, int n, const char* from, const char* to, const char* kind, int steps, int p,
                   const char* segments, int transitive, char** out_count, char** out_json) {
    return guarded(ctx, [&] {
        need(from, "from");
        need(to, "to");
        need(kind, "kind");
        need(out_count, "out_count");
        need(out_json, "out_json");
        std::string k(kind);
        if (steps < 0 || p < 0) throw ArgumentError("step counts must be non-negative");
        WalkConstraint c = WalkConstraint::plain(0);
        if (k == "plain") c = WalkConstraint::plain(steps);
        else if (k == "monotone") c = WalkConstraint::weakly_monotone(steps);
        else if (k == "strict") c = WalkConstraint::strictly_monotone(steps);
        else if (k == "mixed") {
            if (p > steps) throw ArgumentError("--p exceeds --steps");
            c = WalkConstraint::mixed(p, steps);
        } else if (k == "multi") c = WalkConstraint::multi_monotone(integers(segments ? segments : ""));
        else throw ArgumentError("unknown walk kind '" + k + "'");
        WalkQuery q{n, Partition::parse(from), Partition::parse(to), c, transitive != 0};
        Rational count = count_walks(q);
        std::string j = walk_json(q, k, count);
        *out_count = dup(count.str());
        *out_json = dup(j);
    });
}

hw_status hw_gmatrix(hw_context* ctx, int n, const char* twist, int cap, char** out_json) {
    return guarded(ctx, [&] {
        need(twist, "twist");
        need(out_json, "out_json");
        if (n < 1 || cap < 0) throw ArgumentError("n must be positive and cap non-negative");
        TwistSpec t = table_twist({parse_table_kind(twist), n, cap, 2, false});
        *out_json = dup(gmatrix_json(connection_coeffs(t, n), t.label()));
    });
}

hw_status hw_tau_build(hw_context* ctx, const char* family, int N, const char* alpha, int m, int cap, int n_max,
                       hw_tau** out) {
    return guarded(ctx, [&] {
        need(family, "family");
        need(out, "out");
        if (cap < 0 || n_max < 0) throw ArgumentError("caps must be non-negative");
        auto t = std::make_unique<hw_tau>();
        t->tau = build_tau(family_by_name(family, N, alpha, m, cap), n_max);
        *out = t.release();
    });
}

void hw_tau_destroy(hw_tau* t) { delete t; }

hw_status hw_tau_eval(hw_context* ctx, const hw_tau* t, const char* a, const char* b, char** out_json) {
    return guarded(ctx, [&] {
        need(t, "tau");
        need(out_json, "out_json");
        *out_json = dup(series_json(tau_eval(t->tau, rationals(a), rationals(b))));
    });
}

hw_status hw_tau_log(hw_context* ctx, const hw_tau* t, char** out_json) {
    return guarded(ctx, [&] {
        need(t, "tau");
        need(out_json, "out_json");
        ordered_json j{{"family", t->tau.family.name()}, {"n_max", t->tau.n_max}, {"terms", tensor_json(log_tau(t->tau))}};
        *out_json = dup(j.dump());
    });
}

hw_status hw_tau_coefficients(hw_context* ctx, const hw_tau* t, char** out_json) {
    return guarded(ctx, [&] {
        need(t, "tau");
        need(out_json, "out_json");
        ordered_json coeffs = ordered_json::array();
        for (const auto& level : t->tau.schur)
            for (const auto& [l, r] : level)
                coeffs.push_back({{"lambda", l.str()}, {"r", ordered_json::parse(series_json(r))}});
        ordered_json j{{"family", t->tau.family.name()},
                       {"n_max", t->tau.n_max},
                       {"coefficients", coeffs},
                       {"powersum", tensor_json(t->tau.powersum)}};
        *out_json = dup(j.dump());
    });
}

hw_status hw_hciz_determinant(hw_context* ctx, int N, const char* a, const char* b, int z_cap, char** out_json) {
    return guarded(ctx, [&] {
        need(out_json, "out_json");
        *out_json = dup(series_json(hciz_determinant(N, rationals(a), rationals(b), z_cap)));
    });
}

hw_status hw_table(hw_context* ctx, const char* family, int n_max, int step_max, int segments, int connected,
                   const char* format, char** out) {
    return guarded(ctx, [&] {
        need(family, "family");
        need(format, "format");
        need(out, "out");
        std::string fmt(format);
        if (fmt != "json" && fmt != "csv") throw ArgumentError("format must be json or csv");
        if (n_max < 1 || step_max < 0 || segments < 1) throw ArgumentError("invalid table caps");
        auto rows = hurwitz_table({parse_table_kind(family), n_max, step_max, segments, connected != 0});
        *out = dup(fmt == "json" ? table_json(rows) : table_csv(rows));
    });
}

hw_status hw_verify(hw_context* ctx, const char* suite, int n_max, int N, int cap, uint64_t seed, int* passed,
                    char** out_report, char** out_timing) {
    return guarded(ctx, [&] {
        need(suite, "suite");
        need(passed, "passed");
        need(out_report, "out_report");
        need(out_timing, "out_timing");
        if (n_max < 0 || N < 1 || cap < 1) throw ArgumentError("invalid verify caps");
        VerifyConfig config{n_max, N, cap, seed};
        auto results = run_suite(suite, config);
        std::ostringstream report, timing;
        bool ok = true;
        for (const auto& r : results) {
            ok = ok && r.passed;
            report << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name << ": " << r.detail << '\n';
            timing << r.suite << '/' << r.name << ' ' << r.seconds << "s\n";
        }
        *passed = ok ? 1 : 0;
        *out_report = dup(report.str());
        *out_timing = dup(timing.str());
    });
}

hw_status hw_alpha_q_report(hw_context* ctx, char** out_markdown) {
    return guarded(ctx, [&] {
        need(out_markdown, "out_markdown");
        *out_markdown = dup(alpha_q_report_markdown(default_alpha_q_cases()));
    });
}

} // extern "C"
