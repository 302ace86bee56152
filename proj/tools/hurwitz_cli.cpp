#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "hurwitz/hurwitz.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Context {
    hw_context* ctx = nullptr;
    Context() {
        if (hw_context_create(&ctx) != HW_OK) throw std::runtime_error("cannot create context");
    }
    ~Context() { hw_context_destroy(ctx); }
};

struct Owned {
    char* p = nullptr;
    ~Owned() { hw_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

int report(const Context& c, hw_status s) {
    std::cerr << "hurwitz: " << hw_last_error(c.ctx) << '\n';
    switch (s) {
    case HW_ERR_ARGUMENT:
    case HW_ERR_PARSE:
    case HW_ERR_SIZE_LIMIT:
        return kExitUsage;
    default:
        return kExitFailure;
    }
}

int emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "hurwitz: cannot write " << path << '\n';
        return kExitFailure;
    }
    return 0;
}

std::string with_newline(std::string s) {
    if (s.empty() || s.back() != '\n') s += '\n';
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Jucys-Murphy twists, content-product tau coefficients and Cayley-graph walk counts"};
    app.require_subcommand(1);

    std::string output;

    auto* verify = app.add_subcommand("verify", "Run identity verification suites");
    std::string suite = "all";
    int v_nmax = 0, v_N = 2, v_cap = 6;
    std::uint64_t seed = 1;
    verify->add_option("suite", suite, "characters|center|walks|tau|all")
        ->check(CLI::IsMember({"characters", "center", "walks", "tau", "all"}));
    verify->add_option("--nmax", v_nmax, "Size cap (0: suite default)");
    verify->add_option("--N", v_N, "Matrix size for determinant checks");
    verify->add_option("--cap", v_cap, "Series cap for z, beta, w");
    verify->add_option("--seed", seed, "Seed for random rational points");

    auto* table = app.add_subcommand("table", "Generating-function tables");
    std::string t_family = "plain", t_format = "csv";
    int t_nmax = 4, t_steps = 4, t_segments = 2;
    bool t_connected = false;
    table->add_option("--family", t_family, "plain|okounkov|monotone|hciz|strict|weak-strict|mixed|multi");
    table->add_option("--nmax", t_nmax, "Largest n");
    table->add_option("--bmax,--kmax,--dmax,--stepmax", t_steps, "Largest total number of steps");
    table->add_option("--segments", t_segments, "Number of strictly monotone segments (multi)");
    table->add_flag("--connected", t_connected, "Connected counts from log tau");
    table->add_option("--format", t_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    table->add_option("--output,-o", output, "Write to a file");

    auto* walks = app.add_subcommand("walks", "Count constrained walks in the Cayley graph of S_n");
    int w_n = 0, w_steps = 0, w_p = 0;
    std::string w_from, w_to, w_kind = "plain", w_segments;
    bool w_transitive = false;
    walks->add_option("--n", w_n, "Degree")->required();
    walks->add_option("--from", w_from, "Cycle type of the start")->required();
    walks->add_option("--to", w_to, "Cycle type of the end")->required();
    walks->add_option("--kind", w_kind, "plain|monotone|strict|mixed|multi")
        ->check(CLI::IsMember({"plain", "monotone", "strict", "mixed", "multi"}));
    walks->add_option("--steps", w_steps, "Number of steps");
    walks->add_option("--p", w_p, "Weakly monotone steps (mixed)");
    walks->add_option("--segments", w_segments, "Strict segment lengths, e.g. 2,1 (multi)");
    walks->add_flag("--transitive", w_transitive, "Count only transitive walks");

    auto* tau = app.add_subcommand("tau", "Build and evaluate a hypergeometric tau function");
    std::string f_name = "hciz", f_a, f_b, f_alpha = "1/2";
    int f_N = 1, f_zcap = 6, f_nmax = -1, f_m = 2;
    bool f_check = false, f_log = false, f_coeffs = false;
    tau->add_option("--family", f_name, "vacuum|okounkov|hciz|alpha_q|multimonotone|plain|monotone|strict");
    tau->add_option("--N", f_N, "Shift N");
    tau->add_option("--a", f_a, "x point, comma-separated rationals");
    tau->add_option("--b", f_b, "y point, comma-separated rationals");
    tau->add_option("--zcap,--cap", f_zcap, "Series cap");
    tau->add_option("--nmax", f_nmax, "Largest |lambda| (default: the cap)");
    tau->add_option("--alpha", f_alpha, "alpha (alpha_q)");
    tau->add_option("--m", f_m, "Number of w parameters (multimonotone)");
    tau->add_flag("--check-determinant", f_check, "Compare with the HCIZ determinant (hciz only)");
    tau->add_flag("--log", f_log, "Print log tau coefficients");
    tau->add_flag("--coefficients", f_coeffs, "Print both coefficient expansions");

    auto* gmatrix = app.add_subcommand("gmatrix", "Twisted connection coefficients");
    int g_n = 0, g_cap = 6;
    std::string g_twist = "monotone";
    gmatrix->add_option("--n", g_n, "Degree")->required();
    gmatrix->add_option("--twist", g_twist, "plain|monotone|strict|weak-strict|mixed|multi");
    gmatrix->add_option("--cap", g_cap, "Series cap");

    auto* chartable = app.add_subcommand("chartable", "Character table of S_n");
    int c_n = 0;
    chartable->add_option("--n", c_n, "Degree")->required();

    auto* aq = app.add_subcommand("alpha-q-report", "Compare the two readings of the alpha_q determinant");
    aq->add_option("--output,-o", output, "Write to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    Context c;
    Owned out, extra;
    hw_status s = HW_OK;

    if (*verify) {
        int passed = 0;
        s = hw_verify(c.ctx, suite.c_str(), v_nmax, v_N, v_cap, seed, &passed, &out.p, &extra.p);
        if (s != HW_OK) return report(c, s);
        std::cout << out.str();
        std::cerr << extra.str();
        std::cout << (passed ? "all checks passed\n" : "verification failed\n");
        return passed ? 0 : kExitFailure;
    }
    if (*table) {
        s = hw_table(c.ctx, t_family.c_str(), t_nmax, t_steps, t_segments, t_connected ? 1 : 0, t_format.c_str(), &out.p);
        if (s != HW_OK) return report(c, s);
        return emit(out.str(), output);
    }
    if (*walks) {
        s = hw_walks(c.ctx, w_n, w_from.c_str(), w_to.c_str(), w_kind.c_str(), w_steps, w_p, w_segments.c_str(),
                     w_transitive ? 1 : 0, &out.p, &extra.p);
        if (s != HW_OK) return report(c, s);
        std::cout << out.str() << '\n' << with_newline(extra.str());
        return 0;
    }
    if (*tau) {
        int n_max = f_nmax >= 0 ? f_nmax : f_zcap;
        hw_tau* t = nullptr;
        s = hw_tau_build(c.ctx, f_name.c_str(), f_N, f_alpha.c_str(), f_m, f_zcap, n_max, &t);
        if (s != HW_OK) return report(c, s);
        std::unique_ptr<hw_tau, void (*)(hw_tau*)> guard(t, hw_tau_destroy);
        if (f_coeffs) {
            Owned j;
            if ((s = hw_tau_coefficients(c.ctx, t, &j.p)) != HW_OK) return report(c, s);
            std::cout << with_newline(j.str());
        }
        if (f_log) {
            Owned j;
            if ((s = hw_tau_log(c.ctx, t, &j.p)) != HW_OK) return report(c, s);
            std::cout << with_newline(j.str());
        }
        if (!f_a.empty() || !f_b.empty()) {
            if ((s = hw_tau_eval(c.ctx, t, f_a.c_str(), f_b.c_str(), &out.p)) != HW_OK) return report(c, s);
            std::cout << "{\"schur_side\":" << out.str();
            if (f_check) {
                if (f_name != "hciz") {
                    std::cerr << "hurwitz: --check-determinant needs --family hciz\n";
                    return kExitUsage;
                }
                if ((s = hw_hciz_determinant(c.ctx, f_N, f_a.c_str(), f_b.c_str(), f_zcap, &extra.p)) != HW_OK)
                    return report(c, s);
                bool same = out.str() == extra.str();
                std::cout << ",\"determinant\":" << extra.str() << ",\"match\":" << (same ? "true" : "false") << "}\n";
                return same ? 0 : kExitFailure;
            }
            std::cout << "}\n";
        } else if (f_check) {
            std::cerr << "hurwitz: --check-determinant needs --a and --b\n";
            return kExitUsage;
        }
        return 0;
    }
    if (*gmatrix) {
        s = hw_gmatrix(c.ctx, g_n, g_twist.c_str(), g_cap, &out.p);
        if (s != HW_OK) return report(c, s);
        std::cout << with_newline(out.str());
        return 0;
    }
    if (*chartable) {
        s = hw_chartable(c.ctx, c_n, &out.p);
        if (s != HW_OK) return report(c, s);
        std::cout << with_newline(out.str());
        return 0;
    }
    if (*aq) {
        s = hw_alpha_q_report(c.ctx, &out.p);
        if (s != HW_OK) return report(c, s);
        return emit(out.str(), output);
    }
    return kExitUsage;
}
