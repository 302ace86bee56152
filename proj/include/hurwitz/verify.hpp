#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hurwitz {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    /// First counterexample (or error message) when failed; short summary otherwise.
    std::string detail;
    double seconds = 0;
};

struct VerifyConfig {
    int n_max = 0;          ///< 0: use the suite default (6 characters/center, 5 walks, 4 tau)
    int N = 2;              ///< largest matrix size for determinant checks
    int series_cap = 6;     ///< z, beta, w caps
    std::uint64_t seed = 1; ///< seeded random rational points
};

/// Runs fn, catching check failures and library errors, and times it.
CheckResult run_check(const std::string& suite, const std::string& name, const std::function<std::string()>& fn);

namespace checks {
// Each returns a summary string and throws CheckFailure (derived from
// std::runtime_error) with the first counterexample.
std::string partitions(int n_max);
std::string characters(int n_max);
std::string characters_vs_oracle(int n_max, std::uint64_t seed);
std::string symfunc(int n_max, std::uint64_t seed);
std::string center_round_trip(int n_max);
std::string idempotents(int n_max);
std::string class_identities(int n_min, int n_max);
std::string jm_centrality(int n_max, int i_max);
std::string twist_application(int n_max, int cap);
std::string cut_and_join(int n_max);
std::string walk_engine(int n_max);
/// Twisted coefficients against walk counts for every kind: plain b <= plain_max,
/// weak k <= weak_max, strict k <= n - 1, mixed and multi with totals <= mixed_max.
std::string walk_equality(int n_min, int n_max, int plain_max, int weak_max, int mixed_max);
std::string connection_structure(int n_max, int cap);
std::string intertwining(int size_max, int cap);
std::string alpha_q_family(int size_max, int N_max);
std::string family_laws(int size_max, int N_max);
std::string twisted_cauchy(int n_max, std::uint64_t seed, int cap);
std::string hciz(int N_max, int z_cap, std::uint64_t seed);
std::string connectivity(int n_max, int b_max, int k_max);
std::string log_round_trip(int n_max, int cap);
std::string multimonotone(int n_max, int d_max);
} // namespace checks

/// suite is characters, center, walks, tau or all. Throws ArgumentError for other names.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& config);

} // namespace hurwitz
