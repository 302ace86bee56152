#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/error.hpp"
#include "hurwitz/serialize.hpp"
#include "hurwitz/tables.hpp"
#include "hurwitz/tau.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;

namespace {

constexpr std::uint64_t kSeed = 20240611;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string compare_file(const std::string& rel, const std::string& fresh) {
    std::string committed = slurp(std::string(HURWITZ_SOURCE_DIR) + "/" + rel);
    if (committed != fresh) throw ConsistencyError(rel + " differs from the regenerated output");
    return rel + " byte-identical (" + std::to_string(fresh.size()) + " bytes)";
}

struct Criterion {
    std::string id;
    std::vector<std::pair<std::string, std::function<std::string()>>> parts;
};

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {"AC1 characters",
         {{"partitions", [] { return checks::partitions(8); }},
          {"orthogonality", [] { return checks::characters(8); }},
          {"frobenius", [] { return checks::characters_vs_oracle(6, kSeed); }}}},
        {"AC2 center",
         {{"round_trip", [] { return checks::center_round_trip(8); }},
          {"idempotents", [] { return checks::idempotents(6); }},
          {"classes", [] { return checks::class_identities(4, 7); }}}},
        {"AC3 walk equality",
         {{"n<=5", [] { return checks::walk_equality(1, 5, 4, 6, 5); }},
          {"n=6", [] { return checks::walk_equality(6, 6, 3, 3, 3); }}}},
        {"AC4 twisted Cauchy", {{"n<=6", [] { return checks::twisted_cauchy(6, kSeed, 6); }}}},
        {"AC5 intertwining",
         {{"H", [] { return checks::intertwining(8, 6); }},
          {"alpha_q", [] { return checks::alpha_q_family(6, 5); }}}},
        {"AC6 HCIZ", {{"N<=3", [] { return checks::hciz(3, 6, kSeed); }}}},
        {"AC7 connectivity", {{"plain+weak", [] { return checks::connectivity(5, 4, 5); }}}},
        {"AC8 multimonotone",
         {{"oracle", [] { return checks::multimonotone(5, 4); }},
          {"golden", [] {
               return compare_file("tests/golden/multimonotone.json",
                                   table_json(hurwitz_table({TableKind::Multi, 5, 4, 2, false})));
           }}}},
        {"AC9 alpha_q report",
         {{"report", [] { return compare_file("docs/alpha_q_report.md", alpha_q_report_markdown(default_alpha_q_cases())); }}}},
    };
    bool all = true;
    for (const auto& c : criteria) {
        bool ok = true;
        double seconds = 0;
        std::string detail;
        for (const auto& [name, fn] : c.parts) {
            CheckResult r = run_check(c.id, name, fn);
            seconds += r.seconds;
            if (!detail.empty()) detail += "; ";
            detail += name + ": " + r.detail;
            ok = ok && r.passed;
        }
        all = all && ok;
        std::printf("%s %s [%.2fs] %s\n", ok ? "PASS" : "FAIL", c.id.c_str(), seconds, detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
