#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace clr {

struct SuiteConfig {
    std::uint64_t seed = 7;
    int threads = 0;     // 0: hardware concurrency (CRYSTAL_LR_THREADS overrides)
    bool quick = false;  // smaller grids
    int margin = 2;      // verifier margin
};

struct CheckResult {
    std::string name;
    int criterion = 0;  // acceptance criterion number, 0 for extra properties
    bool pass = false;
    long long cases = 0;
    long long failures = 0;
    double seconds = 0;
    std::string note;
    std::string counterexample;  // first failing case, empty on success
};

struct unknown_suite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& suite_names();

// Runs a named suite; throws unknown_suite.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteConfig& cfg);

// One result per acceptance criterion, in order 1..13.
std::vector<CheckResult> acceptance_checks(const SuiteConfig& cfg);

CheckResult check_lr_oracle(const SuiteConfig& cfg);
CheckResult check_bicrystal(const SuiteConfig& cfg);
CheckResult check_duality_en(const SuiteConfig& cfg);
CheckResult check_pieri(const SuiteConfig& cfg);
CheckResult check_level_one(const SuiteConfig& cfg);
CheckResult check_rho_s_lambda(const SuiteConfig& cfg);
CheckResult check_skew_expansion(const SuiteConfig& cfg);
CheckResult check_ore(const SuiteConfig& cfg);
CheckResult check_h_calculus(const SuiteConfig& cfg);
CheckResult check_extremal_lr(const SuiteConfig& cfg);
CheckResult check_annihilator(const SuiteConfig& cfg);
CheckResult check_hall_littlewood(const SuiteConfig& cfg);
CheckResult check_bt_relations(const SuiteConfig& cfg);

// extra properties, run by the suites but not part of the acceptance gate
CheckResult check_extremal_associativity(const SuiteConfig& cfg);
CheckResult check_commutativity(const SuiteConfig& cfg);
CheckResult check_derivation_law(const SuiteConfig& cfg);

}  // namespace clr
