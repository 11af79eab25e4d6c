#pragma once

#include "skein/invariants.hpp"

#include <functional>
#include <string>
#include <vector>

namespace skein {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0;

    bool passed() const;
    void add(const std::string& name, bool pass, const std::string& detail = "");
    // Runs f, recording any exception as a failed check.
    void guard(const std::string& name, const std::function<void()>& f);
    void append(const SuiteResult& other);
    std::string to_json() const;
    std::string to_text() const;
};

struct VerifyOptions {
    InvariantOptions invariants;
    bool stretch = false;  // include the high-color rows of the fourth table
};

SuiteResult golden_table(int which, const VerifyOptions& opts = {});
SuiteResult maximality_witness(const VerifyOptions& opts = {});
SuiteResult tl_identities(const VerifyOptions& opts = {});
SuiteResult min_degree_formulas(const VerifyOptions& opts = {});
SuiteResult oracle_equivalence(const VerifyOptions& opts = {});
SuiteResult rate_theorems(const VerifyOptions& opts = {});
SuiteResult degree_steps(const VerifyOptions& opts = {});

// paper-tables | tl-identities | min-degrees | rate-theorems | oracle-equivalence
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts = {});

}  // namespace skein
