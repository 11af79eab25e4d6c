#include "skein/verify.hpp"

#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

using namespace skein;

int main(int argc, char** argv) {
    VerifyOptions opts;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--stretch") == 0) opts.stretch = true;
    const std::vector<std::pair<std::string, std::function<SuiteResult()>>> criteria = {
        {"golden table 1: J_2(P(8,6,k)), k=1..10", [&] { return golden_table(1, opts); }},
        {"golden table 2: J_2(P(k,k,2)), k=1..10", [&] { return golden_table(2, opts); }},
        {"golden table 3: P(k+2,k+4,k+1), k=1..7", [&] { return golden_table(3, opts); }},
        {"golden table 4: P(2,5,k), k=1..5", [&] { return golden_table(4, opts); }},
        {"maximality witness: stable prefix 3", [&] { return maximality_witness(opts); }},
        {"TL identity suite", [&] { return tl_identities(opts); }},
        {"min-degree formulas", [&] { return min_degree_formulas(opts); }},
        {"oracle equivalence", [&] { return oracle_equivalence(opts); }},
        {"rate theorems", [&] { return rate_theorems(opts); }},
        {"degree steps of twist and fusion weights", [&] { return degree_steps(opts); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        SuiteResult r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.add("criterion", false, e.what());
        }
        if (!r.passed()) {
            ++failed;
            for (const auto& c : r.checks)
                if (!c.pass) std::printf("    failed: %s  %s\n", c.name.c_str(), c.detail.c_str());
        }
        std::printf("criterion %zu: %s  %s  (%.2f s)\n", i + 1, r.passed() ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    r.seconds);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
