#include "doctest.h"

#include "skein/algebra.hpp"
#include "skein/clasp.hpp"
#include "skein/errors.hpp"
#include "skein/slice.hpp"

using namespace skein;

namespace {

std::vector<int> doubled(const std::vector<int>& ps) {
    std::vector<int> out;
    for (int p : ps) out.push_back(2 * p);
    return out;
}

}  // namespace

TEST_CASE("clasped basis classification") {
    for (int n = 1; n <= 4; ++n)
        for (int j = 0; j <= n; ++j) CHECK(clasped_index(ClaspedAlgebra::basis_matching(n, j), n) == j);
    CHECK(clasped_index(Matching::hook(4, 1), 2) == -1);
    CHECK(clasped_index(Matching::hook(4, 2), 2) == 1);
}

TEST_CASE("clasped drums agree with the sweep evaluation") {
    for (int n = 1; n <= 3; ++n) {
        auto alg = ClaspedAlgebra::get(n);
        std::vector<std::vector<int>> cases = {{0}, {0, 0, 0}};
        for (int p = 0; p <= n; ++p) {
            cases.push_back({p});
            cases.push_back({p, p});
            if (p < n) cases.push_back({p, p + 1});
        }
        if (n <= 2)
            for (int a = 0; a <= n; ++a)
                for (int b = 0; b <= n; ++b)
                    for (int c = 0; c <= n; ++c) cases.push_back({a, b, c});
        for (const auto& ps : cases) CHECK(alg->drum_value(ps) == evaluate(drum(n, doubled(ps))));
    }
    CHECK_THROWS_AS(ClaspedAlgebra::get(2)->drum_value({3}), AdmissibilityError);
}

TEST_CASE("clasped drums for larger colors") {
    for (int n = 4; n <= 5; ++n) {
        auto alg = ClaspedAlgebra::get(n);
        LaurentPoly d = delta(n);
        CHECK(alg->drum_value({0, 0}) == RationalFn(d * d));
        for (int p = 0; p <= n; ++p) {
            RationalFn th = theta(n, n, 2 * p);
            CHECK(alg->drum_value({p, p}) == th * th / RationalFn(delta(2 * p)));
        }
    }
}
