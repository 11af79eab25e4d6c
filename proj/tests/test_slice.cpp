#include "doctest.h"

#include "skein/algebra.hpp"
#include "skein/errors.hpp"
#include "skein/slice.hpp"

#include <random>

using namespace skein;

namespace {

LaurentPoly A(int e, long c = 1) { return LaurentPoly::monomial(e, c); }

TLMorphism proj2(int n) { return tensor(jones_wenzl(n), jones_wenzl(n)); }

}  // namespace

TEST_CASE("cup then cap is one loop") {
    SliceProgram p;
    p.cup(0).cap(0);
    CHECK(evaluate(p) == RationalFn(loop_value()));
}

TEST_CASE("program arity errors") {
    SliceProgram open;
    open.cup(0);
    CHECK_THROWS_AS(evaluate(open), ArityError);
    SliceProgram broken;
    broken.cup(0).cap(1);
    try {
        evaluate(broken);
        CHECK(false);
    } catch (const ArityError& e) {
        CHECK(std::string(e.what()).find("slice 1") != std::string::npos);
    }
}

TEST_CASE("theta programs match the closed form") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                if (is_admissible(a, b, c)) CHECK(evaluate(theta_program(a, b, c)) == theta(a, b, c));
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = 0; c <= 4; ++c)
                if (is_admissible(a, b, c) && a + b + c >= 10) CHECK(evaluate(theta_program(a, b, c)) == theta(a, b, c));
}

TEST_CASE("twist property of a cabled curl") {
    for (int n = 1; n <= 4; ++n) {
        SliceProgram p;
        p.nested_cups(n, 0);
        p.projector(n, 0);
        p.nested_cups(n, n);
        p.cabled_crossing(n, -1, 0);
        p.nested_caps(n, n);
        p.nested_caps(n, 0);
        LaurentPoly mu = A(-n * n - 2 * n, n % 2 == 0 ? 1 : -1);
        CHECK(evaluate(p) == RationalFn(mu * delta(n)));
    }
}

TEST_CASE("fusion identity") {
    for (int n = 1; n <= 2; ++n) {
        TLMorphism sum(2 * n, 2 * n);
        for (int i = 0; i <= n; ++i) {
            TLMorphism t = compose(vertex_morphism(n, n, 2 * i, VertexOrientation::Merge),
                                   vertex_morphism(n, n, 2 * i, VertexOrientation::Split));
            sum += t * fusion_weight(n, i);
        }
        CHECK(sum == proj2(n));
        // and inside a closing context: a cabled crossing, closed up
        TLMorphism ctx = TLMorphism::from_scaled(cabled_crossing_morphism(n, -1));
        RationalFn lhs = closure(compose(proj2(n), ctx));
        RationalFn rhs;
        for (int i = 0; i <= n; ++i) {
            TLMorphism t = compose(vertex_morphism(n, n, 2 * i, VertexOrientation::Merge),
                                   vertex_morphism(n, n, 2 * i, VertexOrientation::Split));
            rhs += closure(compose(t, ctx)) * fusion_weight(n, i);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("colored Kauffman relation") {
    for (int n = 1; n <= 2; ++n) {
        TLMorphism p = proj2(n);
        TLMorphism x = compose(compose(p, TLMorphism::from_scaled(cabled_crossing_morphism(n, -1))), p);
        TLMorphism sum(2 * n, 2 * n);
        for (int i = 0; i <= n; ++i)
            sum += compose(compose(p, TLMorphism::from_matching(clasp_smoothing(n, i))), p) *
                   RationalFn(fusion_coeff(n, i));
        CHECK(x == sum);
    }
    // n = 1 reduces to the Kauffman relation itself
    CHECK(TLMorphism::from_scaled(crossing_morphism(-1)) ==
          TLMorphism::identity(2) * RationalFn(fusion_coeff(1, 1)) +
              TLMorphism::hook(2, 1) * RationalFn(fusion_coeff(1, 0)));
}

TEST_CASE("drum networks") {
    for (int n = 1; n <= 3; ++n) {
        LaurentPoly d = delta(n);
        CHECK(evaluate(drum(n, {0, 0, 0})) == RationalFn(d * d));
        for (int p = 0; p <= n; ++p) {
            RationalFn th = theta(n, n, 2 * p);
            CHECK(evaluate(drum(n, {2 * p, 2 * p})) == th * th / RationalFn(delta(2 * p)));
            if (p > 0) CHECK(evaluate(drum(n, {2 * p})).is_zero());
        }
        if (n <= 2)
            for (int p = 0; p < n; ++p) CHECK(evaluate(drum(n, {2 * p, 2 * (p + 1)})).is_zero());
    }
    CHECK_THROWS_AS(drum(2, {3}), AdmissibilityError);
}

TEST_CASE("evaluation is independent of the order of commuting slices") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        // two strands pairs side by side, each with random crossings, closed
        std::vector<int> left, right;
        for (int i = 0; i < 3; ++i) {
            left.push_back(rng() % 2 ? 1 : -1);
            right.push_back(rng() % 2 ? 1 : -1);
        }
        SliceProgram a, b;
        for (auto* p : {&a, &b}) p->nested_cups(2, 0).nested_cups(2, 4);
        for (int i = 0; i < 3; ++i) a.crossing(left[i], 1).crossing(right[i], 5);
        for (int i = 0; i < 3; ++i) b.crossing(right[i], 5);
        for (int i = 0; i < 3; ++i) b.crossing(left[i], 1);
        for (auto* p : {&a, &b}) p->nested_caps(2, 4).nested_caps(2, 0);
        CHECK(evaluate(a) == evaluate(b));
    }
}
