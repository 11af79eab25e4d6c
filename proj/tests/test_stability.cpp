#include "doctest.h"

#include "skein/errors.hpp"
#include "skein/stability.hpp"

using namespace skein;

namespace {

CoeffList list(std::vector<long long> c) {
    CoeffList l;
    l.coeffs = std::move(c);
    return l;
}

}  // namespace

TEST_CASE("normalization and n-equivalence") {
    CHECK(normalize(list({-1, 4, 0, 0, -6})).coeffs == std::vector<long long>{1, -4, 0, 0, 6});
    CHECK(normalize(list({1, -1, 3})).coeffs == std::vector<long long>{1, -1, 3});
    CHECK_THROWS_AS(normalize(list({0, 1})), RangeError);
    CHECK_THROWS_AS(normalize(list({})), RangeError);

    auto a = list({-1, 4, 0, 0, -6, 0, 11});
    a.anchor = -16;
    auto b = list({1, -4, 0, 0, 6, 0, 0});
    CHECK(n_equivalent(a, b, 5));
    CHECK_FALSE(n_equivalent(a, b, 7));
    CHECK(n_equivalent(a, a, 7));
    CHECK_THROWS_AS(n_equivalent(a, b, 8), InsufficientWindowError);

    auto x = list({1, -1, 3, -3}), y = list({1, -1, 3, -4});
    CHECK(n_equivalent(x, y, 3));
    CHECK_FALSE(n_equivalent(x, y, 4));
    CHECK(stable_prefix(x, y) == 3);
    CHECK(stable_prefix(x, x) == 4);
    CHECK(stable_prefix(list({1, 2}), list({2, 2})) == 0);

    // equivalence relation on triples
    auto p = list({2, 1, 5, 7}), q = list({-2, -1, -5, 9}), r = list({2, 1, 5, 1});
    for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(n_equivalent(p, q, n) == n_equivalent(q, p, n));
        if (n_equivalent(p, q, n) && n_equivalent(q, r, n)) CHECK(n_equivalent(p, r, n));
    }
}

TEST_CASE("family expressions") {
    CHECK(FamilyExpr::parse("3k+1")(2) == 7);
    CHECK(FamilyExpr::parse("2(k+1) - k*k")(3) == -1);
    CHECK(FamilyExpr::parse("-k+10")(4) == 6);
    CHECK_FALSE(FamilyExpr::parse("7").depends_on_k());
    CHECK_THROWS_AS(FamilyExpr::parse("k+"), ParseError);
    CHECK_THROWS_AS(FamilyExpr::parse("k)"), ParseError);
    auto spec = FamilySpec::pretzel_family("P(k+2, k+4, k+1)");
    CHECK(spec.member(1).name == "P(3,5,2)");
    spec.k_min = -3;
    spec.k_max = 1;
    CHECK_THROWS_AS(spec.validate(), RangeError);
}

TEST_CASE("J_2 tail of P(8,6,k)") {
    auto spec = FamilySpec::pretzel_family("P(8,6,k)");
    spec.k_min = 1;
    spec.k_max = 10;
    auto rep = family_tail(spec, FamilyExpr::parse("k+1"));
    CHECK(rep.passed());
    CHECK(rep.tail.coeffs == std::vector<long long>{1, -1, 3, -4, 6, -8, 10, -11, 13, -13, 14});
    // the rate is maximal: P(8,6,2) and P(8,6,3) agree to exactly 3 terms
    CHECK(rep.steps[1].depth == 3);
    // every smaller rate passes, a larger one fails somewhere
    CHECK(family_tail(spec, FamilyExpr::parse("k")).passed());
    CHECK_FALSE(family_tail(spec, FamilyExpr::parse("k+2")).passed());
    // tails from different passing rates agree on the overlap
    auto slow = family_tail(spec, FamilyExpr::parse("k"));
    CHECK(std::equal(slow.tail.coeffs.begin(), slow.tail.coeffs.end(), rep.tail.coeffs.begin()));
    CHECK(rep.to_json().find("\"passed\": true") != std::string::npos);
}

TEST_CASE("bracket and colored twist rates") {
    auto spec = FamilySpec::pretzel_family("P(8,6,k)");
    spec.k_min = 1;
    spec.k_max = 5;
    CHECK(check_bracket_rate(spec).passed());
    CHECK_FALSE(check_bracket_rate(spec, 5).passed());

    auto multi = FamilySpec::pretzel_family("P(k,k,2)");
    multi.k_min = 2;
    multi.k_max = 5;
    CHECK(check_bracket_rate(multi).passed());

    auto colored = FamilySpec::pretzel_family("P(2,2,k)");
    colored.color = FamilyExpr(2);
    colored.index = ColorIndex::Projector;
    colored.k_min = 1;
    colored.k_max = 4;
    CHECK(check_colored_rate(colored).passed());
    CHECK_FALSE(check_colored_rate(colored, 6).passed());
}

TEST_CASE("color stability") {
    CHECK(check_color_stability(pretzel({2, 3, 2}), 2, 3).passed());
    CHECK(check_cross_twist(pretzel({2, 3, 2}), 2, {{1, 2}, {3, 3}}).passed());
    auto g = check_graph_stability(pretzel({2, 2, 2}), pretzel({4, 5, 3}), 2);
    CHECK(g.passed());
    CHECK(g.steps[0].required == 8);
    CHECK_THROWS_AS(check_graph_stability(pretzel({2, 2, 2}), pretzel({2, 2}), 2), PreconditionError);
}

TEST_CASE("third table family passes at rate 3k+1") {
    auto spec = FamilySpec::pretzel_family("P(k+2,k+4,k+1)");
    spec.color = FamilyExpr(3);
    spec.index = ColorIndex::Projector;
    spec.k_min = 1;
    spec.k_max = 4;
    auto rep = family_tail(spec, FamilyExpr::parse("3k+1"));
    CHECK(rep.passed());
    CHECK(rep.tail.coeffs == std::vector<long long>{1, -1, -1, 0, 4, 0, -4, -5, 7, 6, -1, -13, 1});
}

TEST_CASE("framing monomials do not change normalized windows") {
    auto base = reduced_jones_poly(pretzel({8, 6, 3}), 2);
    for (int s : {-12, -4, 0, 8}) {
        for (int sign : {1, -1}) {
            auto framed = base * LaurentPoly::monomial(s, sign);
            auto a = normalize(coeff_window(base, 5, 4)), b = normalize(coeff_window(framed, 5, 4));
            CHECK(a.coeffs == b.coeffs);
            auto c = compare("base", base, "framed", framed, 5, Grading::QUnits);
            CHECK(c.pass);
        }
    }
}
