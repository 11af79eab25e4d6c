#include "doctest.h"

#include "skein/algebra.hpp"
#include "skein/errors.hpp"

#include <random>

using namespace skein;

namespace {

LaurentPoly A(int e, long c = 1) { return LaurentPoly::monomial(e, c); }

LaurentPoly random_poly(std::mt19937& rng, int terms, int lo, int hi) {
    std::uniform_int_distribution<int> ed(lo, hi), cd(-5, 5);
    LaurentPoly p;
    for (int i = 0; i < terms; ++i) p += A(ed(rng), cd(rng));
    return p;
}

}  // namespace

TEST_CASE("qpoch4 expansions") {
    CHECK(qpoch4(0) == LaurentPoly(1L));
    CHECK(qpoch4(1) == LaurentPoly(1L) - A(4));
    CHECK(qpoch4(2) == LaurentPoly(1L) - A(4) - A(8) + A(12));
    CHECK_THROWS_AS(qpoch4(-1), RangeError);
}

TEST_CASE("delta values") {
    CHECK(delta(0) == LaurentPoly(1L));
    CHECK(delta(1) == -A(2) - A(-2));
    CHECK(delta(2) == A(4) + LaurentPoly(1L) + A(-4));
    CHECK(delta(1) == loop_value());
    for (int n = 0; n <= 6; ++n) {
        LaurentPoly lhs = delta(n) * (A(2) - A(-2));
        LaurentPoly rhs = (A(2 * (n + 1)) - A(-2 * (n + 1))).scaled(n % 2 == 0 ? 1 : -1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("theta closed form") {
    CHECK(theta(1, 1, 2) == RationalFn(A(-4) + LaurentPoly(1L) + A(4)));
    for (int n = 1; n <= 3; ++n) CHECK(theta(n, n, 0) == RationalFn(delta(n)));
    // not a Laurent polynomial in general: -[3][4]/[2]^2 with [m] the quantum integer
    CHECK(theta(2, 2, 2) == RationalFn(delta(2) * (A(4) + A(-4)), delta(1)));
    CHECK(!theta(2, 2, 2).reduced().is_polynomial());
    CHECK_THROWS_AS(theta(1, 2, 4), AdmissibilityError);
    CHECK_THROWS_AS(theta(1, 1, 1), AdmissibilityError);
    // degenerate bubble c = a+b
    CHECK(theta(2, 1, 3) == RationalFn(delta(3)));
}

TEST_CASE("fusion coefficients") {
    CHECK(fusion_coeff(1, 0) == A(1));
    CHECK(fusion_coeff(1, 1) == A(-1));
    CHECK(fusion_coeff(2, 0) == A(4));
    CHECK(fusion_coeff(2, 1) == A(-2) + A(2));
    CHECK_THROWS_AS(fusion_coeff(2, 3), RangeError);
    for (int n = 0; n <= 4; ++n)
        for (int i = 0; i <= n; ++i) CHECK(fusion_coeff(n, i).mirror() == fusion_coeff(n, n - i));
}

TEST_CASE("twist coefficients") {
    for (int n = 1; n <= 4; ++n) CHECK(twist_coeff(n, n, 2 * n) == A(-n * n));
    CHECK(twist_coeff(1, 1, 0) == A(3, -1));
    CHECK(twist_coeff(1, 1, 2) == A(-1));
    for (int n = 1; n <= 4; ++n)
        for (int p = 0; p <= n; ++p)
            CHECK(twist_coeff(n, n, 2 * p) ==
                  A(n * n + 2 * n - 2 * p - 2 * p * p, (n - p) % 2 == 0 ? 1 : -1));
    CHECK_THROWS_AS(twist_coeff(1, 1, 1), AdmissibilityError);
}

TEST_CASE("min degree") {
    CHECK(min_degree(-A(-3) + A(5)) == -3);
    CHECK(min_degree(delta(2)) == -4);
    CHECK_THROWS_AS(min_degree(LaurentPoly()), UndefinedDegreeError);
    CHECK(min_degree(RationalFn(A(3) + A(7), A(-1) + A(5))) == 4);
}

TEST_CASE("degree steps of twist and fusion weights") {
    for (int n = 1; n <= 4; ++n)
        for (int j = 1; j <= n; ++j) {
            CHECK(min_degree(twist_coeff(n, n, 2 * j)) - min_degree(twist_coeff(n, n, 2 * (j - 1))) == -4 * j);
            CHECK(min_degree(fusion_weight(n, j)) - min_degree(fusion_weight(n, j - 1)) == -2);
        }
}

TEST_CASE("coefficient windows") {
    LaurentPoly f = LaurentPoly(1L) - A(4) + A(8, 3);
    CHECK(coeff_window(f, 4).coeffs == std::vector<long long>{1, -1, 3, 0});
    CHECK(coeff_window(A(-4), 2).coeffs == std::vector<long long>{1, 0});
    CHECK(coeff_window(A(-4), 2).anchor == -4);
    CHECK(coeff_window(A(0) + A(1), 3, 1).coeffs == std::vector<long long>{1, 1, 0});
    CHECK_THROWS_AS(coeff_window(LaurentPoly(), 2), UndefinedDegreeError);
    CHECK_THROWS_AS(coeff_window(A(0) + A(2), 2), GradingError);
}

TEST_CASE("exact division") {
    CHECK(exact_div((A(2) - A(-2)) * delta(1), delta(1)) == A(2) - A(-2));
    LaurentPoly num = qpoch4(0) * qpoch4(1) * qpoch4(1) * qpoch4(3);
    LaurentPoly den = (LaurentPoly(1L) - A(4)) * qpoch4(1) * qpoch4(2) * qpoch4(1);
    CHECK(exact_div(num, den).shifted(-4) == A(-4) + LaurentPoly(1L) + A(4));
    CHECK_THROWS_AS(exact_div(LaurentPoly(1L) + A(4), LaurentPoly(1L) + A(2)), RemainderError);
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly f = random_poly(rng, 6, -10, 10), g = random_poly(rng, 4, -6, 6);
        if (g.is_zero()) continue;
        CHECK(exact_div(f * g, g) == f);
    }
}

TEST_CASE("substitute quarter") {
    QPoly q = substitute_quarter(A(-4) - A(0) + A(4));
    CHECK(q.to_string() == "q^-1 - 1 + q");
    CHECK(!q.half_step);
    QPoly r = substitute_quarter(A(-3) + A(1));
    CHECK(r.coefficients() == std::vector<Integer>{1, 1});
    CHECK(r.residue == 1);
    CHECK(substitute_quarter(A(0) + A(2)).half_step);
    CHECK_THROWS_AS(substitute_quarter(A(0) + A(1)), GradingError);
}

TEST_CASE("mirror") {
    CHECK(mirror(A(3)) == A(-3));
    for (int n = 0; n <= 4; ++n) CHECK(mirror(delta(n)) == delta(n));
    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        LaurentPoly f = random_poly(rng, 5, -8, 8);
        CHECK(mirror(mirror(f)) == f);
    }
}

TEST_CASE("rational functions") {
    RationalFn a(LaurentPoly(1L), delta(1)), b(LaurentPoly(1L), delta(2));
    RationalFn s = a + b;
    CHECK(s * RationalFn(delta(1) * delta(2)) == RationalFn(delta(1) + delta(2)));
    CHECK(RationalFn(delta(1) * A(3), delta(1)) == RationalFn(A(3)));
    CHECK(RationalFn(delta(1) * A(3), delta(1)).reduced().den() == LaurentPoly(1L));
    CHECK(RationalFn(delta(2) * delta(1), delta(1)).to_laurent() == delta(2));
    CHECK_THROWS_AS(RationalFn(LaurentPoly(1L), delta(1)).to_laurent(), RemainderError);
    CHECK(poly_gcd(delta(1) * delta(2), delta(1) * delta(3)) == poly_gcd(delta(1), delta(1)));
}

TEST_CASE("serialization round trip") {
    LaurentPoly f = A(-3, -2) + LaurentPoly::monomial(5, Rational(7, 3));
    CHECK(LaurentPoly::deserialize(f.serialize()) == f);
    CHECK(f.to_string() == "-2*A^-3 + 7/3*A^5");
}
