#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace skein {

using Rational = mpq_class;
using Integer = mpz_class;

// Exact Laurent polynomial in the Kauffman variable A.
// Terms are kept sorted by exponent with no zero coefficients.
class LaurentPoly {
public:
    using Term = std::pair<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(long c);
    LaurentPoly(const Rational& c);

    static LaurentPoly monomial(int exponent, const Rational& c = 1);
    static LaurentPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_integral() const;
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    int min_degree() const;
    int max_degree() const;
    Rational coeff(int exponent) const;
    const Rational& lowest_coeff() const;
    const Rational& highest_coeff() const;
    // gcd of the differences between exponents (0 for monomials and zero)
    int stride() const;

    LaurentPoly shifted(int s) const;
    LaurentPoly mirror() const;
    LaurentPoly pow(unsigned e) const;
    LaurentPoly scaled(const Rational& c) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Adds c * A^shift * o into *this.
    void add_scaled(const LaurentPoly& o, const Rational& c, int shift = 0);

    std::string to_string() const;
    // Compact "exp:coef exp:coef" form used by cache files.
    std::string serialize() const;
    static LaurentPoly deserialize(const std::string& text);

private:
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// h with f = g*h; throws RemainderError when the division is not exact.
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);
// Greatest common divisor up to units (monomials and scalars); the result has
// min degree 0 and lowest coefficient 1.
LaurentPoly poly_gcd(const LaurentPoly& f, const LaurentPoly& g);
int min_degree(const LaurentPoly& f);
LaurentPoly mirror(const LaurentPoly& f);

// The circle value -A^2 - A^-2.
const LaurentPoly& loop_value();
// loop_value()^k, memoized.
LaurentPoly loop_power(int k);

}  // namespace skein
