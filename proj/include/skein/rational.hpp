#pragma once

#include "skein/laurent.hpp"

#include <string>

namespace skein {

// Quotient num/den of Laurent polynomials. Only monomial content and the
// scalar normalization of the denominator are canceled eagerly; full
// reduction is available through reduced().
class RationalFn {
public:
    RationalFn() : num_(), den_(1L) {}
    RationalFn(long c) : num_(c), den_(1L) {}
    RationalFn(const LaurentPoly& num) : num_(num), den_(1L) {}
    RationalFn(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_monomial(); }

    int min_degree() const;
    RationalFn reduced() const;
    // Exact conversion; throws RemainderError when den does not divide num.
    LaurentPoly to_laurent() const;
    RationalFn mirror() const;

    RationalFn operator-() const { return RationalFn(-num_, den_); }
    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator-=(const RationalFn& o) { return *this += -o; }
    RationalFn& operator*=(const RationalFn& o);
    RationalFn& operator/=(const RationalFn& o);
    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
    friend bool operator==(const RationalFn& a, const RationalFn& b);
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    std::string to_string() const;

private:
    void normalize();
    LaurentPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFn& r);
int min_degree(const RationalFn& r);

}  // namespace skein
