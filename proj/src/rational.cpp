#include "skein/rational.hpp"

#include "skein/errors.hpp"

#include <ostream>

namespace skein {

RationalFn::RationalFn(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw SkeinError("rational function with zero denominator");
    normalize();
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1L);
        return;
    }
    const int shift = den_.min_degree();
    const Rational scale = 1 / den_.lowest_coeff();
    if (shift == 0 && scale == 1) return;
    den_ = den_.shifted(-shift).scaled(scale);
    num_ = num_.shifted(-shift).scaled(scale);
}

int RationalFn::min_degree() const { return num_.min_degree() - den_.min_degree(); }

RationalFn RationalFn::reduced() const {
    if (num_.is_zero()) return *this;
    LaurentPoly g = poly_gcd(num_, den_);
    if (g.is_monomial()) return *this;
    return RationalFn(exact_div(num_, g), exact_div(den_, g));
}

LaurentPoly RationalFn::to_laurent() const { return exact_div(num_, den_); }

RationalFn RationalFn::mirror() const { return RationalFn(num_.mirror(), den_.mirror()); }

RationalFn& RationalFn::operator+=(const RationalFn& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero()) den_ = LaurentPoly(1L);
        return *this;
    }
    if (den_.is_monomial() || o.den_.is_monomial()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    LaurentPoly g = poly_gcd(den_, o.den_);
    LaurentPoly a = exact_div(den_, g), b = exact_div(o.den_, g);
    num_ = num_ * b + o.num_ * a;
    den_ = den_ * b;
    normalize();
    return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) {
    if (o.num_.is_zero()) throw SkeinError("division by the zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

bool operator==(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFn::to_string() const {
    if (den_ == LaurentPoly(1L)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFn& r) { return os << r.to_string(); }

int min_degree(const RationalFn& r) { return r.min_degree(); }

}  // namespace skein
