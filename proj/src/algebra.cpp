#include "skein/algebra.hpp"

#include "skein/errors.hpp"

#include <cstdlib>
#include <limits>
#include <mutex>
#include <sstream>

namespace skein {

bool is_admissible(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) return false;
    if ((a + b + c) % 2 != 0) return false;
    return std::abs(a - b) <= c && c <= a + b;
}

InternalColors internal_colors(int a, int b, int c) {
    if (!is_admissible(a, b, c)) throw AdmissibilityError(a, b, c);
    return {(a + b - c) / 2, (a + c - b) / 2, (b + c - a) / 2};
}

LaurentPoly qpoch4(int n) {
    if (n < 0) throw RangeError("qpoch4: negative index " + std::to_string(n));
    static std::mutex mu;
    static std::vector<LaurentPoly> cache{LaurentPoly(1L)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        const int j = static_cast<int>(cache.size());
        cache.push_back(cache.back() * (LaurentPoly(1L) - LaurentPoly::monomial(4 * j)));
    }
    return cache[static_cast<std::size_t>(n)];
}

LaurentPoly delta(int n) {
    if (n < 0) throw RangeError("delta: negative index " + std::to_string(n));
    // (-1)^n (A^{2(n+1)} - A^{-2(n+1)})/(A^2 - A^{-2}) = (-1)^n sum_{j=0}^{n} A^{2n-4j}
    std::vector<LaurentPoly::Term> t;
    const Rational sign = (n % 2 == 0) ? 1 : -1;
    for (int j = 0; j <= n; ++j) t.emplace_back(2 * n - 4 * j, sign);
    return LaurentPoly::from_terms(std::move(t));
}

RationalFn theta(int a, int b, int c) {
    const auto [x, y, z] = internal_colors(a, b, c);
    const int s = x + y + z;
    LaurentPoly num = qpoch4(x) * qpoch4(y) * qpoch4(z) * qpoch4(s + 1);
    LaurentPoly den = (LaurentPoly(1L) - LaurentPoly::monomial(4)) * qpoch4(x + y) * qpoch4(y + z) * qpoch4(x + z);
    return RationalFn(num.scaled(s % 2 == 0 ? 1 : -1).shifted(-2 * s), den).reduced();
}

LaurentPoly fusion_coeff(int n, int i) {
    if (n < 0 || i < 0 || i > n)
        throw RangeError("fusion_coeff: index " + std::to_string(i) + " outside 0.." + std::to_string(n));
    LaurentPoly q = exact_div(qpoch4(n), qpoch4(i) * qpoch4(n - i));
    return q.shifted(n * n + 2 * i * i - 4 * i * n);
}

LaurentPoly twist_coeff(int a, int b, int c) {
    if (!is_admissible(a, b, c)) throw AdmissibilityError(a, b, c);
    const int half = (a + b - c) / 2;
    const int e = a + b - c + (a * a + b * b - c * c) / 2;
    return LaurentPoly::monomial(e, half % 2 == 0 ? 1 : -1);
}

RationalFn fusion_weight(int n, int p) { return (RationalFn(delta(2 * p)) / theta(n, n, 2 * p)).reduced(); }

long long to_integer(const Rational& c) {
    if (c.get_den() != 1) throw SkeinError("non-integral coefficient " + c.get_str());
    const Integer& v = c.get_num();
    if (!v.fits_slong_p()) throw SkeinError("coefficient out of 64-bit range: " + v.get_str());
    return v.get_si();
}

CoeffList coeff_window(const LaurentPoly& f, std::size_t n, int step) {
    if (f.is_zero()) throw UndefinedDegreeError();
    if (n == 0) throw RangeError("coefficient window length must be positive");
    if (step <= 0) throw RangeError("coefficient window step must be positive");
    const int low = f.min_degree();
    for (const auto& t : f.terms())
        if ((t.first - low) % step != 0)
            throw GradingError("exponent " + std::to_string(t.first) + " is off the step-" +
                               std::to_string(step) + " lattice anchored at " + std::to_string(low));
    CoeffList out;
    out.anchor = low;
    out.step = step;
    out.coeffs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.coeffs.push_back(to_integer(f.coeff(low + static_cast<int>(i) * step)));
    return out;
}

QPoly substitute_quarter(const LaurentPoly& f) {
    QPoly q;
    if (f.is_zero()) return q;
    const int low = f.min_degree();
    int unit = 4;
    for (const auto& t : f.terms()) {
        if ((t.first - low) % 4 != 0) unit = 2;
        if ((t.first - low) % 2 != 0)
            throw GradingError("exponents " + std::to_string(low) + " and " + std::to_string(t.first) +
                               " lie in incompatible residue classes");
    }
    q.half_step = unit == 2;
    q.residue = ((low % unit) + unit) % unit;
    for (const auto& [e, c] : f.terms()) {
        if (c.get_den() != 1) throw GradingError("non-integral coefficient " + c.get_str());
        q.terms[(e - q.residue) / unit] = c.get_num();
    }
    return q;
}

int QPoly::min_key() const {
    if (terms.empty()) throw UndefinedDegreeError();
    return terms.begin()->first;
}

std::vector<Integer> QPoly::coefficients() const {
    std::vector<Integer> out;
    if (terms.empty()) return out;
    const int lo = terms.begin()->first, hi = terms.rbegin()->first;
    out.assign(static_cast<std::size_t>(hi - lo + 1), Integer(0));
    for (const auto& [k, c] : terms) out[static_cast<std::size_t>(k - lo)] = c;
    return out;
}

std::string QPoly::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const int unit = half_step ? 2 : 4;
    for (const auto& [k, c] : terms) {
        const int num = k * unit + residue;
        os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
        first = false;
        Integer mag = abs(c);
        if (num == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "q";
        if (num % 4 == 0) {
            if (num != 4) os << "^" << num / 4;
        } else if (num % 2 == 0) {
            os << "^(" << num / 2 << "/2)";
        } else {
            os << "^(" << num << "/4)";
        }
    }
    return os.str();
}

std::string CoeffList::to_string(const std::string& sep) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? sep : "") << coeffs[i];
    return os.str();
}

}  // namespace skein
