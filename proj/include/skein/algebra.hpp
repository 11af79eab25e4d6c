#pragma once

#include "skein/laurent.hpp"
#include "skein/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace skein {

// Polynomial in q produced from a Laurent polynomial in A = q^{1/4}.
// The q-exponent of key k is (k*unit + residue)/4 where unit is 4, or 2 when
// half_step is set.
struct QPoly {
    std::map<int, Integer> terms;
    int residue = 0;
    bool half_step = false;

    bool is_zero() const { return terms.empty(); }
    int min_key() const;
    std::vector<Integer> coefficients() const;  // dense from min_key, zeros included
    std::string to_string() const;
};

// Coefficient window anchored at a minimal degree. step is measured in
// A-exponents: 4 for q-units, 1 for raw A-units.
struct CoeffList {
    int anchor = 0;
    int step = 4;
    std::vector<long long> coeffs;
    bool normalized = false;

    std::size_t size() const { return coeffs.size(); }
    std::string to_string(const std::string& sep = ",") const;
    friend bool operator==(const CoeffList& a, const CoeffList& b) {
        return a.anchor == b.anchor && a.step == b.step && a.coeffs == b.coeffs &&
               a.normalized == b.normalized;
    }
};

struct InternalColors {
    int x, y, z;
};

bool is_admissible(int a, int b, int c);
InternalColors internal_colors(int a, int b, int c);  // throws AdmissibilityError

LaurentPoly qpoch4(int n);
LaurentPoly delta(int n);
RationalFn theta(int a, int b, int c);
LaurentPoly fusion_coeff(int n, int i);
LaurentPoly twist_coeff(int a, int b, int c);
// Fusion weight delta(2p)/theta(n,n,2p).
RationalFn fusion_weight(int n, int p);

CoeffList coeff_window(const LaurentPoly& f, std::size_t n, int step = 4);
QPoly substitute_quarter(const LaurentPoly& f);
long long to_integer(const Rational& c);

}  // namespace skein
