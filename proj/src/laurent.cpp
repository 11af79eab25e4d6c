#include "skein/laurent.hpp"

#include "skein/errors.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace skein {

namespace {

// Dense ascending coefficient vector of an ordinary polynomial, with the
// exponent stride compressed away.
struct Dense {
    int low = 0;     // exponent of index 0
    int stride = 1;  // exponent step between indices
    std::vector<Rational> c;
};

Dense to_dense(const LaurentPoly& f, int stride) {
    Dense d;
    d.low = f.min_degree();
    d.stride = stride;
    d.c.assign(static_cast<std::size_t>((f.max_degree() - d.low) / stride + 1), Rational(0));
    for (const auto& [e, v] : f.terms()) d.c[static_cast<std::size_t>((e - d.low) / stride)] = v;
    return d;
}

LaurentPoly from_dense(const std::vector<Rational>& c, int low, int stride) {
    std::vector<LaurentPoly::Term> t;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (sgn(c[i]) != 0) t.emplace_back(low + static_cast<int>(i) * stride, c[i]);
    return LaurentPoly::from_terms(std::move(t));
}

void trim(std::vector<Rational>& c) {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

// Remainder of a modulo b (dense ascending, b nonzero with nonzero top).
std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const Rational& lead = b.back();
    Rational q;
    while (a.size() >= b.size()) {
        q = a.back() / lead;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= q * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

int exponent_stride(const LaurentPoly& f, int base) {
    int g = 0;
    for (const auto& t : f.terms()) g = std::gcd(g, t.first - base);
    return g;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.emplace_back(0, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (sgn(c) != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& c) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_.emplace_back(exponent, c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else
            p.terms_.push_back(std::move(t));
        if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
    }
    return p;
}

bool LaurentPoly::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.second.get_den() == 1; });
}

int LaurentPoly::min_degree() const {
    if (terms_.empty()) throw UndefinedDegreeError();
    return terms_.front().first;
}

int LaurentPoly::max_degree() const {
    if (terms_.empty()) throw UndefinedDegreeError();
    return terms_.back().first;
}

Rational LaurentPoly::coeff(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return 0;
}

const Rational& LaurentPoly::lowest_coeff() const {
    if (terms_.empty()) throw UndefinedDegreeError();
    return terms_.front().second;
}

const Rational& LaurentPoly::highest_coeff() const {
    if (terms_.empty()) throw UndefinedDegreeError();
    return terms_.back().second;
}

int LaurentPoly::stride() const {
    if (terms_.empty()) return 0;
    return exponent_stride(*this, terms_.front().first);
}

LaurentPoly LaurentPoly::shifted(int s) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.first += s;
    return p;
}

LaurentPoly LaurentPoly::mirror() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
    return p;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result(1L), base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (sgn(c) == 0) return {};
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.second *= c;
    return p;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, const Rational& c, int shift) {
    if (o.terms_.empty() || sgn(c) == 0) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first + shift)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first + shift < a->first) {
            out.emplace_back(b->first + shift, b->second * c);
            ++b;
        } else {
            Rational v = a->second + b->second * c;
            if (sgn(v) != 0) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    add_scaled(o, 1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    add_scaled(o, -1);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_monomial()) return b.scaled(a.terms_[0].second).shifted(a.terms_[0].first);
    if (b.is_monomial()) return a.scaled(b.terms_[0].second).shifted(b.terms_[0].first);
    int g = std::gcd(a.stride(), b.stride());
    const int alow = a.min_degree(), blow = b.min_degree();
    const std::size_t len = static_cast<std::size_t>((a.max_degree() - alow + b.max_degree() - blow) / g + 1);
    std::vector<Rational> acc(len);
    Rational prod;
    for (const auto& [ea, ca] : a.terms_) {
        const std::size_t ia = static_cast<std::size_t>((ea - alow) / g);
        for (const auto& [eb, cb] : b.terms_) {
            mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            Rational& slot = acc[ia + static_cast<std::size_t>((eb - blow) / g)];
            mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), prod.get_mpq_t());
        }
    }
    return from_dense(acc, alow + blow, g);
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (!unit) os << mag << "*";
        os << "A";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::string LaurentPoly::serialize() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << ' ';
        first = false;
        os << e << ':' << c;
    }
    return os.str();
}

LaurentPoly LaurentPoly::deserialize(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    std::vector<Term> terms;
    while (is >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw ParseError("malformed polynomial term '" + tok + "'", 0);
        int e = std::stoi(tok.substr(0, colon));
        Rational c;
        if (c.set_str(tok.substr(colon + 1), 10) != 0)
            throw ParseError("malformed coefficient '" + tok + "'", colon + 1);
        c.canonicalize();
        terms.emplace_back(e, c);
    }
    return from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw RemainderError("division by the zero polynomial");
    if (f.is_zero()) return {};
    if (g.is_monomial()) {
        const auto& [e, c] = g.terms().front();
        return f.scaled(1 / c).shifted(-e);
    }
    const int gs = g.stride();
    const int base = f.min_degree();
    int fs = exponent_stride(f, base);
    const int s = fs == 0 ? gs : std::gcd(fs, gs);
    Dense a = to_dense(f, s);
    Dense b = to_dense(g, s);
    if (a.c.size() < b.c.size())
        throw RemainderError("non-exact division: " + f.to_string() + " by " + g.to_string());
    const std::size_t nq = a.c.size() - b.c.size() + 1;
    std::vector<Rational> q(nq);
    const Rational& lead = b.c.back();
    for (std::size_t k = nq; k-- > 0;) {
        const std::size_t top = k + b.c.size() - 1;
        if (sgn(a.c[top]) == 0) continue;
        q[k] = a.c[top] / lead;
        for (std::size_t i = 0; i < b.c.size(); ++i) a.c[k + i] -= q[k] * b.c[i];
    }
    for (const auto& r : a.c)
        if (sgn(r) != 0) throw RemainderError("non-exact division: " + f.to_string() + " by " + g.to_string());
    return from_dense(q, a.low - b.low, s);
}

LaurentPoly poly_gcd(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero() && g.is_zero()) return {};
    if (f.is_zero() || g.is_zero()) {
        const LaurentPoly& h = f.is_zero() ? g : f;
        return h.shifted(-h.min_degree()).scaled(1 / h.lowest_coeff());
    }
    if (f.is_monomial() || g.is_monomial()) return LaurentPoly(1L);
    const int s = std::gcd(f.stride(), g.stride());
    Dense a = to_dense(f, s);
    Dense b = to_dense(g, s);
    std::vector<Rational> x = std::move(a.c), y = std::move(b.c);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        Rational lead = y.back();
        for (auto& v : y) v /= lead;
        auto r = poly_mod(std::move(x), y);
        x = std::move(y);
        y = std::move(r);
    }
    LaurentPoly h = from_dense(x, 0, s);
    return h.shifted(-h.min_degree()).scaled(1 / h.lowest_coeff());
}

int min_degree(const LaurentPoly& f) { return f.min_degree(); }

LaurentPoly mirror(const LaurentPoly& f) { return f.mirror(); }

const LaurentPoly& loop_value() {
    static const LaurentPoly d = LaurentPoly::from_terms({{-2, Rational(-1)}, {2, Rational(-1)}});
    return d;
}

LaurentPoly loop_power(int k) {
    static std::mutex mu;
    static std::vector<LaurentPoly> cache{LaurentPoly(1L)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * loop_value());
    return cache[static_cast<std::size_t>(k)];
}

}  // namespace skein
