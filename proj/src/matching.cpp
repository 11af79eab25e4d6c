#include "skein/matching.hpp"

#include "skein/errors.hpp"

#include <sstream>

namespace skein {

Matching::Matching(int bottom, int top, std::vector<std::uint8_t> partner)
    : bottom_(bottom), top_(top), partner_(std::move(partner)) {
    if (bottom < 0 || top < 0 || bottom + top > 255)
        throw ArityError("matching arity out of range");
    if (static_cast<int>(partner_.size()) != bottom + top)
        throw ArityError("matching partner list has wrong length");
    for (int p = 0; p < size(); ++p) {
        const int q = partner_[static_cast<std::size_t>(p)];
        if (q >= size() || q == p || partner_[static_cast<std::size_t>(q)] != p)
            throw ArityError("matching is not a perfect pairing");
    }
}

Matching Matching::identity(int n) {
    std::vector<std::uint8_t> p(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(n + i);
        p[static_cast<std::size_t>(n + i)] = static_cast<std::uint8_t>(i);
    }
    Matching m;
    m.bottom_ = m.top_ = n;
    m.partner_ = std::move(p);
    return m;
}

Matching Matching::hook(int n, int i) {
    if (i < 1 || i >= n) throw ArityError("hook index out of range");
    Matching m = identity(n);
    auto& p = m.partner_;
    p[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(i);
    p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i - 1);
    p[static_cast<std::size_t>(n + i - 1)] = static_cast<std::uint8_t>(n + i);
    p[static_cast<std::size_t>(n + i)] = static_cast<std::uint8_t>(n + i - 1);
    return m;
}

Matching Matching::from_arcs(int bottom, int top, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::uint8_t> p(static_cast<std::size_t>(bottom + top), 255);
    for (auto [a, b] : arcs) {
        if (a < 0 || b < 0 || a >= bottom + top || b >= bottom + top)
            throw ArityError("arc endpoint out of range");
        p[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
        p[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a);
    }
    Matching m(bottom, top, std::move(p));
    if (!m.is_planar()) throw ArityError("arcs cross");
    return m;
}

int Matching::through_strands() const {
    int t = 0;
    for (int i = 0; i < bottom_; ++i)
        if (partner(i) >= bottom_) ++t;
    return t;
}

bool Matching::is_planar() const {
    // Walk the disk boundary: bottom left to right, then top right to left.
    const int n = size();
    std::vector<int> cyc(static_cast<std::size_t>(n));
    for (int i = 0; i < bottom_; ++i) cyc[static_cast<std::size_t>(i)] = i;
    for (int j = 0; j < top_; ++j) cyc[static_cast<std::size_t>(bottom_ + j)] = bottom_ + top_ - 1 - j;
    std::vector<int> stack;
    for (int pos = 0; pos < n; ++pos) {
        const int p = cyc[static_cast<std::size_t>(pos)];
        const int q = partner(p);
        if (!stack.empty() && stack.back() == q)
            stack.pop_back();
        else
            stack.push_back(p);
    }
    return stack.empty();
}

std::pair<Matching, int> compose(const Matching& f, const Matching& g) {
    if (f.top_ != g.bottom_)
        throw ArityError("compose: top arity " + std::to_string(f.top_) + " does not match bottom arity " +
                         std::to_string(g.bottom_));
    const int a = f.bottom_, b = f.top_, c = g.top_;
    std::vector<std::uint8_t> out(static_cast<std::size_t>(a + c));
    std::vector<char> seen(static_cast<std::size_t>(b), 0);
    // Result point r: bottom r < a is f point r; top r >= a is g point b + (r - a).
    auto walk_from_f = [&](int p) -> int {
        // p: f-point reached through an f-arc's far end
        for (;;) {
            if (p < a) return p;
            int m = p - a;
            seen[static_cast<std::size_t>(m)] = 1;
            int q = g.partner(m);
            if (q >= b) return a + (q - b);
            seen[static_cast<std::size_t>(q)] = 1;
            p = f.partner(a + q);
        }
    };
    auto walk_from_g = [&](int q) -> int {
        for (;;) {
            if (q >= b) return a + (q - b);
            seen[static_cast<std::size_t>(q)] = 1;
            int p = f.partner(a + q);
            if (p < a) return p;
            int m = p - a;
            seen[static_cast<std::size_t>(m)] = 1;
            q = g.partner(m);
        }
    };
    for (int r = 0; r < a; ++r) out[static_cast<std::size_t>(r)] = static_cast<std::uint8_t>(walk_from_f(f.partner(r)));
    for (int j = 0; j < c; ++j)
        out[static_cast<std::size_t>(a + j)] = static_cast<std::uint8_t>(walk_from_g(g.partner(b + j)));
    int loops = 0;
    for (int m = 0; m < b; ++m) {
        if (seen[static_cast<std::size_t>(m)]) continue;
        ++loops;
        int cur = m;
        do {
            seen[static_cast<std::size_t>(cur)] = 1;
            int q = g.partner(cur);  // stays in the middle: all of this component's points are middle points
            seen[static_cast<std::size_t>(q)] = 1;
            cur = f.partner(a + q) - a;
        } while (cur != m);
    }
    Matching res;
    res.bottom_ = a;
    res.top_ = c;
    res.partner_ = std::move(out);
    return {std::move(res), loops};
}

Matching tensor(const Matching& f, const Matching& g) {
    const int fb = f.bottom_, ft = f.top_, gb = g.bottom_, gt = g.top_;
    const int B = fb + gb;
    auto map_f = [&](int p) { return p < fb ? p : B + (p - fb); };
    auto map_g = [&](int p) { return p < gb ? fb + p : B + ft + (p - gb); };
    std::vector<std::uint8_t> out(static_cast<std::size_t>(B + ft + gt));
    for (int p = 0; p < f.size(); ++p) out[static_cast<std::size_t>(map_f(p))] = static_cast<std::uint8_t>(map_f(f.partner(p)));
    for (int p = 0; p < g.size(); ++p) out[static_cast<std::size_t>(map_g(p))] = static_cast<std::uint8_t>(map_g(g.partner(p)));
    Matching res;
    res.bottom_ = B;
    res.top_ = ft + gt;
    res.partner_ = std::move(out);
    return res;
}

int closure_loops(const Matching& f) {
    if (f.bottom_ != f.top_) throw ArityError("closure requires equal arities");
    const int n = f.bottom_;
    std::vector<char> seen(static_cast<std::size_t>(f.size()), 0);
    int loops = 0;
    for (int s = 0; s < f.size(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++loops;
        int p = s;
        do {
            seen[static_cast<std::size_t>(p)] = 1;
            int q = f.partner(p);
            seen[static_cast<std::size_t>(q)] = 1;
            p = q < n ? q + n : q - n;  // around the side
        } while (p != s);
    }
    return loops;
}

Matching Matching::reflected() const {
    auto map = [&](int p) { return p < bottom_ ? top_ + p : p - bottom_; };
    std::vector<std::uint8_t> out(partner_.size());
    for (int p = 0; p < size(); ++p) out[static_cast<std::size_t>(map(p))] = static_cast<std::uint8_t>(map(partner(p)));
    Matching res;
    res.bottom_ = top_;
    res.top_ = bottom_;
    res.partner_ = std::move(out);
    return res;
}

std::string Matching::encode() const {
    std::ostringstream os;
    os << bottom_ << ',' << top_ << ':';
    for (std::size_t i = 0; i < partner_.size(); ++i) os << (i ? "," : "") << int(partner_[i]);
    return os.str();
}

Matching Matching::decode(const std::string& text) {
    int b = 0, t = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (!(is >> b >> c1 >> t >> c2) || c1 != ',' || c2 != ':') throw ParseError("malformed matching '" + text + "'", 0);
    std::vector<std::uint8_t> p;
    int v;
    while (is >> v) {
        p.push_back(static_cast<std::uint8_t>(v));
        char sep;
        if (!(is >> sep)) break;
    }
    Matching m(b, t, std::move(p));
    if (!m.is_planar()) throw ParseError("non-planar matching '" + text + "'", 0);
    return m;
}

std::size_t Matching::hash() const {
    std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(bottom_ * 257 + top_);
    for (auto v : partner_) {
        h ^= v;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

std::uint64_t catalan(int n) {
    std::uint64_t c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

}  // namespace skein
