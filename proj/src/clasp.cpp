#include "skein/clasp.hpp"

#include "skein/errors.hpp"

namespace skein {

int clasped_index(const Matching& m, int n) {
    const int w = 2 * n;
    int caps = 0, cups = 0;
    for (int pt = 0; pt < 2 * w; ++pt) {
        const int q = m.partner(pt);
        if (q < pt) continue;
        const bool pin = pt < w, qin = q < w;
        if (pin != qin) continue;
        const int gp = (pin ? pt : pt - w) < n, gq = (qin ? q : q - w) < n;
        if (gp == gq) return -1;
        (pin ? caps : cups) += 1;
    }
    if (caps != cups) throw SkeinError("clasped element with unbalanced turnbacks");
    return caps;
}

Matching ClaspedAlgebra::basis_matching(int n, int j) {
    const int w = 2 * n;
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < j; ++i) {
        arcs.emplace_back(n - 1 - i, n + i);
        arcs.emplace_back(w + n - 1 - i, w + n + i);
    }
    for (int k = 0; k < n - j; ++k) {
        arcs.emplace_back(k, w + k);
        arcs.emplace_back(w - 1 - k, 2 * w - 1 - k);
    }
    return Matching::from_arcs(w, w, arcs);
}

ClaspedAlgebra::ClaspedAlgebra(int n) : n_(n) {
    if (n < 1) throw RangeError("clasped algebra needs a positive color");
    const int dim = n + 1;
    const ScaledMorphism proj = tensor(*jones_wenzl_scaled(n), *jones_wenzl_scaled(n));
    std::vector<Matching> basis;
    for (int j = 0; j <= n; ++j) basis.push_back(basis_matching(n, j));

    structure_.assign(dim, std::vector<std::vector<LaurentPoly>>(dim, std::vector<LaurentPoly>(dim)));
    trace_.assign(dim, LaurentPoly());
    den_struct_ = den_trace_ = proj.den;
    for (const auto& [s, coeff] : proj.terms) {
        for (int a = 0; a < dim; ++a) {
            auto [left, l1] = compose(basis[a], s);
            trace_[a] += coeff * loop_power(l1 + closure_loops(left));
            for (int b = 0; b < dim; ++b) {
                auto [full, l2] = compose(left, basis[b]);
                const int c = clasped_index(full, n);
                if (c >= 0) structure_[a][b][c] += coeff * loop_power(l1 + l2);
            }
        }
    }

    for (int p = 0; p <= n; ++p) {
        Vec v;
        v.num.assign(dim, LaurentPoly());
        if (p == 0) {
            v.num[0] = LaurentPoly(1L);
            rungs_.push_back(std::move(v));
            continue;
        }
        const auto box = jones_wenzl_scaled(2 * p);
        const int w = 2 * n, out = 2 * n;
        auto place = [&](int pt) {
            if (pt < p) return n + p - 1 - pt;
            if (pt < 2 * p) return out + n + (pt - p);
            const int t = pt - 2 * p;
            if (t < p) return n - p + t;
            return out + n - 1 - (t - p);
        };
        for (const auto& [m, coeff] : box->terms) {
            std::vector<std::uint8_t> partner(static_cast<std::size_t>(2 * w));
            for (int k = 0; k < n - p; ++k) {
                partner[k] = static_cast<std::uint8_t>(out + k);
                partner[out + k] = static_cast<std::uint8_t>(k);
                partner[w - 1 - k] = static_cast<std::uint8_t>(out + w - 1 - k);
                partner[out + w - 1 - k] = static_cast<std::uint8_t>(w - 1 - k);
            }
            for (int pt = 0; pt < 4 * p; ++pt)
                partner[static_cast<std::size_t>(place(pt))] = static_cast<std::uint8_t>(place(m.partner(pt)));
            const int j = clasped_index(Matching(w, w, std::move(partner)), n);
            if (j >= 0) v.num[j] += coeff;
        }
        v.den = box->den;
        rungs_.push_back(std::move(v));
    }
}

ClaspedAlgebra::Vec ClaspedAlgebra::multiply(const Vec& x, const Vec& y) const {
    const int dim = n_ + 1;
    Vec r;
    r.num.assign(dim, LaurentPoly());
    for (int a = 0; a < dim; ++a) {
        if (x.num[a].is_zero()) continue;
        for (int b = 0; b < dim; ++b) {
            if (y.num[b].is_zero()) continue;
            const LaurentPoly xy = x.num[a] * y.num[b];
            for (int c = 0; c < dim; ++c)
                if (!structure_[a][b][c].is_zero()) r.num[c] += xy * structure_[a][b][c];
        }
    }
    r.den = x.den * y.den * den_struct_;
    return r;
}

const ClaspedAlgebra::Vec& ClaspedAlgebra::rung(int p) const {
    if (p < 0 || p > n_)
        throw AdmissibilityError(n_, n_, 2 * p);
    return rungs_[static_cast<std::size_t>(p)];
}

std::vector<RationalFn> ClaspedAlgebra::rung_element(int p) const {
    const Vec& v = rung(p);
    std::vector<RationalFn> out;
    for (const auto& c : v.num) out.emplace_back(c, v.den);
    return out;
}

RationalFn ClaspedAlgebra::drum_value(const std::vector<int>& ps) const {
    if (ps.empty()) throw RangeError("drum needs at least one rung");
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = memo_.find(ps);
        if (it != memo_.end()) return it->second;
    }
    Vec v = rung(ps[0]);
    for (std::size_t i = 1; i < ps.size(); ++i) v = multiply(v, rung(ps[i]));
    LaurentPoly num;
    for (int c = 0; c <= n_; ++c) num += v.num[c] * trace_[c];
    RationalFn value = RationalFn(num, v.den * den_trace_).reduced();
    std::lock_guard<std::mutex> lock(memo_mu_);
    memo_.emplace(ps, value);
    return value;
}

std::shared_ptr<const ClaspedAlgebra> ClaspedAlgebra::get(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const ClaspedAlgebra>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    auto alg = std::make_shared<const ClaspedAlgebra>(n);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, alg).first->second;
}

}  // namespace skein
