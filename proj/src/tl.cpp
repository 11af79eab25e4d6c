#include "skein/tl.hpp"

#include "skein/algebra.hpp"
#include "skein/errors.hpp"

#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

namespace skein {

namespace {

const char* kCacheMagic = "skein-jones-wenzl-cache";
const int kCacheVersion = 1;
const char* kDeltaTag = "-A^2-A^-2";

LaurentPoly lcm_of(const std::vector<LaurentPoly>& dens) {
    LaurentPoly l(1L);
    std::vector<const LaurentPoly*> seen;
    for (const auto& d : dens) {
        bool dup = false;
        for (auto* s : seen)
            if (*s == d) dup = true;
        if (dup) continue;
        seen.push_back(&d);
        if (d.is_monomial()) continue;
        LaurentPoly g = poly_gcd(l, d);
        l = l * exact_div(d, g);
    }
    return l;
}

}  // namespace

ScaledMorphism ScaledMorphism::identity(int n) { return single(Matching::identity(n)); }

ScaledMorphism ScaledMorphism::single(const Matching& m, const LaurentPoly& coeff) {
    ScaledMorphism s;
    s.bottom = m.bottom();
    s.top = m.top();
    s.add(m, coeff);
    return s;
}

void ScaledMorphism::add(const Matching& m, const LaurentPoly& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
}

ScaledMorphism compose(const ScaledMorphism& f, const ScaledMorphism& g) {
    if (f.top != g.bottom)
        throw ArityError("compose: top arity " + std::to_string(f.top) + " does not match bottom arity " +
                         std::to_string(g.bottom));
    ScaledMorphism out;
    out.bottom = f.bottom;
    out.top = g.top;
    out.den = f.den * g.den;
    for (const auto& [mf, cf] : f.terms)
        for (const auto& [mg, cg] : g.terms) {
            auto [m, loops] = compose(mf, mg);
            LaurentPoly c = cf * cg;
            if (loops) c *= loop_power(loops);
            out.add(m, c);
        }
    return out;
}

ScaledMorphism tensor(const ScaledMorphism& f, const ScaledMorphism& g) {
    ScaledMorphism out;
    out.bottom = f.bottom + g.bottom;
    out.top = f.top + g.top;
    out.den = f.den * g.den;
    for (const auto& [mf, cf] : f.terms)
        for (const auto& [mg, cg] : g.terms) out.add(tensor(mf, mg), cf * cg);
    return out;
}

ScaledMorphism pad(const ScaledMorphism& f, int left, int right) {
    if (left == 0 && right == 0) return f;
    ScaledMorphism out;
    out.bottom = f.bottom + left + right;
    out.top = f.top + left + right;
    out.den = f.den;
    const Matching l = Matching::identity(left), r = Matching::identity(right);
    for (const auto& [m, c] : f.terms) out.terms.emplace(tensor(tensor(l, m), r), c);
    return out;
}

TLMorphism TLMorphism::identity(int n) { return from_matching(Matching::identity(n)); }

TLMorphism TLMorphism::hook(int n, int i) { return from_matching(Matching::hook(n, i)); }

TLMorphism TLMorphism::from_matching(const Matching& m, const RationalFn& c) {
    TLMorphism t(m.bottom(), m.top());
    t.add(m, c);
    return t;
}

TLMorphism TLMorphism::from_scaled(const ScaledMorphism& s) {
    TLMorphism t(s.bottom, s.top);
    for (const auto& [m, c] : s.terms) t.add(m, RationalFn(c, s.den));
    return t;
}

RationalFn TLMorphism::coeff(const Matching& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RationalFn() : it->second;
}

void TLMorphism::add(const Matching& m, const RationalFn& c) {
    if (m.bottom() != bottom_ || m.top() != top_) throw ArityError("matching arity differs from morphism arity");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TLMorphism& TLMorphism::operator+=(const TLMorphism& o) {
    if (o.bottom_ != bottom_ || o.top_ != top_) throw ArityError("sum of morphisms with different arities");
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

TLMorphism TLMorphism::operator*(const RationalFn& c) const {
    TLMorphism t(bottom_, top_);
    if (c.is_zero()) return t;
    for (const auto& [m, v] : terms_) t.terms_.emplace(m, v * c);
    return t;
}

bool operator==(const TLMorphism& a, const TLMorphism& b) {
    if (a.bottom_ != b.bottom_ || a.top_ != b.top_ || a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [m, c] : a.terms_) {
        auto it = b.terms_.find(m);
        if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
}

ScaledMorphism TLMorphism::scaled() const {
    std::vector<LaurentPoly> dens;
    for (const auto& [m, c] : terms_) dens.push_back(c.den());
    ScaledMorphism s;
    s.bottom = bottom_;
    s.top = top_;
    s.den = lcm_of(dens);
    for (const auto& [m, c] : terms_) s.terms.emplace(m, c.num() * exact_div(s.den, c.den()));
    return s;
}

std::string TLMorphism::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        os << (first ? "" : " + ") << "(" << c.to_string() << ")[" << m.encode() << "]";
        first = false;
    }
    return first ? "0" : os.str();
}

TLMorphism compose(const TLMorphism& f, const TLMorphism& g) {
    return TLMorphism::from_scaled(compose(f.scaled(), g.scaled()));
}

TLMorphism tensor(const TLMorphism& f, const TLMorphism& g) {
    return TLMorphism::from_scaled(tensor(f.scaled(), g.scaled()));
}

RationalFn closure(const ScaledMorphism& f) {
    if (f.bottom != f.top) throw ArityError("closure requires equal arities");
    LaurentPoly num;
    for (const auto& [m, c] : f.terms) num += c * loop_power(closure_loops(m));
    return RationalFn(num, f.den);
}

RationalFn closure(const TLMorphism& f) {
    if (f.bottom_arity() != f.top_arity()) throw ArityError("closure requires equal arities");
    return closure(f.scaled());
}

// ---------------------------------------------------------------------------
// Jones-Wenzl projectors

namespace {

struct ProjectorStore {
    std::mutex mu;
    std::map<int, std::shared_ptr<const ScaledMorphism>> memo;
    std::string dir;
};

ProjectorStore& store() {
    static ProjectorStore s;
    return s;
}

std::string cache_file(const std::string& dir, int n) {
    return (std::filesystem::path(dir) / ("jones_wenzl_" + std::to_string(n) + ".txt")).string();
}

std::shared_ptr<ScaledMorphism> read_cache(const std::string& dir, int n) {
    std::ifstream in(cache_file(dir, n));
    if (!in) return nullptr;
    try {
        std::string magic, tag, line;
        int version = 0, nn = -1;
        std::size_t count = 0;
        in >> magic >> version;
        if (magic != kCacheMagic || version != kCacheVersion) return nullptr;
        in >> tag >> line;
        if (tag != "delta" || line != kDeltaTag) return nullptr;
        in >> tag >> nn;
        if (tag != "n" || nn != n) return nullptr;
        std::getline(in, line);
        auto s = std::make_shared<ScaledMorphism>();
        s->bottom = s->top = n;
        if (!std::getline(in, line) || line.rfind("den ", 0) != 0) return nullptr;
        s->den = LaurentPoly::deserialize(line.substr(4));
        in >> tag >> count;
        if (tag != "terms" || count != catalan(n)) return nullptr;
        std::getline(in, line);
        for (std::size_t i = 0; i < count; ++i) {
            if (!std::getline(in, line)) return nullptr;
            auto bar = line.find(" | ");
            if (bar == std::string::npos) return nullptr;
            Matching m = Matching::decode(line.substr(0, bar));
            if (m.bottom() != n || m.top() != n) return nullptr;
            s->terms.emplace(m, LaurentPoly::deserialize(line.substr(bar + 3)));
        }
        if (s->terms.size() != count || s->den.is_zero()) return nullptr;
        return s;
    } catch (const std::exception&) {
        return nullptr;
    }
}

void write_cache(const std::string& dir, int n, const ScaledMorphism& s) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const std::string path = cache_file(dir, n);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << kCacheMagic << ' ' << kCacheVersion << '\n';
        out << "delta " << kDeltaTag << '\n';
        out << "n " << n << '\n';
        out << "den " << s.den.serialize() << '\n';
        out << "terms " << s.terms.size() << '\n';
        std::map<Matching, const LaurentPoly*> sorted;
        for (const auto& [m, c] : s.terms) sorted.emplace(m, &c);
        for (const auto& [m, c] : sorted) out << m.encode() << " | " << c->serialize() << '\n';
    }
    std::filesystem::rename(tmp, path, ec);
}

// E_j = e_{n-1} e_{n-2} ... e_j on n strands (e_j applied first); E_n = id.
Matching hook_chain(int n, int j) {
    Matching m = Matching::identity(n);
    for (int i = j; i <= n - 1; ++i) m = compose(m, Matching::hook(n, i)).first;
    return m;
}

std::shared_ptr<ScaledMorphism> build_next(const ScaledMorphism& prev, int n) {
    // f_n = (f_{n-1} ⊗ 1) * sum_j a_j E_j with a_j = (-1)^{n-j} delta(j-1)/delta(n-1).
    auto out = std::make_shared<ScaledMorphism>();
    out->bottom = out->top = n;
    out->den = prev.den * delta(n - 1);
    std::vector<Matching> chains;
    std::vector<LaurentPoly> weights;
    for (int j = 1; j <= n; ++j) {
        chains.push_back(hook_chain(n, j));
        weights.push_back(delta(j - 1).scaled((n - j) % 2 == 0 ? 1 : -1));
    }
    const Matching one = Matching::identity(1);
    for (const auto& [t, c] : prev.terms) {
        const Matching t1 = tensor(t, one);
        for (int j = 1; j <= n; ++j) {
            auto [m, loops] = compose(chains[static_cast<std::size_t>(j - 1)], t1);
            LaurentPoly coef = c * weights[static_cast<std::size_t>(j - 1)];
            if (loops) coef *= loop_power(loops);
            out->add(m, coef);
        }
    }
    return out;
}

}  // namespace

void set_projector_cache_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lock(store().mu);
    store().dir = dir;
}

std::string projector_cache_dir() {
    std::lock_guard<std::mutex> lock(store().mu);
    return store().dir;
}

void clear_projector_memo() {
    std::lock_guard<std::mutex> lock(store().mu);
    store().memo.clear();
}

std::shared_ptr<const ScaledMorphism> jones_wenzl_scaled(int n) {
    if (n < 0) throw RangeError("jones_wenzl: negative size " + std::to_string(n));
    auto& st = store();
    std::lock_guard<std::mutex> lock(st.mu);
    auto it = st.memo.find(n);
    if (it != st.memo.end()) return it->second;
    // Find the largest memoized or cached projector below n, then recurse upward.
    int start = n;
    std::shared_ptr<const ScaledMorphism> cur;
    while (start >= 0) {
        auto m = st.memo.find(start);
        if (m != st.memo.end()) {
            cur = m->second;
            break;
        }
        if (start <= 1) {
            cur = std::make_shared<ScaledMorphism>(ScaledMorphism::identity(start));
            st.memo[start] = cur;
            break;
        }
        if (!st.dir.empty()) {
            if (auto c = read_cache(st.dir, start)) {
                cur = c;
                st.memo[start] = cur;
                break;
            }
        }
        --start;
    }
    for (int k = start + 1; k <= n; ++k) {
        auto next = build_next(*cur, k);
        cur = next;
        st.memo[k] = cur;
        if (!st.dir.empty()) write_cache(st.dir, k, *next);
    }
    return cur;
}

TLMorphism jones_wenzl(int n) {
    if (n < 1) throw RangeError("jones_wenzl requires n >= 1, got " + std::to_string(n));
    return TLMorphism::from_scaled(*jones_wenzl_scaled(n));
}

Matching vertex_matching(int a, int b, int c) {
    const auto [x, y, z] = internal_colors(a, b, c);
    std::vector<std::pair<int, int>> arcs;
    const int bottom = a + b;
    for (int i = 0; i < x; ++i) arcs.emplace_back(a - 1 - i, a + i);
    for (int i = 0; i < y; ++i) arcs.emplace_back(i, bottom + i);
    for (int i = 0; i < z; ++i) arcs.emplace_back(a + x + i, bottom + y + i);
    return Matching::from_arcs(bottom, c, arcs);
}

TLMorphism vertex_morphism(int a, int b, int c, VertexOrientation o) {
    Matching bare = vertex_matching(a, b, c);
    auto proj = [](int n) { return n == 0 ? ScaledMorphism::identity(0) : *jones_wenzl_scaled(n); };
    ScaledMorphism ab = tensor(proj(a), proj(b));
    ScaledMorphism cc = proj(c);
    if (o == VertexOrientation::Merge)
        return TLMorphism::from_scaled(compose(compose(ab, ScaledMorphism::single(bare)), cc));
    return TLMorphism::from_scaled(compose(compose(cc, ScaledMorphism::single(bare.reflected())), ab));
}

}  // namespace skein
