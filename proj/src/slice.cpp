#include "skein/slice.hpp"

#include "skein/algebra.hpp"
#include "skein/errors.hpp"

#include <sstream>

namespace skein {

int Slice::in_arity() const {
    switch (kind) {
        case SliceKind::Identity: return 0;
        case SliceKind::Cup: return 0;
        case SliceKind::Cap: return 2;
        case SliceKind::Projector: return n;
        case SliceKind::Merge: return a + b;
        case SliceKind::Split: return c;
        case SliceKind::Crossing: return 2;
        case SliceKind::Custom: return custom->bottom;
    }
    return 0;
}

int Slice::out_arity() const {
    switch (kind) {
        case SliceKind::Identity: return 0;
        case SliceKind::Cup: return 2;
        case SliceKind::Cap: return 0;
        case SliceKind::Projector: return n;
        case SliceKind::Merge: return c;
        case SliceKind::Split: return a + b;
        case SliceKind::Crossing: return 2;
        case SliceKind::Custom: return custom->top;
    }
    return 0;
}

std::string Slice::describe() const {
    std::ostringstream os;
    switch (kind) {
        case SliceKind::Identity: os << "identity"; break;
        case SliceKind::Cup: os << "cup"; break;
        case SliceKind::Cap: os << "cap"; break;
        case SliceKind::Projector: os << "projector(" << n << ")"; break;
        case SliceKind::Merge: os << "merge(" << a << "," << b << "->" << c << ")"; break;
        case SliceKind::Split: os << "split(" << c << "->" << a << "," << b << ")"; break;
        case SliceKind::Crossing: os << "crossing(" << sign << ")"; break;
        case SliceKind::Custom: os << "custom(" << custom->bottom << "->" << custom->top << ")"; break;
    }
    os << " at " << pos;
    return os.str();
}

ScaledMorphism crossing_morphism(int sign) {
    if (sign != 1 && sign != -1) throw SkeinError("crossing sign must be +1 or -1");
    ScaledMorphism m;
    m.bottom = m.top = 2;
    m.add(Matching::identity(2), LaurentPoly::monomial(sign < 0 ? -1 : 1));
    m.add(Matching::hook(2, 1), LaurentPoly::monomial(sign < 0 ? 1 : -1));
    return m;
}

ScaledMorphism cabled_crossing_morphism(int n, int sign) {
    ScaledMorphism acc = ScaledMorphism::identity(2 * n);
    const ScaledMorphism x = crossing_morphism(sign);
    for (int i = n - 1; i >= 0; --i)
        for (int q = i; q < i + n; ++q) acc = compose(acc, pad(x, q, 2 * n - q - 2));
    return acc;
}

Matching clasp_smoothing(int n, int i) {
    if (i < 0 || i > n) throw RangeError("clasp smoothing index " + std::to_string(i) + " outside 0.." + std::to_string(n));
    std::vector<std::pair<int, int>> arcs;
    const int w = 2 * n;
    for (int t = 0; t < n - i; ++t) {
        arcs.emplace_back(n - 1 - t, n + t);
        arcs.emplace_back(w + n - 1 - t, w + n + t);
    }
    for (int j = 0; j < i; ++j) {
        arcs.emplace_back(j, w + j);
        arcs.emplace_back(w - 1 - j, 2 * w - 1 - j);
    }
    return Matching::from_arcs(w, w, arcs);
}

SliceProgram& SliceProgram::append(const Slice& s) {
    slices_.push_back(s);
    width_ += s.out_arity() - s.in_arity();
    if (width_ > max_width_) max_width_ = width_;
    return *this;
}

SliceProgram& SliceProgram::identity() {
    Slice s;
    s.kind = SliceKind::Identity;
    s.n = width_;
    return append(s);
}

SliceProgram& SliceProgram::cup(int pos) {
    Slice s;
    s.kind = SliceKind::Cup;
    s.pos = pos;
    return append(s);
}

SliceProgram& SliceProgram::cap(int pos) {
    Slice s;
    s.kind = SliceKind::Cap;
    s.pos = pos;
    return append(s);
}

SliceProgram& SliceProgram::nested_cups(int n, int pos) {
    for (int t = 0; t < n; ++t) cup(pos + t);
    return *this;
}

SliceProgram& SliceProgram::nested_caps(int n, int pos) {
    for (int t = n - 1; t >= 0; --t) cap(pos + t);
    return *this;
}

SliceProgram& SliceProgram::projector(int n, int pos) {
    Slice s;
    s.kind = SliceKind::Projector;
    s.pos = pos;
    s.n = n;
    return append(s);
}

SliceProgram& SliceProgram::merge(int a, int b, int c, int pos) {
    if (!is_admissible(a, b, c)) throw AdmissibilityError(a, b, c);
    Slice s;
    s.kind = SliceKind::Merge;
    s.pos = pos;
    s.a = a;
    s.b = b;
    s.c = c;
    return append(s);
}

SliceProgram& SliceProgram::split(int a, int b, int c, int pos) {
    if (!is_admissible(a, b, c)) throw AdmissibilityError(a, b, c);
    Slice s;
    s.kind = SliceKind::Split;
    s.pos = pos;
    s.a = a;
    s.b = b;
    s.c = c;
    return append(s);
}

SliceProgram& SliceProgram::crossing(int sign, int pos) {
    Slice s;
    s.kind = SliceKind::Crossing;
    s.pos = pos;
    s.sign = sign;
    return append(s);
}

SliceProgram& SliceProgram::cabled_crossing(int n, int sign, int pos) {
    for (int i = n - 1; i >= 0; --i)
        for (int q = i; q < i + n; ++q) crossing(sign, pos + q);
    return *this;
}

SliceProgram& SliceProgram::custom(std::shared_ptr<const ScaledMorphism> m, int pos) {
    Slice s;
    s.kind = SliceKind::Custom;
    s.pos = pos;
    s.custom = std::move(m);
    return append(s);
}

namespace {

ScaledMorphism local_morphism(const Slice& s) {
    switch (s.kind) {
        case SliceKind::Identity: return ScaledMorphism::identity(0);
        case SliceKind::Cup: return ScaledMorphism::single(Matching::from_arcs(0, 2, {{0, 1}}));
        case SliceKind::Cap: return ScaledMorphism::single(Matching::from_arcs(2, 0, {{0, 1}}));
        case SliceKind::Projector: return *jones_wenzl_scaled(s.n);
        case SliceKind::Merge: return ScaledMorphism::single(vertex_matching(s.a, s.b, s.c));
        case SliceKind::Split: return ScaledMorphism::single(vertex_matching(s.a, s.b, s.c).reflected());
        case SliceKind::Crossing: return crossing_morphism(s.sign);
        case SliceKind::Custom: return *s.custom;
    }
    return ScaledMorphism::identity(0);
}

}  // namespace

ScaledMorphism evaluate_open(const SliceProgram& program, const EvalOptions& opts) {
    ScaledMorphism state = ScaledMorphism::identity(0);
    int w = 0;
    const auto& slices = program.slices();
    for (std::size_t idx = 0; idx < slices.size(); ++idx) {
        const Slice& s = slices[idx];
        if (s.kind == SliceKind::Identity) continue;
        const int in = s.in_arity();
        if (s.pos < 0 || s.pos + in > w)
            throw ArityError("arity break at slice " + std::to_string(idx) + " (" + s.describe() + "): width is " +
                             std::to_string(w));
        if (s.kind == SliceKind::Projector && s.n <= 1) continue;
        ScaledMorphism local = pad(local_morphism(s), s.pos, w - s.pos - in);
        state = compose(state, local);
        w = state.top;
        if (state.terms.size() > opts.max_states)
            throw BudgetError("max-states", static_cast<long long>(opts.max_states),
                              static_cast<long long>(state.terms.size()));
    }
    return state;
}

RationalFn evaluate(const SliceProgram& program, const EvalOptions& opts) {
    if (!program.closed())
        throw ArityError("program is not closed: final width " + std::to_string(program.width()));
    ScaledMorphism state = evaluate_open(program, opts);
    if (state.top != 0) throw ArityError("program is not closed");
    auto it = state.terms.find(Matching::identity(0));
    if (it == state.terms.end()) return RationalFn();
    return RationalFn(it->second, state.den);
}

SliceProgram theta_program(int a, int b, int c) {
    if (!is_admissible(a, b, c)) throw AdmissibilityError(a, b, c);
    SliceProgram p;
    p.nested_cups(c, 0);
    p.projector(c, 0);
    p.split(a, b, c, c);
    p.projector(a, c);
    p.projector(b, c + a);
    p.merge(a, b, c, c);
    p.nested_caps(c, 0);
    return p;
}

SliceProgram drum(int n, const std::vector<int>& rungs) {
    const int r = static_cast<int>(rungs.size());
    if (r == 0) throw RangeError("drum needs at least one rung");
    for (int c : rungs)
        if (!is_admissible(n, n, c)) throw AdmissibilityError(n, n, c);
    SliceProgram p;
    p.nested_cups(n, 0);
    for (int i = 1; i < r; ++i) p.nested_cups(n, (2 * i - 1) * n);
    for (int i = 0; i < r; ++i) p.projector(n, 2 * i * n);
    for (int i = 0; i < r; ++i) {
        const int pos = 2 * i * n;
        const int c = rungs[static_cast<std::size_t>(i)];
        p.merge(n, n, c, pos);
        p.projector(c, pos);
        p.split(n, n, c, pos);
    }
    for (int i = 0; i < r; ++i) p.projector(n, 2 * i * n);
    for (int i = r - 1; i >= 1; --i) p.nested_caps(n, (2 * i - 1) * n);
    p.nested_caps(n, 0);
    return p;
}

SliceProgram pretzel_program(const std::vector<int>& counts, int n, int socket_p) {
    const int r = static_cast<int>(counts.size());
    if (r == 0) throw RangeError("pretzel needs at least one region");
    if (n < 1) throw RangeError("color must be positive");
    if (socket_p >= 0 && socket_p > n) throw RangeError("socket color out of range");
    SliceProgram p;
    p.nested_cups(n, 0);
    for (int i = 1; i < r; ++i) p.nested_cups(n, (2 * i - 1) * n);
    for (int i = 0; i < r; ++i) p.projector(n, 2 * i * n);
    for (int i = 0; i < r; ++i) {
        const int pos = 2 * i * n;
        if (i == 0 && socket_p >= 0) {
            p.merge(n, n, 2 * socket_p, pos);
            p.projector(2 * socket_p, pos);
            p.split(n, n, 2 * socket_p, pos);
            continue;
        }
        for (int k = 0; k < counts[static_cast<std::size_t>(i)]; ++k) p.cabled_crossing(n, -1, pos);
    }
    if (socket_p >= 0)
        for (int i = 0; i < r; ++i) p.projector(n, 2 * i * n);
    for (int i = r - 1; i >= 1; --i) p.nested_caps(n, (2 * i - 1) * n);
    p.nested_caps(n, 0);
    return p;
}

}  // namespace skein
