#include "skein/stability.hpp"

#include "skein/errors.hpp"
#include "skein/parallel.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace skein {

CoeffList normalize(const CoeffList& c) {
    if (c.coeffs.empty()) throw RangeError("cannot normalize an empty coefficient list");
    if (c.coeffs.front() == 0) throw RangeError("coefficient list must start at a nonzero coefficient");
    CoeffList out = c;
    out.anchor = 0;
    out.normalized = true;
    if (out.coeffs.front() < 0)
        for (auto& x : out.coeffs) x = -x;
    return out;
}

bool n_equivalent(const CoeffList& a, const CoeffList& b, std::size_t n) {
    const std::size_t have = std::min(a.size(), b.size());
    if (have < n) throw InsufficientWindowError(have, n);
    if (n == 0) return true;
    const auto na = normalize(a), nb = normalize(b);
    return std::equal(na.coeffs.begin(), na.coeffs.begin() + static_cast<std::ptrdiff_t>(n), nb.coeffs.begin());
}

std::size_t stable_prefix(const CoeffList& a, const CoeffList& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return 0;
    const auto na = normalize(a), nb = normalize(b);
    const std::size_t m = std::min(na.size(), nb.size());
    std::size_t i = 0;
    while (i < m && na.coeffs[i] == nb.coeffs[i]) ++i;
    return i;
}

std::string grading_name(Grading g) { return g == Grading::AUnits ? "A-units" : "q-units"; }

FamilyExpr::FamilyExpr(long long constant) : text_(std::to_string(constant)), program_{{'n', constant}} {}

FamilyExpr FamilyExpr::parse(const std::string& text) {
    FamilyExpr e;
    e.text_ = text;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto starts_factor = [&] {
        skip();
        return pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == 'k' || text[pos] == '(');
    };
    std::function<void()> expr, term, factor;
    factor = [&] {
        skip();
        if (pos >= text.size()) throw ParseError("unexpected end of expression", pos);
        const char c = text[pos];
        if (c == '-') {
            ++pos;
            factor();
            e.program_.push_back({'~'});
        } else if (c == 'k') {
            ++pos;
            e.program_.push_back({'k'});
        } else if (c == '(') {
            ++pos;
            expr();
            skip();
            if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
            ++pos;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = 10 * v + (text[pos++] - '0');
            e.program_.push_back({'n', v});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
    };
    term = [&] {
        factor();
        while (true) {
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                factor();
            } else if (starts_factor()) {
                factor();
            } else {
                break;
            }
            e.program_.push_back({'*'});
        }
    };
    expr = [&] {
        term();
        while (true) {
            skip();
            if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) break;
            const char op = text[pos++];
            term();
            e.program_.push_back({op});
        }
    };
    expr();
    skip();
    if (pos != text.size()) throw ParseError("unexpected trailing input in expression", pos);
    return e;
}

long long FamilyExpr::operator()(long long k) const {
    if (program_.empty()) throw PreconditionError("empty expression");
    std::vector<long long> st;
    for (const auto& op : program_) {
        switch (op.kind) {
            case 'n': st.push_back(op.value); break;
            case 'k': st.push_back(k); break;
            case '~': st.back() = -st.back(); break;
            default: {
                const long long b = st.back();
                st.pop_back();
                long long& a = st.back();
                a = op.kind == '+' ? a + b : op.kind == '-' ? a - b : a * b;
            }
        }
    }
    return st.back();
}

bool FamilyExpr::depends_on_k() const {
    return std::any_of(program_.begin(), program_.end(), [](const Op& o) { return o.kind == 'k'; });
}

FamilySpec FamilySpec::pretzel_family(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.size() < 4 || t.compare(0, 2, "P(") != 0 || t.back() != ')')
        throw ParseError("pretzel family must look like P(e1,e2,...)", 0);
    FamilySpec spec;
    spec.label = t;
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (std::size_t i = 2; i + 1 < t.size(); ++i) {
        const char c = t[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    spec.base = pretzel(std::vector<int>(parts.size(), 0));
    for (std::size_t i = 0; i < parts.size(); ++i) spec.increments[static_cast<int>(i) + 1] = FamilyExpr::parse(parts[i]);
    return spec;
}

LinkDiagram FamilySpec::member(int k) const {
    std::map<int, int> deltas;
    for (const auto& [id, e] : increments) deltas[id] = static_cast<int>(e(k));
    return set_twists(base, deltas);
}

int FamilySpec::projector_color(int k) const {
    const long long c = color(k);
    const long long n = index == ColorIndex::Jones ? c - 1 : c;
    if (n < 1) throw RangeError("family color at k = " + std::to_string(k) + " gives projector color " + std::to_string(n));
    return static_cast<int>(n);
}

void FamilySpec::validate() const {
    if (k_min > k_max) throw RangeError("empty family range");
    for (int k = k_min; k <= k_max; ++k) {
        projector_color(k);
        for (const auto& [id, e] : increments)
            if (base.region(id).count + e(k) < 0)
                throw RangeError("region " + std::to_string(id) + " becomes negative at k = " + std::to_string(k));
    }
}

bool StabilityReport::passed() const {
    return std::all_of(steps.begin(), steps.end(), [](const Comparison& c) { return c.pass; });
}

std::string StabilityReport::to_json() const {
    nlohmann::json j;
    j["title"] = title;
    j["grading"] = grading_name(grading);
    j["rate"] = rate;
    j["passed"] = passed();
    j["steps"] = nlohmann::json::array();
    for (const auto& s : steps)
        j["steps"].push_back({{"left", s.left},
                              {"right", s.right},
                              {"required", s.required},
                              {"depth", s.depth},
                              {"pass", s.pass},
                              {"left_anchor", s.left_window.anchor},
                              {"right_anchor", s.right_window.anchor},
                              {"left_window", s.left_window.coeffs},
                              {"right_window", s.right_window.coeffs}});
    j["tail"] = tail.coeffs;
    return j.dump(2);
}

std::string StabilityReport::to_text() const {
    std::ostringstream os;
    os << title << " [" << grading_name(grading) << (rate.empty() ? "" : ", rate " + rate) << "]\n";
    for (const auto& s : steps)
        os << "  " << s.left << " vs " << s.right << ": need " << s.required << ", agree " << s.depth << "  "
           << (s.pass ? "ok" : "FAIL") << "\n";
    if (!tail.coeffs.empty()) os << "  tail: " << tail.to_string() << "\n";
    os << (passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

LaurentPoly family_value(const LinkDiagram& d, int projector_color, Grading g, const InvariantOptions& opts) {
    if (g == Grading::QUnits) return reduced_jones_poly(d, projector_color + 1, opts);
    return unreduced_colored_jones(d, projector_color, opts).value;
}

CoeffList invariant_window(const LinkDiagram& d, int projector_color, Grading g, std::size_t len,
                           const InvariantOptions& opts) {
    return coeff_window(family_value(d, projector_color, g, opts), len, g == Grading::QUnits ? 4 : 1);
}

Comparison compare(const std::string& left, const LaurentPoly& a, const std::string& right, const LaurentPoly& b,
                   std::size_t required, Grading g) {
    const int step = g == Grading::QUnits ? 4 : 1;
    Comparison c;
    c.left = left;
    c.right = right;
    c.required = required;
    c.left_window = coeff_window(a, required + 2, step);
    c.right_window = coeff_window(b, required + 2, step);
    c.depth = stable_prefix(c.left_window, c.right_window);
    c.pass = c.depth >= required;
    return c;
}

namespace {

std::string member_name(const LinkDiagram& d, int n, Grading g) {
    return (g == Grading::QUnits ? "J_" + std::to_string(n + 1) : "<S_" + std::to_string(n) + ">") + "(" + d.name + ")";
}

// Computes all members of the family in parallel; inner fusion sums share the pool.
std::vector<LaurentPoly> members(const FamilySpec& spec, const std::vector<LinkDiagram>& ds, const InvariantOptions& opts) {
    std::vector<LaurentPoly> values(ds.size());
    const int threads = resolve_threads(opts.threads);
    InvariantOptions inner = opts;
    inner.threads = std::max(1, threads / std::max(1, static_cast<int>(ds.size())));
    parallel_for(ds.size(), threads, [&](std::size_t i) {
        values[i] = family_value(ds[i], spec.projector_color(spec.k_min + static_cast<int>(i)), spec.grading, inner);
    });
    return values;
}

std::vector<LinkDiagram> diagrams(const FamilySpec& spec) {
    spec.validate();
    std::vector<LinkDiagram> ds;
    for (int k = spec.k_min; k <= spec.k_max; ++k) ds.push_back(spec.member(k));
    return ds;
}

// smallest crossing count among regions that change between two members
int changed_min(const LinkDiagram& lower, const LinkDiagram& upper) {
    int m = -1;
    for (const auto& r : upper.regions) {
        if (lower.region(r.id).count == r.count) continue;
        m = m < 0 ? r.count : std::min(m, r.count);
    }
    if (m < 0) throw PreconditionError("consecutive members " + lower.name + " and " + upper.name + " are identical");
    return m;
}

template <class Rate>
StabilityReport twist_report(const FamilySpec& spec, const std::string& title, const std::string& rate_text, Rate rate,
                             const InvariantOptions& opts) {
    const auto ds = diagrams(spec);
    const auto vs = members(spec, ds, opts);
    StabilityReport rep;
    rep.title = title;
    rep.grading = spec.grading;
    rep.rate = rate_text;
    for (std::size_t i = 0; i + 1 < ds.size(); ++i) {
        const int k = spec.k_min + static_cast<int>(i);
        const int n = spec.projector_color(k);
        if (spec.projector_color(k + 1) != n) throw PreconditionError("twist stability needs a constant color");
        const long long req = rate(k, n, changed_min(ds[i], ds[i + 1]));
        if (req < 0) throw RangeError("negative rate at k = " + std::to_string(k));
        rep.steps.push_back(compare(member_name(ds[i], n, spec.grading), vs[i], member_name(ds[i + 1], n, spec.grading),
                                    vs[i + 1], static_cast<std::size_t>(req), spec.grading));
    }
    return rep;
}

}  // namespace

StabilityReport family_tail(const FamilySpec& spec, const FamilyExpr& rate, const InvariantOptions& opts) {
    const auto ds = diagrams(spec);
    const auto vs = members(spec, ds, opts);
    StabilityReport rep;
    rep.title = "tail of " + (spec.label.empty() ? spec.base.name : spec.label);
    rep.grading = spec.grading;
    rep.rate = rate.text();
    for (std::size_t i = 0; i + 1 < ds.size(); ++i) {
        const int k = spec.k_min + static_cast<int>(i);
        const long long req = rate(k);
        if (req < 0) throw RangeError("negative rate at k = " + std::to_string(k));
        rep.steps.push_back(compare(member_name(ds[i], spec.projector_color(k), spec.grading), vs[i],
                                    member_name(ds[i + 1], spec.projector_color(k + 1), spec.grading), vs[i + 1],
                                    static_cast<std::size_t>(req), spec.grading));
    }
    const long long last = std::max<long long>(1, rate(spec.k_max));
    rep.tail = normalize(coeff_window(vs.back(), static_cast<std::size_t>(last), spec.grading == Grading::QUnits ? 4 : 1));
    return rep;
}

StabilityReport check_bracket_rate(const FamilySpec& spec, int slack, const InvariantOptions& opts) {
    FamilySpec s = spec;
    s.grading = Grading::AUnits;
    s.index = ColorIndex::Projector;
    s.color = FamilyExpr(1);
    return twist_report(s, "bracket twist stability", "4m" + (slack ? "+" + std::to_string(slack) : std::string()),
                        [slack](int, int, int m) { return 4LL * m + slack; }, opts);
}

StabilityReport check_colored_rate(const FamilySpec& spec, int slack, const InvariantOptions& opts) {
    FamilySpec s = spec;
    s.grading = Grading::AUnits;
    return twist_report(s, "colored twist stability",
                        "4n(m-1)+4" + (slack ? "+" + std::to_string(slack) : std::string()),
                        [slack](int, int n, int m) { return 4LL * n * (m - 1) + 4 + slack; }, opts);
}

StabilityReport check_color_stability(const LinkDiagram& d, int n_min, int n_max, int slack, const InvariantOptions& opts) {
    if (n_min < 1 || n_min > n_max) throw RangeError("color range must satisfy 1 <= n_min <= n_max");
    std::vector<LaurentPoly> vs(static_cast<std::size_t>(n_max - n_min + 2));
    for (int n = n_min - 1; n <= n_max; ++n) vs[n - n_min + 1] = unreduced_colored_jones(d, n, opts).value;
    StabilityReport rep;
    rep.title = "color stability of " + d.name;
    rep.grading = Grading::AUnits;
    rep.rate = "4n" + (slack ? "+" + std::to_string(slack) : std::string());
    for (int n = n_min; n <= n_max; ++n) {
        if (n == 1) continue;  // <S_0> = 1 carries no information
        rep.steps.push_back(compare(member_name(d, n, Grading::AUnits), vs[n - n_min + 1],
                                    member_name(d, n - 1, Grading::AUnits), vs[n - n_min],
                                    static_cast<std::size_t>(4 * n + slack), Grading::AUnits));
    }
    return rep;
}

StabilityReport check_cross_twist(const LinkDiagram& d, int n, const std::map<int, int>& extra, int slack,
                                  const InvariantOptions& opts) {
    if (n < 2) throw RangeError("cross-twist stability compares colors n and n-1 with n >= 2");
    for (const auto& r : d.regions) {
        auto it = extra.find(r.id);
        if (r.count + (it == extra.end() ? 0 : it->second) < 1)
            throw PreconditionError("every region needs k_i + b_i >= 1");
    }
    const LinkDiagram e = set_twists(d, extra);
    StabilityReport rep;
    rep.title = "cross-twist stability";
    rep.grading = Grading::AUnits;
    rep.rate = "4n" + (slack ? "+" + std::to_string(slack) : std::string());
    rep.steps.push_back(compare(member_name(d, n, Grading::AUnits), unreduced_colored_jones(d, n, opts).value,
                                member_name(e, n - 1, Grading::AUnits), unreduced_colored_jones(e, n - 1, opts).value,
                                static_cast<std::size_t>(4 * n + slack), Grading::AUnits));
    return rep;
}

StabilityReport check_graph_stability(const LinkDiagram& d1, const LinkDiagram& d2, int n, int slack,
                                      const InvariantOptions& opts) {
    if (!isomorphic(reduced_minus_graph(d1), reduced_minus_graph(d2)))
        throw PreconditionError("reduced minus-graphs of " + d1.name + " and " + d2.name + " differ");
    StabilityReport rep;
    rep.title = "reduced minus-graph stability";
    rep.grading = Grading::AUnits;
    rep.rate = "4n" + (slack ? "+" + std::to_string(slack) : std::string());
    rep.steps.push_back(compare(member_name(d1, n, Grading::AUnits), unreduced_colored_jones(d1, n, opts).value,
                                member_name(d2, n, Grading::AUnits), unreduced_colored_jones(d2, n, opts).value,
                                static_cast<std::size_t>(4 * n + slack), Grading::AUnits));
    return rep;
}

}  // namespace skein
