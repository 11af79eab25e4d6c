#include "skein/invariants.hpp"

#include "skein/clasp.hpp"
#include "skein/contract.hpp"
#include "skein/errors.hpp"
#include "skein/parallel.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

namespace skein {

namespace {

std::mutex memo_mu;
std::map<std::pair<std::vector<int>, int>, LaurentPoly> fused_memo;

std::size_t power_capped(int base, int exp, std::size_t cap) {
    std::size_t v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > cap / static_cast<std::size_t>(base)) return cap + 1;
        v *= static_cast<std::size_t>(base);
    }
    return v;
}

// Converts a 2n -> 2n TL element into a box whose points are numbered
// counterclockwise from the bottom-left leg: bottom t -> t, top u -> 4n-1-u.
PairingBox tl_box(const ScaledMorphism& m, std::vector<int> wires) {
    const int w = m.bottom;
    const int total = m.bottom + m.top;
    auto ccw = [&](int p) { return p < w ? p : total - 1 - (p - w); };
    PairingBox box;
    box.wires = std::move(wires);
    box.den = m.den;
    for (const auto& [match, coeff] : m.terms) {
        std::vector<std::uint16_t> partner(static_cast<std::size_t>(total));
        for (int p = 0; p < total; ++p) partner[ccw(p)] = static_cast<std::uint16_t>(ccw(match.partner(p)));
        box.terms.emplace_back(std::move(partner), coeff);
    }
    return box;
}

ScaledMorphism colored_crossing(int n) {
    ScaledMorphism m;
    m.bottom = m.top = 2 * n;
    for (int i = 0; i <= n; ++i) m.add(clasp_smoothing(n, i), fusion_coeff(n, i));
    return m;
}

ScaledMorphism socket(int n, int p) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, ScaledMorphism> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, p});
    if (it != cache.end()) return it->second;
    ScaledMorphism merge = vertex_morphism(n, n, 2 * p, VertexOrientation::Merge).scaled();
    ScaledMorphism split = vertex_morphism(n, n, 2 * p, VertexOrientation::Split).scaled();
    return cache.emplace(std::make_pair(n, p), compose(merge, split)).first->second;
}

// Wire ids for a cabled network: every (node, position) slot carries n
// strands numbered counterclockwise around the node. Arcs either get a
// projector box or are glued straight through.
class Cabling {
public:
    Cabling(const LinkDiagram& d, int n) : d_(d), n_(n) {
        for (int v = 0; v < static_cast<int>(d.nodes.size()); ++v)
            for (int p = 0; p < 4; ++p) ends_[d.nodes[v].arcs[p]].push_back(4 * v + p);
    }

    // Glues every arc without a projector box; arcs listed in `boxed` get f_n.
    std::vector<PairingBox> arc_boxes(const std::vector<int>& boxed_arcs) {
        std::vector<PairingBox> out;
        std::vector<bool> boxed(ends_.size(), false);
        std::unordered_map<int, int> slot_of;
        int idx = 0;
        for (const auto& [label, occ] : ends_) slot_of[label] = idx++;
        for (int a : boxed_arcs) boxed[slot_of.at(a)] = true;
        std::shared_ptr<const ScaledMorphism> f = n_ >= 2 ? jones_wenzl_scaled(n_) : nullptr;
        for (const auto& [label, occ] : ends_) {
            const int o0 = occ[0], o1 = occ[1];
            if (!boxed[slot_of.at(label)] || !f) {
                for (int j = 0; j < n_; ++j) alias_[wire(o1, j)] = wire(o0, n_ - 1 - j);
                continue;
            }
            PairingBox box;
            for (int i = 0; i < n_; ++i) box.wires.push_back(wire(o0, i));
            for (int i = 0; i < n_; ++i) box.wires.push_back(wire(o1, n_ - 1 - i));
            box.den = f->den;
            for (const auto& [m, c] : f->terms) {
                std::vector<std::uint16_t> partner(m.partners().begin(), m.partners().end());
                box.terms.emplace_back(std::move(partner), c);
            }
            out.push_back(std::move(box));
        }
        return out;
    }

    // Wires of the 4n points around a node, counterclockwise.
    std::vector<int> node_wires(int v) const { return legs_wires({{{v, 0}, {v, 1}, {v, 2}, {v, 3}}}); }
    std::vector<int> legs_wires(const std::array<std::pair<int, int>, 4>& legs) const {
        std::vector<int> w;
        for (const auto& [v, p] : legs)
            for (int j = 0; j < n_; ++j) w.push_back(resolve(wire(4 * v + p, j)));
        return w;
    }
    // Applies aliases of glued arcs inside already-built boxes.
    void finish(std::vector<PairingBox>& boxes) const {
        for (auto& b : boxes)
            for (int& w : b.wires) w = resolve(w);
    }
    std::vector<int> labels() const {
        std::vector<int> out;
        for (const auto& [label, occ] : ends_) out.push_back(label);
        return out;
    }

private:
    int wire(int occurrence, int j) const { return occurrence * n_ + j; }
    int resolve(int w) const {
        auto it = alias_.find(w);
        return it == alias_.end() ? w : it->second;
    }
    const LinkDiagram& d_;
    int n_;
    std::map<int, std::vector<int>> ends_;
    std::unordered_map<int, int> alias_;
};

LaurentPoly exact(const RationalFn& r, const char* what) {
    try {
        return r.to_laurent();
    } catch (const RemainderError&) {
        throw RemainderError(std::string(what) + ": result is not a Laurent polynomial");
    }
}

LaurentPoly free_loop_factor(const LinkDiagram& d, int n) { return delta(n).pow(static_cast<unsigned>(d.free_loops)); }

// Boxes for a fully expanded colored network (every crossing a colored crossing).
std::vector<PairingBox> expanded_network(const LinkDiagram& d, int n) {
    Cabling cab(d, n);
    std::vector<PairingBox> boxes = cab.arc_boxes(cab.labels());
    const ScaledMorphism x = n == 1 ? crossing_morphism(-1) : colored_crossing(n);
    const ScaledMorphism id = ScaledMorphism::identity(2 * n);
    for (int v = 0; v < static_cast<int>(d.nodes.size()); ++v)
        boxes.push_back(tl_box(d.nodes[v].kind == NodeKind::Crossing ? x : id, cab.node_wires(v)));
    cab.finish(boxes);
    return boxes;
}

bool every_crossing_regioned(const LinkDiagram& d) {
    std::vector<bool> covered(d.nodes.size(), false);
    for (const auto& r : d.regions)
        for (int v : r.nodes) covered[static_cast<std::size_t>(v)] = true;
    for (int v : d.crossings())
        if (!covered[static_cast<std::size_t>(v)]) return false;
    return true;
}

LaurentPoly fused_pretzel(const std::vector<int>& counts, int n, const InvariantOptions& opts) {
    {
        std::lock_guard<std::mutex> lock(memo_mu);
        auto it = fused_memo.find({counts, n});
        if (it != fused_memo.end()) return it->second;
    }
    const int r = static_cast<int>(counts.size());
    const std::size_t terms = power_capped(n + 1, r, opts.max_networks);
    if (terms > opts.max_networks)
        throw BudgetError("max-networks", static_cast<long long>(opts.max_networks), static_cast<long long>(terms));
    auto alg = ClaspedAlgebra::get(n);
    // factor[i][p] = w_p * mu_p^{k_i}
    std::vector<std::vector<RationalFn>> factor(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        for (int p = 0; p <= n; ++p)
            factor[i].push_back(fusion_weight(n, p) * RationalFn(twist_coeff(n, n, 2 * p).pow(static_cast<unsigned>(counts[i]))));
    std::vector<RationalFn> partial(terms);
    parallel_for(terms, opts.threads, [&](std::size_t t) {
        std::vector<int> ps(static_cast<std::size_t>(r));
        std::size_t rest = t;
        RationalFn term(1L);
        for (int i = 0; i < r; ++i) {
            ps[i] = static_cast<int>(rest % static_cast<std::size_t>(n + 1));
            rest /= static_cast<std::size_t>(n + 1);
            term *= factor[i][ps[i]];
        }
        partial[t] = (term * alg->drum_value(ps)).reduced();
    });
    // pairwise summation keeps intermediate denominators small
    while (partial.size() > 1) {
        std::vector<RationalFn> next((partial.size() + 1) / 2);
        parallel_for(next.size(), opts.threads, [&](std::size_t i) {
            next[i] = 2 * i + 1 < partial.size() ? (partial[2 * i] + partial[2 * i + 1]).reduced() : partial[2 * i];
        });
        partial = std::move(next);
    }
    LaurentPoly value = exact(partial[0], "fused bracket");
    std::lock_guard<std::mutex> lock(memo_mu);
    fused_memo.emplace(std::make_pair(counts, n), value);
    return value;
}

bool is_plain_pretzel(const LinkDiagram& d) {
    if (!d.pretzel || d.regions.size() != d.pretzel->size() || d.free_loops) return false;
    for (std::size_t i = 0; i < d.regions.size(); ++i)
        if (d.regions[i].count != (*d.pretzel)[i] || d.regions[i].cyclic) return false;
    return true;
}

LaurentPoly fused_general(const LinkDiagram& d, int n, const InvariantOptions& opts) {
    std::vector<const TwistRegion*> live;
    std::vector<bool> internal_node(d.nodes.size(), false);
    for (const auto& r : d.regions)
        if (r.count > 0) {
            live.push_back(&r);
            for (int v : r.nodes) internal_node[static_cast<std::size_t>(v)] = true;
        }
    // arcs that survive fusion: those touching a leg or a non-fused node
    std::map<int, int> touches;
    for (int v = 0; v < static_cast<int>(d.nodes.size()); ++v)
        if (!internal_node[v])
            for (int a : d.nodes[v].arcs) ++touches[a];
    std::vector<std::array<std::pair<int, int>, 4>> legs;
    for (const TwistRegion* r : live) {
        const int f = r->nodes.front(), l = r->nodes.back();
        legs.push_back({{{f, 0}, {f, 1}, {l, 2}, {l, 3}}});
        for (const auto& [v, p] : legs.back()) ++touches[d.nodes[v].arcs[p]];
    }
    std::vector<int> kept;
    for (const auto& [a, c] : touches) kept.push_back(a);

    const int r = static_cast<int>(live.size());
    const std::size_t terms = power_capped(n + 1, r, opts.max_networks);
    if (terms > opts.max_networks)
        throw BudgetError("max-networks", static_cast<long long>(opts.max_networks), static_cast<long long>(terms));
    for (int p = 0; p <= n; ++p) socket(n, p);

    std::vector<RationalFn> partial(terms);
    parallel_for(terms, opts.threads, [&](std::size_t t) {
        Cabling cab(d, n);
        std::vector<PairingBox> boxes = cab.arc_boxes(kept);
        for (int v = 0; v < static_cast<int>(d.nodes.size()); ++v)
            if (!internal_node[v]) boxes.push_back(tl_box(ScaledMorphism::identity(2 * n), cab.node_wires(v)));
        std::size_t rest = t;
        for (int i = 0; i < r; ++i) {
            const int p = static_cast<int>(rest % static_cast<std::size_t>(n + 1));
            rest /= static_cast<std::size_t>(n + 1);
            RationalFn w = fusion_weight(n, p) * RationalFn(twist_coeff(n, n, 2 * p).pow(static_cast<unsigned>(live[i]->count)));
            ScaledMorphism s = socket(n, p);
            for (auto& [m, c] : s.terms) c = c * w.num();
            s.den = s.den * w.den();
            boxes.push_back(tl_box(s, cab.legs_wires(legs[i])));
        }
        cab.finish(boxes);
        partial[t] = contract(boxes, {opts.max_states}).reduced();
    });
    RationalFn total;
    for (const auto& p : partial) total += p;
    return exact(total, "fused bracket") * free_loop_factor(d, n);
}

}  // namespace

BracketValue bracket_state_sum(const LinkDiagram& d, const InvariantOptions& opts) {
    const int c = d.crossing_count();
    if (c > opts.max_crossings) throw BudgetError("max-crossings", opts.max_crossings, c);
    LaurentPoly v = exact(contract(expanded_network(d, 1), {opts.max_states}), "state sum");
    return {v * free_loop_factor(d, 1), 1, "state-sum"};
}

BracketValue colored_state_sum(const LinkDiagram& d, int n, const InvariantOptions& opts) {
    if (n < 1) throw RangeError("color must be at least 1");
    const std::size_t networks = power_capped(n + 1, d.crossing_count(), opts.max_networks);
    if (networks > opts.max_networks)
        throw BudgetError("max-networks", static_cast<long long>(opts.max_networks), static_cast<long long>(networks));
    LaurentPoly v = exact(contract(expanded_network(d, n), {opts.max_states}), "colored state sum");
    return {v * free_loop_factor(d, n), n, "colored-state-sum"};
}

BracketValue colored_bracket_fused(const LinkDiagram& d, int n, const InvariantOptions& opts) {
    if (n < 1) throw RangeError("color must be at least 1");
    if (!every_crossing_regioned(d)) throw PreconditionError("fused pipeline needs every crossing in a twist region");
    if (is_plain_pretzel(d)) return {fused_pretzel(*d.pretzel, n, opts), n, "fused-drum"};
    return {fused_general(d, n, opts), n, "fused-network"};
}

BracketValue unreduced_colored_jones(const LinkDiagram& d, int n, const InvariantOptions& opts) {
    if (n < 0) throw RangeError("color must be non-negative");
    if (n == 0) return {LaurentPoly(1L), 0, "trivial"};
    if (every_crossing_regioned(d)) return colored_bracket_fused(d, n, opts);
    return colored_state_sum(d, n, opts);
}

LaurentPoly reduced_jones_poly(const LinkDiagram& d, int N, const InvariantOptions& opts) {
    if (N < 2) throw RangeError("reduced colored Jones needs N >= 2");
    const LaurentPoly u = unreduced_colored_jones(d, N - 1, opts).value;
    try {
        return exact_div(u, delta(N - 1));
    } catch (const RemainderError&) {
        throw RemainderError("unreduced colored Jones is not divisible by delta(" + std::to_string(N - 1) + ")");
    }
}

QPoly reduced_jones(const LinkDiagram& d, int N, const InvariantOptions& opts) {
    return substitute_quarter(reduced_jones_poly(d, N, opts));
}

int predicted_min_degree(const LinkDiagram& d, int n) {
    if (n < 1) throw RangeError("color must be at least 1");
    if (n == 1 ? !is_minus_adequate(d) : !is_reduced_alternating(d))
        throw PreconditionError(n == 1 ? "diagram is not minus-adequate" : "diagram is not reduced alternating");
    return -d.crossing_count() * n * n - 2 * n * circle_count_minus(d);
}

SliceProgram build_upsilon(const LinkDiagram& d, int n, int p) {
    if (!d.pretzel) throw PreconditionError("the upsilon network is defined for pretzel diagrams");
    if (n < 1) throw RangeError("color must be at least 1");
    if (p < 0 || p >= n)
        throw RangeError("socket color p = " + std::to_string(p) + " outside 0.." + std::to_string(n - 1));
    return pretzel_program(*d.pretzel, n, p);
}

int upsilon_predicted_min_degree(const LinkDiagram& d, int n, int p) {
    if (!d.pretzel) throw PreconditionError("the upsilon network is defined for pretzel diagrams");
    const int k1 = d.pretzel->front();
    return -n * n * (d.crossing_count() - k1) - 2 * (circle_count_minus(d) * n - (n - p));
}

void clear_invariant_memo() {
    std::lock_guard<std::mutex> lock(memo_mu);
    fused_memo.clear();
}

}  // namespace skein
