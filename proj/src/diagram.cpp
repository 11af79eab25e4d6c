#include "skein/diagram.hpp"

#include "skein/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace skein {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Dense indices for the arc labels of a diagram.
struct ArcIndex {
    std::unordered_map<int, int> index;
    int size() const { return static_cast<int>(index.size()); }
    int operator()(int label) const { return index.at(label); }
};

ArcIndex arc_index(const LinkDiagram& d) {
    ArcIndex ix;
    for (const auto& n : d.nodes)
        for (int a : n.arcs) ix.index.emplace(a, static_cast<int>(ix.index.size()));
    return ix;
}

// Pairs joined at a node: A pairs (0,1),(2,3); B pairs (0,3),(1,2).
constexpr std::array<std::array<int, 4>, 2> kPairs{{{0, 1, 2, 3}, {0, 3, 1, 2}}};

struct Smoothed {
    UnionFind uf;
    ArcIndex ix;
    int circles = 0;
};

Smoothed smooth(const LinkDiagram& d, const State& s) {
    ArcIndex ix = arc_index(d);
    Smoothed r{UnionFind(ix.size()), ix, 0};
    std::size_t ci = 0;
    for (const auto& n : d.nodes) {
        int sign = -1;
        if (n.kind == NodeKind::Crossing) {
            if (ci >= s.size()) throw PreconditionError("state is not total: missing crossing " + std::to_string(ci));
            sign = s[ci++];
            if (sign != 1 && sign != -1) throw PreconditionError("state values must be +1 or -1");
        }
        const auto& p = kPairs[sign > 0 ? 0 : 1];
        r.uf.unite(ix(n.arcs[p[0]]), ix(n.arcs[p[1]]));
        r.uf.unite(ix(n.arcs[p[2]]), ix(n.arcs[p[3]]));
    }
    if (ci != s.size()) throw PreconditionError("state has more entries than crossings");
    int roots = 0;
    for (int i = 0; i < ix.size(); ++i)
        if (r.uf.find(i) == i) ++roots;
    r.circles = roots + d.free_loops;
    return r;
}

StateGraph state_graph(const LinkDiagram& d, int sign) {
    Smoothed sm = smooth(d, all_state(d, sign));
    std::unordered_map<int, int> vid;
    for (int i = 0; i < sm.ix.size(); ++i) {
        int root = sm.uf.find(i);
        if (!vid.count(root)) vid.emplace(root, static_cast<int>(vid.size()));
    }
    StateGraph g;
    g.vertices = static_cast<int>(vid.size()) + d.free_loops;
    for (const auto& n : d.nodes) {
        if (n.kind != NodeKind::Crossing) continue;
        const int u = vid.at(sm.uf.find(sm.ix(n.arcs[0])));
        const int v = vid.at(sm.uf.find(sm.ix(n.arcs[sign > 0 ? 2 : 1])));
        g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return g;
}

Node rotated(Node n) {
    std::rotate(n.arcs.begin(), n.arcs.begin() + 2, n.arcs.end());
    return n;
}

// Does the pair at positions (i,i+1) of x meet the pair at (j,j+1) of y as a bigon?
bool bigon(const Node& x, int i, const Node& y, int j) {
    return x.arcs[i] == y.arcs[j + 1] && x.arcs[i + 1] == y.arcs[j];
}

int next_label(const LinkDiagram& d) {
    int m = 0;
    for (const auto& n : d.nodes)
        for (int a : n.arcs) m = std::max(m, a);
    return m + 1;
}

// Relabels arcs 1..m in order of first appearance.
void compact_labels(LinkDiagram& d) {
    std::unordered_map<int, int> map;
    for (auto& n : d.nodes)
        for (int& a : n.arcs) {
            auto it = map.find(a);
            if (it == map.end()) it = map.emplace(a, static_cast<int>(map.size()) + 1).first;
            a = it->second;
        }
}

// Orients chains of region crossings, filling regions for every crossing that
// is not yet covered. Explicit chains come first, in the given order.
void assign_regions(LinkDiagram& d, const std::vector<std::vector<int>>& explicit_chains) {
    const int nn = static_cast<int>(d.nodes.size());
    std::vector<int> owner(static_cast<std::size_t>(nn), 0);
    int next_id = 1;
    // rotates chain crossings so that each top pair meets the next bottom pair;
    // returns whether the last crossing closes back onto the first
    auto orient_chain = [&](const std::vector<int>& chain) {
        auto fail = [&](int x, int y) {
            return ParseError("crossings " + std::to_string(x + 1) + " and " + std::to_string(y + 1) +
                                  " do not share a twist bigon",
                              0);
        };
        if (chain.size() == 1) return bigon(d.nodes[chain[0]], 2, d.nodes[chain[0]], 0);
        Node& x0 = d.nodes[chain[0]];
        Node& x1 = d.nodes[chain[1]];
        bool ok = false;
        for (int rx = 0; rx < 2 && !ok; ++rx) {
            for (int ry = 0; ry < 2 && !ok; ++ry) {
                if (bigon(x0, 2, x1, 0)) ok = true;
                else x1 = rotated(x1);
            }
            if (!ok) x0 = rotated(x0);
        }
        if (!ok) throw fail(chain[0], chain[1]);
        for (std::size_t t = 1; t + 1 < chain.size(); ++t) {
            Node& x = d.nodes[chain[t]];
            Node& y = d.nodes[chain[t + 1]];
            if (!bigon(x, 2, y, 0)) y = rotated(y);
            if (!bigon(x, 2, y, 0)) throw fail(chain[t], chain[t + 1]);
        }
        return bigon(d.nodes[chain.back()], 2, d.nodes[chain.front()], 0);
    };
    auto add_region = [&](const std::vector<int>& chain, bool cyclic) {
        TwistRegion r;
        r.id = next_id++;
        r.nodes = chain;
        r.count = static_cast<int>(chain.size());
        r.cyclic = cyclic;
        for (int c : chain) owner[c] = r.id;
        d.regions.push_back(std::move(r));
    };

    for (const auto& chain : explicit_chains) {
        for (int c : chain) {
            if (c < 0 || c >= nn || d.nodes[c].kind != NodeKind::Crossing)
                throw ParseError("region refers to unknown crossing " + std::to_string(c + 1), 0);
            if (owner[c]) throw ParseError("crossing " + std::to_string(c + 1) + " listed in two regions", 0);
        }
        const bool cyclic = orient_chain(chain);
        add_region(chain, cyclic);
    }

    // automatic detection on the remaining crossings
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nn));
    for (int x = 0; x < nn; ++x) {
        if (owner[x] || d.nodes[x].kind != NodeKind::Crossing) continue;
        for (int y = x + 1; y < nn; ++y) {
            if (owner[y] || d.nodes[y].kind != NodeKind::Crossing) continue;
            for (int i : {0, 2})
                for (int j : {0, 2})
                    if (bigon(d.nodes[x], i, d.nodes[y], j)) {
                        adj[x].push_back(y);
                        adj[y].push_back(x);
                    }
        }
    }
    std::vector<bool> seen(static_cast<std::size_t>(nn), false);
    auto walk = [&](int start) {
        std::vector<int> chain{start};
        seen[start] = true;
        int prev = -1, cur = start;
        while (true) {
            int nxt = -1;
            for (int y : adj[cur])
                if (y != prev && !seen[y]) {
                    nxt = y;
                    break;
                }
            if (nxt < 0) break;
            chain.push_back(nxt);
            seen[nxt] = true;
            prev = cur;
            cur = nxt;
        }
        return chain;
    };
    for (int x = 0; x < nn; ++x) {
        if (owner[x] || seen[x] || d.nodes[x].kind != NodeKind::Crossing) continue;
        if (adj[x].size() < 2) {
            auto chain = walk(x);
            add_region(chain, orient_chain(chain));
        }
    }
    for (int x = 0; x < nn; ++x) {
        if (owner[x] || seen[x] || d.nodes[x].kind != NodeKind::Crossing) continue;
        auto chain = walk(x);
        add_region(chain, orient_chain(chain));
    }
}

// Emits a region of k crossings between the given boundary legs.
void emit_chain(LinkDiagram& d, TwistRegion& r, int k, std::array<int, 4> legs, int& fresh) {
    r.nodes.clear();
    r.count = k;
    if (k == 0) {
        d.nodes.push_back({NodeKind::Smoothing, legs});
        r.nodes.push_back(static_cast<int>(d.nodes.size()) - 1);
        return;
    }
    int bl = legs[0], br = legs[1];
    for (int i = 0; i < k; ++i) {
        int tr, tl;
        if (i + 1 == k) {
            tr = legs[2];
            tl = legs[3];
        } else {
            tr = fresh++;
            tl = fresh++;
        }
        d.nodes.push_back({NodeKind::Crossing, {bl, br, tr, tl}});
        r.nodes.push_back(static_cast<int>(d.nodes.size()) - 1);
        bl = tl;
        br = tr;
    }
}

std::string pretzel_name(const std::vector<int>& c) {
    std::string s = "P(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

}  // namespace

int LinkDiagram::crossing_count() const {
    int c = 0;
    for (const auto& n : nodes)
        if (n.kind == NodeKind::Crossing) ++c;
    return c;
}

std::vector<int> LinkDiagram::crossings() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[i].kind == NodeKind::Crossing) out.push_back(i);
    return out;
}

void LinkDiagram::validate() const {
    std::unordered_map<int, int> seen;
    for (const auto& n : nodes)
        for (int a : n.arcs) ++seen[a];
    for (const auto& [label, count] : seen)
        if (count != 2)
            throw ArityError("arc label " + std::to_string(label) + " occurs " + std::to_string(count) +
                             " times (expected 2)");
}

const TwistRegion& LinkDiagram::region(int id) const {
    for (const auto& r : regions)
        if (r.id == id) return r;
    throw RangeError("no twist region with id " + std::to_string(id));
}

int LinkDiagram::region_of(int node) const {
    for (const auto& r : regions)
        if (std::find(r.nodes.begin(), r.nodes.end(), node) != r.nodes.end()) return r.id;
    return 0;
}

std::string LinkDiagram::to_pd() const {
    std::ostringstream os;
    os << "PD[";
    bool first = true;
    for (const auto& n : nodes) {
        if (n.kind != NodeKind::Crossing) continue;
        os << (first ? "" : ",") << "X[" << n.arcs[0] << "," << n.arcs[1] << "," << n.arcs[2] << "," << n.arcs[3]
           << "]";
        first = false;
    }
    os << "]";
    return os.str();
}

LinkDiagram unknot() {
    LinkDiagram d;
    d.name = "unknot";
    d.free_loops = 1;
    return d;
}

LinkDiagram pretzel(const std::vector<int>& counts) {
    const int r = static_cast<int>(counts.size());
    if (r == 0) throw RangeError("pretzel needs at least one twist region");
    for (int c : counts)
        if (c < 0) throw RangeError("pretzel twist counts must be non-negative");
    LinkDiagram d;
    d.name = pretzel_name(counts);
    d.pretzel = counts;
    // top arc t_i joins region i's top-right leg to region i+1's top-left leg;
    // bottom arc b_i joins region i's bottom-right leg to region i+1's bottom-left leg
    auto top = [&](int i) { return 1 + ((i % r) + r) % r; };
    auto bottom = [&](int i) { return 1 + r + ((i % r) + r) % r; };
    int fresh = 2 * r + 1;
    for (int i = 0; i < r; ++i) {
        TwistRegion reg;
        reg.id = i + 1;
        emit_chain(d, reg, counts[i], {bottom(i - 1), bottom(i), top(i), top(i - 1)}, fresh);
        d.regions.push_back(std::move(reg));
    }
    compact_labels(d);
    d.validate();
    return d;
}

LinkDiagram parse_pd(const std::string& text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](const std::string& tok) {
        skip();
        if (text.compare(pos, tok.size(), tok) != 0) throw ParseError("expected '" + tok + "'", pos);
        pos += tok.size();
    };
    auto peek = [&](char c) {
        skip();
        return pos < text.size() && text[pos] == c;
    };
    auto integer = [&] {
        skip();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos || !std::isdigit(static_cast<unsigned char>(text[pos - 1])))
            throw ParseError("expected an integer", start);
        return std::stoi(text.substr(start, pos - start));
    };

    LinkDiagram d;
    d.name = "pd";
    std::vector<std::size_t> where;
    expect("PD");
    expect("[");
    if (!peek(']')) {
        while (true) {
            skip();
            const std::size_t at = pos;
            expect("X");
            expect("[");
            std::vector<int> labels{integer()};
            while (peek(',')) {
                ++pos;
                labels.push_back(integer());
            }
            skip();
            if (labels.size() != 4)
                throw ParseError("crossing X[...] needs 4 arc labels, got " + std::to_string(labels.size()), pos);
            expect("]");
            d.nodes.push_back({NodeKind::Crossing, {labels[0], labels[1], labels[2], labels[3]}});
            where.push_back(at);
            if (peek(',')) {
                ++pos;
                continue;
            }
            break;
        }
    }
    expect("]");

    std::vector<std::vector<int>> chains;
    skip();
    if (pos < text.size()) {
        expect("Regions");
        expect("[");
        while (true) {
            expect("[");
            std::vector<int> chain{integer() - 1};
            while (peek(',')) {
                ++pos;
                chain.push_back(integer() - 1);
            }
            expect("]");
            chains.push_back(std::move(chain));
            if (peek(',')) {
                ++pos;
                continue;
            }
            break;
        }
        expect("]");
        skip();
        if (pos < text.size()) throw ParseError("unexpected trailing input", pos);
    }

    std::unordered_map<int, int> count;
    for (std::size_t i = 0; i < d.nodes.size(); ++i)
        for (int a : d.nodes[i].arcs)
            if (++count[a] > 2) throw ParseError("arc label " + std::to_string(a) + " occurs more than twice", where[i]);
    for (const auto& [label, c] : count)
        if (c != 2) throw ParseError("arc label " + std::to_string(label) + " occurs only once", 0);
    if (d.nodes.empty()) d.free_loops = 1;
    assign_regions(d, chains);
    return d;
}

LinkDiagram mirror(const LinkDiagram& d) {
    LinkDiagram m;
    m.name = "mirror of " + d.name;
    m.free_loops = d.free_loops;
    for (auto n : d.nodes) {
        if (n.kind == NodeKind::Crossing) std::rotate(n.arcs.begin(), n.arcs.begin() + 1, n.arcs.end());
        m.nodes.push_back(n);
    }
    assign_regions(m, {});
    return m;
}

State all_state(const LinkDiagram& d, int sign) { return State(static_cast<std::size_t>(d.crossing_count()), sign); }

int apply_state(const LinkDiagram& d, const State& s) { return smooth(d, s).circles; }

int circle_count_minus(const LinkDiagram& d) { return apply_state(d, all_state(d, -1)); }
int circle_count_plus(const LinkDiagram& d) { return apply_state(d, all_state(d, 1)); }

bool StateGraph::has_loop() const {
    return std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.first == e.second; });
}

StateGraph StateGraph::reduce() const {
    StateGraph g;
    g.vertices = vertices;
    g.reduced = true;
    std::set<std::pair<int, int>> uniq(edges.begin(), edges.end());
    g.edges.assign(uniq.begin(), uniq.end());
    return g;
}

std::string StateGraph::to_dot(const std::string& name) const {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < vertices; ++v) os << "  v" << v << ";\n";
    for (const auto& [u, v] : edges) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

StateGraph minus_graph(const LinkDiagram& d) { return state_graph(d, -1); }
StateGraph plus_graph(const LinkDiagram& d) { return state_graph(d, 1); }
StateGraph reduced_minus_graph(const LinkDiagram& d) { return minus_graph(d).reduce(); }

bool isomorphic(const StateGraph& g, const StateGraph& h) {
    if (g.vertices != h.vertices || g.edges.size() != h.edges.size()) return false;
    const int n = g.vertices;
    auto matrix = [n](const StateGraph& s) {
        std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
        for (const auto& [u, v] : s.edges) {
            ++m[u][v];
            if (u != v) ++m[v][u];
        }
        return m;
    };
    const auto mg = matrix(g), mh = matrix(h);
    auto signature = [n](const std::vector<std::vector<int>>& m, int v) {
        std::vector<int> row = m[v];
        std::sort(row.begin(), row.end());
        row.push_back(m[v][v]);
        return row;
    };
    std::vector<std::vector<int>> sg, sh;
    for (int v = 0; v < n; ++v) {
        sg.push_back(signature(mg, v));
        sh.push_back(signature(mh, v));
    }
    {
        auto a = sg, b = sh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool(int)> extend = [&](int v) {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || sg[v] != sh[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = mg[v][u] == mh[w][map[u]];
            if (!ok || mg[v][v] != mh[w][w]) continue;
            map[v] = w;
            used[w] = true;
            if (extend(v + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    return extend(0);
}

bool is_minus_adequate(const LinkDiagram& d) { return !minus_graph(d).has_loop(); }

bool is_adequate(const LinkDiagram& d) { return is_minus_adequate(d) && !plus_graph(d).has_loop(); }

bool is_alternating(const LinkDiagram& d) {
    ArcIndex ix = arc_index(d);
    UnionFind uf(ix.size());
    for (const auto& n : d.nodes)
        if (n.kind == NodeKind::Smoothing) {
            uf.unite(ix(n.arcs[0]), ix(n.arcs[3]));
            uf.unite(ix(n.arcs[1]), ix(n.arcs[2]));
        }
    // every strand between consecutive crossings must run from an under-position
    // (a or c) to an over-position (b or d)
    std::unordered_map<int, std::pair<int, int>> ends;  // strand -> (unders, overs)
    for (const auto& n : d.nodes) {
        if (n.kind != NodeKind::Crossing) continue;
        for (int p = 0; p < 4; ++p) {
            auto& e = ends[uf.find(ix(n.arcs[p]))];
            (p % 2 == 0 ? e.first : e.second) += 1;
        }
    }
    for (const auto& [strand, e] : ends)
        if (e.first != e.second) return false;
    return true;
}

bool is_reduced_alternating(const LinkDiagram& d) { return is_alternating(d) && is_adequate(d); }

LinkDiagram set_twists(const LinkDiagram& d, const std::map<int, int>& deltas) {
    for (const auto& [id, delta] : deltas) {
        const TwistRegion& r = d.region(id);
        if (r.count + delta < 0)
            throw RangeError("twist region " + std::to_string(id) + " has " + std::to_string(r.count) +
                             " crossings; cannot add " + std::to_string(delta));
        if (r.cyclic && r.count + delta == 0)
            throw PreconditionError("cyclic twist region " + std::to_string(id) + " cannot be smoothed away");
    }
    LinkDiagram out;
    out.free_loops = d.free_loops;
    int fresh = next_label(d);
    for (const auto& r : d.regions) {
        auto it = deltas.find(r.id);
        const int k = r.count + (it == deltas.end() ? 0 : it->second);
        TwistRegion nr;
        nr.id = r.id;
        nr.cyclic = r.cyclic;
        if (r.cyclic) {
            std::array<int, 4> legs{fresh, fresh + 1, fresh + 1, fresh};
            fresh += 2;
            emit_chain(out, nr, k, legs, fresh);
        } else {
            const Node& first = d.nodes[r.nodes.front()];
            const Node& last = d.nodes[r.nodes.back()];
            emit_chain(out, nr, k, {first.arcs[0], first.arcs[1], last.arcs[2], last.arcs[3]}, fresh);
        }
        out.regions.push_back(std::move(nr));
    }
    for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i)
        if (!d.region_of(i)) out.nodes.push_back(d.nodes[i]);
    if (d.pretzel) {
        std::vector<int> counts;
        for (const auto& r : out.regions) counts.push_back(r.count);
        out.pretzel = counts;
        out.name = pretzel_name(counts);
    } else {
        out.name = d.name;
    }
    compact_labels(out);
    out.validate();
    return out;
}

std::string to_json(const LinkDiagram& d) {
    nlohmann::json j;
    j["name"] = d.name;
    j["free_loops"] = d.free_loops;
    j["nodes"] = nlohmann::json::array();
    for (const auto& n : d.nodes)
        j["nodes"].push_back({{"kind", n.kind == NodeKind::Crossing ? "crossing" : "smoothing"}, {"arcs", n.arcs}});
    j["regions"] = nlohmann::json::array();
    for (const auto& r : d.regions)
        j["regions"].push_back({{"id", r.id}, {"nodes", r.nodes}, {"count", r.count}, {"cyclic", r.cyclic}});
    if (d.pretzel) j["pretzel"] = *d.pretzel;
    return j.dump(2);
}

LinkDiagram from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid diagram JSON: ") + e.what(), e.byte);
    }
    try {
        LinkDiagram d;
        d.name = j.value("name", std::string("json"));
        d.free_loops = j.value("free_loops", 0);
        for (const auto& n : j.at("nodes")) {
            Node node;
            node.kind = n.at("kind").get<std::string>() == "smoothing" ? NodeKind::Smoothing : NodeKind::Crossing;
            node.arcs = n.at("arcs").get<std::array<int, 4>>();
            d.nodes.push_back(node);
        }
        for (const auto& r : j.at("regions")) {
            TwistRegion reg;
            reg.id = r.at("id").get<int>();
            reg.nodes = r.at("nodes").get<std::vector<int>>();
            reg.count = r.at("count").get<int>();
            reg.cyclic = r.value("cyclic", false);
            for (int n : reg.nodes)
                if (n < 0 || n >= static_cast<int>(d.nodes.size()))
                    throw RangeError("region " + std::to_string(reg.id) + " refers to unknown node");
            d.regions.push_back(std::move(reg));
        }
        if (j.contains("pretzel")) d.pretzel = j.at("pretzel").get<std::vector<int>>();
        d.validate();
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid diagram JSON: ") + e.what(), 0);
    }
}

}  // namespace skein
