#include "doctest.h"

#include "skein/diagram.hpp"
#include "skein/errors.hpp"

#include <numeric>
#include <random>
#include <set>

using namespace skein;

namespace {

LinkDiagram a_smoothed(const LinkDiagram& d, int region) {
    const auto& r = d.region(region);
    const auto& first = d.nodes[r.nodes.front()].arcs;
    const auto& last = d.nodes[r.nodes.back()].arcs;
    LinkDiagram out;
    for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i) {
        if (d.region_of(i) == region) continue;
        Node n = d.nodes[i];
        for (int& a : n.arcs) {
            if (a == first[1]) a = first[0];
            if (a == last[3]) a = last[2];
        }
        out.nodes.push_back(n);
    }
    out.validate();
    return out;
}

}  // namespace

TEST_CASE("pretzel construction") {
    auto d = pretzel({1, 1, 1});
    CHECK(d.crossing_count() == 3);
    CHECK(d.regions.size() == 3);
    CHECK(d.name == "P(1,1,1)");
    CHECK_NOTHROW(d.validate());

    auto big = pretzel({8, 6, 3});
    CHECK(big.crossing_count() == 17);
    CHECK(is_alternating(big));
    CHECK(is_reduced_alternating(big));
    for (const auto& r : big.regions) CHECK_FALSE(r.cyclic);
    CHECK(big.region(1).count == 8);

    auto z = pretzel({2, 0, 2});
    CHECK(z.crossing_count() == 4);
    CHECK(z.nodes[z.region(2).nodes[0]].kind == NodeKind::Smoothing);
    CHECK(is_reduced_alternating(pretzel({2, 3, 2})));
    CHECK_THROWS_AS(pretzel({1, -1, 2}), RangeError);
}

TEST_CASE("twist region auto-detection agrees with the pretzel labels") {
    auto d = pretzel({3, 2, 4});
    auto p = parse_pd(d.to_pd());
    REQUIRE(p.regions.size() == 3);
    std::multiset<int> sizes;
    for (const auto& r : p.regions) sizes.insert(r.count);
    CHECK(sizes == std::multiset<int>{2, 3, 4});
    CHECK(circle_count_minus(p) == circle_count_minus(d));
    CHECK(circle_count_plus(p) == circle_count_plus(d));
}

TEST_CASE("PD parsing") {
    auto hopf = parse_pd("PD[X[1,4,2,3],X[3,2,4,1]]");
    CHECK(hopf.crossing_count() == 2);
    REQUIRE(hopf.regions.size() == 1);
    CHECK(hopf.regions[0].count == 2);
    CHECK(hopf.regions[0].cyclic);

    CHECK_THROWS_AS(parse_pd("PD[X[1,2,3]]"), ParseError);
    CHECK_THROWS_AS(parse_pd("PD[X[1,2,3,4]]"), ParseError);
    CHECK_THROWS_AS(parse_pd("PD[X[1,1,2,2]"), ParseError);
    CHECK_THROWS_AS(parse_pd("PD[X[1,1,2,2]] junk"), ParseError);

    auto curl = parse_pd("PD[X[1,1,2,2]]");
    CHECK(curl.crossing_count() == 1);
    CHECK(circle_count_plus(curl) == 2);
    CHECK(circle_count_minus(curl) == 1);
    CHECK_FALSE(is_minus_adequate(curl));
    CHECK_FALSE(is_adequate(curl));
    CHECK(minus_graph(curl).has_loop());
    CHECK_FALSE(plus_graph(curl).has_loop());

    auto empty = parse_pd("PD[]");
    CHECK(empty.crossing_count() == 0);
    CHECK(circle_count_minus(empty) == 1);

    auto annotated = parse_pd(pretzel({2, 2, 2}).to_pd() + " Regions[[1,2],[3,4],[5,6]]");
    CHECK(annotated.regions.size() == 3);
    CHECK_THROWS_AS(parse_pd(pretzel({2, 2, 2}).to_pd() + " Regions[[1,3]]"), ParseError);
}

TEST_CASE("states and minus graphs") {
    auto d = pretzel({1, 1, 1});
    // brute force: the all-B state of P(1,1,1) has one circle per gap between regions
    CHECK(circle_count_minus(d) == 3);
    CHECK(minus_graph(d).vertices == 3);
    CHECK(circle_count_plus(d) == 2);
    CHECK(circle_count_plus(pretzel({3, 1, 1})) == 4);

    auto g = minus_graph(pretzel({2, 2, 2}));
    CHECK(g.edges.size() == 6);
    CHECK(g.reduce().edges.size() == 3);
    CHECK_FALSE(g.has_loop());

    auto base = reduced_minus_graph(pretzel({2, 2, 2}));
    CHECK(isomorphic(base, reduced_minus_graph(pretzel({3, 4, 2}))));
    CHECK(isomorphic(base, reduced_minus_graph(pretzel({5, 2, 3}))));
    CHECK_FALSE(isomorphic(base, reduced_minus_graph(pretzel({2, 2, 2, 2}))));

    auto dot = base.to_dot("G");
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("--") != std::string::npos);
    CHECK(StateGraph{}.to_dot() == "graph G {\n}\n");

    CHECK_THROWS_AS(apply_state(d, State{1, 1}), PreconditionError);
    CHECK_THROWS_AS(apply_state(d, State{1, 0, 1}), PreconditionError);
}

TEST_CASE("state counts are invariant under arc relabeling") {
    std::mt19937 rng(7);
    auto d = pretzel({3, 2, 2});
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> perm(200);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto e = d;
        for (auto& n : e.nodes)
            for (int& a : n.arcs) a = perm[a] + 1;
        State s(static_cast<std::size_t>(d.crossing_count()));
        for (auto& x : s) x = (rng() & 1) ? 1 : -1;
        CHECK(apply_state(e, s) == apply_state(d, s));
    }
}

TEST_CASE("twist editing") {
    for (const auto& c : std::vector<std::vector<int>>{{2, 2, 2}, {3, 1, 2}, {4, 5, 3}}) {
        auto d = pretzel(c);
        auto up = set_twists(d, {{1, 1}});
        CHECK(up.crossing_count() == d.crossing_count() + 1);
        CHECK(*up.pretzel == std::vector<int>{c[0] + 1, c[1], c[2]});
        CHECK(circle_count_minus(up) == circle_count_minus(d));
        CHECK(circle_count_plus(up) == circle_count_plus(d) + 1);
        // positively smoothing one crossing of region 1 and untwisting the
        // remaining curls joins its legs by two turnbacks
        CHECK(circle_count_minus(a_smoothed(d, 1)) == circle_count_minus(d) - 1);
    }
    auto d = pretzel({2, 3, 2});
    auto z = set_twists(d, {{2, -3}});
    CHECK(z.name == "P(2,0,2)");
    CHECK(circle_count_minus(z) == circle_count_minus(pretzel({2, 0, 2})));
    CHECK_THROWS_AS(set_twists(d, {{2, -4}}), RangeError);
    CHECK_THROWS_AS(set_twists(d, {{9, 1}}), RangeError);

    auto hopf = parse_pd("PD[X[1,4,2,3],X[3,2,4,1]]");
    auto more = set_twists(hopf, {{1, 2}});
    CHECK(more.crossing_count() == 4);
    CHECK(circle_count_minus(more) == circle_count_minus(hopf));
    CHECK_THROWS_AS(set_twists(hopf, {{1, -2}}), PreconditionError);
}

TEST_CASE("mirror and JSON") {
    auto d = pretzel({2, 3, 2});
    auto m = mirror(d);
    CHECK(circle_count_minus(m) == circle_count_plus(d));
    CHECK(circle_count_plus(m) == circle_count_minus(d));

    auto back = from_json(to_json(d));
    CHECK(back.name == d.name);
    CHECK(back.to_pd() == d.to_pd());
    CHECK(back.regions.size() == d.regions.size());
    CHECK(*back.pretzel == *d.pretzel);
    CHECK_THROWS_AS(from_json("{"), ParseError);
    CHECK_THROWS_AS(from_json("{\"nodes\":[{\"kind\":\"crossing\",\"arcs\":[1,2,3,4]}],\"regions\":[]}"), ArityError);
}
