#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skein {

// A node is either a crossing X[a,b,c,d] (labels counterclockwise, a and c on
// the under-strand) or a smoothed spot left by a zero-size twist region, which
// always joins (a,d) and (b,c).
enum class NodeKind { Crossing, Smoothing };

struct Node {
    NodeKind kind = NodeKind::Crossing;
    std::array<int, 4> arcs{};
};

// Positive (A-) smoothing joins (a,b),(c,d); negative (B-) smoothing joins (a,d),(b,c).
// A negative twist region is a chain of crossings in which consecutive crossings
// share both arcs of an A-pair. Region crossings are stored rotated so that
// positions (0,1) face the previous crossing and (2,3) the next one; the four
// boundary legs are then (first,0), (first,1), (last,2), (last,3).
struct TwistRegion {
    int id = 0;
    std::vector<int> nodes;  // node indices, in chain order
    int count = 0;           // crossing count; 0 = a single smoothing node
    bool cyclic = false;     // the chain closes up on itself
};

class LinkDiagram {
public:
    std::string name;
    std::vector<Node> nodes;
    std::vector<TwistRegion> regions;
    int free_loops = 0;                      // crossingless components
    std::optional<std::vector<int>> pretzel;  // region sizes when built as a pretzel

    int crossing_count() const;
    // node indices of the crossings, in node order (the index space of a State)
    std::vector<int> crossings() const;
    // throws unless every arc label occurs exactly twice
    void validate() const;
    const TwistRegion& region(int id) const;
    // region id containing a node, or 0
    int region_of(int node) const;
    std::string to_pd() const;
};

LinkDiagram unknot();
// Standard pretzel diagram with r vertical negative twist regions of c_i crossings.
LinkDiagram pretzel(const std::vector<int>& counts);
// PD[X[a,b,c,d],...] optionally followed by Regions[[i,j,...],...] with 1-based
// crossing indices listed in chain order. Unlisted crossings are grouped by
// automatic detection of maximal A-bigon chains.
LinkDiagram parse_pd(const std::string& text);
LinkDiagram mirror(const LinkDiagram& d);

// Classical state: +1 (A) or -1 (B) per crossing, indexed like crossings().
using State = std::vector<int>;
int apply_state(const LinkDiagram& d, const State& s);
State all_state(const LinkDiagram& d, int sign);
int circle_count_minus(const LinkDiagram& d);
int circle_count_plus(const LinkDiagram& d);

struct StateGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    bool reduced = false;

    bool has_loop() const;
    StateGraph reduce() const;
    std::string to_dot(const std::string& name = "G") const;
};

StateGraph minus_graph(const LinkDiagram& d);
StateGraph plus_graph(const LinkDiagram& d);
StateGraph reduced_minus_graph(const LinkDiagram& d);
bool isomorphic(const StateGraph& g, const StateGraph& h);

bool is_minus_adequate(const LinkDiagram& d);
bool is_adequate(const LinkDiagram& d);
bool is_alternating(const LinkDiagram& d);
// Alternating and adequate: for alternating diagrams this is equivalent to reduced.
bool is_reduced_alternating(const LinkDiagram& d);

// New diagram with region sizes k_i + deltas[id]; zero sizes become smoothings.
LinkDiagram set_twists(const LinkDiagram& d, const std::map<int, int>& deltas);

std::string to_json(const LinkDiagram& d);
LinkDiagram from_json(const std::string& text);

}  // namespace skein
