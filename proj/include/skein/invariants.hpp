#pragma once

#include "skein/algebra.hpp"
#include "skein/diagram.hpp"
#include "skein/slice.hpp"

#include <cstddef>
#include <string>

namespace skein {

struct InvariantOptions {
    int max_crossings = 20;               // cap for bracket_state_sum
    std::size_t max_networks = 100'000;   // cap on (n+1)^c colored states and (n+1)^r fusion terms
    std::size_t max_states = 5'000'000;   // cap on simultaneous pairing states during contraction
    int threads = 0;                      // 0: SKEIN_THREADS or hardware concurrency
};

// Unreduced (colored) Kauffman bracket, normalized so the empty diagram is 1;
// the framing monomial is not corrected.
struct BracketValue {
    LaurentPoly value;
    int color = 1;
    std::string pipeline;
};

BracketValue bracket_state_sum(const LinkDiagram& d, const InvariantOptions& opts = {});
BracketValue colored_state_sum(const LinkDiagram& d, int n, const InvariantOptions& opts = {});
BracketValue colored_bracket_fused(const LinkDiagram& d, int n, const InvariantOptions& opts = {});
BracketValue unreduced_colored_jones(const LinkDiagram& d, int n, const InvariantOptions& opts = {});

// J_N = J̃_{N-1} / Δ_{N-1} as a Laurent polynomial in A, and after A = q^{1/4}.
LaurentPoly reduced_jones_poly(const LinkDiagram& d, int N, const InvariantOptions& opts = {});
QPoly reduced_jones(const LinkDiagram& d, int N, const InvariantOptions& opts = {});

// -c n^2 - 2 n |s_-(D)|; requires minus-adequacy (n = 1) or a reduced alternating diagram.
int predicted_min_degree(const LinkDiagram& d, int n);

// Υ(n,p): the first twist region of a pretzel replaced by T_{n,p}, the other
// regions kept as n-cabled crossings.
SliceProgram build_upsilon(const LinkDiagram& d, int n, int p);
// -n^2 (c - k_1) - 2 (|s_-| n - (n - p))
int upsilon_predicted_min_degree(const LinkDiagram& d, int n, int p);

// Drops memoized fused brackets.
void clear_invariant_memo();

}  // namespace skein
