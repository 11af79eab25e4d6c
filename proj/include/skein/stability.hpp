#pragma once

#include "skein/algebra.hpp"
#include "skein/diagram.hpp"
#include "skein/invariants.hpp"

#include <map>
#include <string>
#include <vector>

namespace skein {

// Anchor reset to 0 and one global sign chosen so the first coefficient is positive.
CoeffList normalize(const CoeffList& c);
// The first n coefficients agree up to one global sign and a degree shift.
bool n_equivalent(const CoeffList& a, const CoeffList& b, std::size_t n);
// Largest n (bounded by both windows) with n_equivalent(a, b, n).
std::size_t stable_prefix(const CoeffList& a, const CoeffList& b);

// A-units: raw coefficients of the A-exponent (step 1) of unreduced brackets.
// q-units: coefficients of q (step 4 in A) of the reduced colored Jones polynomial.
enum class Grading { AUnits, QUnits };
std::string grading_name(Grading g);

// Integer expression in one parameter k: + - * parentheses, integer literals,
// implicit products such as 3k or 2(k+1).
class FamilyExpr {
public:
    FamilyExpr() = default;
    explicit FamilyExpr(long long constant);
    static FamilyExpr parse(const std::string& text);
    long long operator()(long long k) const;
    const std::string& text() const { return text_; }
    bool depends_on_k() const;

    struct Op {
        char kind;  // 'n' literal, 'k' parameter, or one of + - * ~ (negation)
        long long value = 0;
    };

private:
    std::string text_;
    std::vector<Op> program_;  // postfix
};

// How the color expression is read: the index N of J_N, or the projector
// color n of the cabling (J_N uses n = N - 1).
enum class ColorIndex { Jones, Projector };

struct FamilySpec {
    std::string label;
    LinkDiagram base;
    std::map<int, FamilyExpr> increments;  // region id -> added crossings
    FamilyExpr color{2};
    ColorIndex index = ColorIndex::Jones;
    Grading grading = Grading::QUnits;
    int k_min = 1;
    int k_max = 1;

    // "P(k+2,k+4,k+1)" shorthand: every region given by an expression in k.
    static FamilySpec pretzel_family(const std::string& text);
    LinkDiagram member(int k) const;
    int projector_color(int k) const;
    void validate() const;
};

struct Comparison {
    std::string left, right;
    std::size_t required = 0;
    std::size_t depth = 0;
    bool pass = false;
    CoeffList left_window, right_window;  // raw windows, anchors kept as metadata
};

struct StabilityReport {
    std::string title;
    Grading grading = Grading::QUnits;
    std::string rate;
    std::vector<Comparison> steps;
    CoeffList tail;  // normalized common prefix estimate
    bool passed() const;
    std::string to_json() const;
    std::string to_text() const;
};

// Window of the invariant selected by the grading: unreduced ⟨S_n⟩ in A-units,
// reduced J_{n+1} in q-units.
CoeffList invariant_window(const LinkDiagram& d, int projector_color, Grading g, std::size_t len,
                           const InvariantOptions& opts = {});
LaurentPoly family_value(const LinkDiagram& d, int projector_color, Grading g, const InvariantOptions& opts = {});
Comparison compare(const std::string& left, const LaurentPoly& a, const std::string& right, const LaurentPoly& b,
                   std::size_t required, Grading g);

// Checks P_k ≐_{rate(k)} P_{k+1} for consecutive members and reports the tail prefix.
StabilityReport family_tail(const FamilySpec& spec, const FamilyExpr& rate, const InvariantOptions& opts = {});

// Bracket twist stability: the step to a member whose changing regions have
// at least m crossings is checked at 4m + slack A-coefficients.
StabilityReport check_bracket_rate(const FamilySpec& spec, int slack = 0, const InvariantOptions& opts = {});
// Colored twist stability at 4n(m-1)+4 + slack A-coefficients of ⟨S_n⟩.
StabilityReport check_colored_rate(const FamilySpec& spec, int slack = 0, const InvariantOptions& opts = {});
// ⟨S_n(D)⟩ ≐_{4n} ⟨S_{n-1}(D)⟩ for n in [n_min, n_max].
StabilityReport check_color_stability(const LinkDiagram& d, int n_min, int n_max, int slack = 0,
                                      const InvariantOptions& opts = {});
// ⟨S_n(D)⟩ ≐_{4n} ⟨S_{n-1}(D')⟩ where D' adds extra twists to some regions.
StabilityReport check_cross_twist(const LinkDiagram& d, int n, const std::map<int, int>& extra, int slack = 0,
                                  const InvariantOptions& opts = {});
// ⟨S_n(D1)⟩ ≐_{4n} ⟨S_n(D2)⟩ for diagrams with isomorphic reduced minus-graphs.
StabilityReport check_graph_stability(const LinkDiagram& d1, const LinkDiagram& d2, int n, int slack = 0,
                                      const InvariantOptions& opts = {});

}  // namespace skein
