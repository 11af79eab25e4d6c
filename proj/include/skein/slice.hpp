#pragma once

#include "skein/tl.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace skein {

enum class SliceKind { Identity, Cup, Cap, Projector, Merge, Split, Crossing, Custom };

struct Slice {
    SliceKind kind = SliceKind::Identity;
    int pos = 0;
    int n = 0;        // projector size / identity width
    int a = 0, b = 0, c = 0;  // vertex colors
    int sign = -1;    // crossing type
    std::shared_ptr<const ScaledMorphism> custom;

    int in_arity() const;   // points consumed at pos
    int out_arity() const;  // points produced at pos
    std::string describe() const;
};

// Elementary crossing on two adjacent strands of a vertical 2-braid.
// sign -1: A^-1 * id + A * e   (the crossing of a negative twist region)
// sign +1: A * id + A^-1 * e
ScaledMorphism crossing_morphism(int sign);
// Crossing of two parallel n-cables built from n^2 elementary crossings.
ScaledMorphism cabled_crossing_morphism(int n, int sign);
// The i-th colored smoothing of a crossing of two n-cables: n-i turnbacks
// at the bottom and top, i through strands on each side.
Matching clasp_smoothing(int n, int i);

// Ordered list of slices composed bottom to top. The builder tracks the
// running width; evaluate() re-validates arities and reports the failing slice.
class SliceProgram {
public:
    SliceProgram() = default;

    int width() const { return width_; }
    int max_width() const { return max_width_; }
    const std::vector<Slice>& slices() const { return slices_; }
    bool closed() const { return width_ == 0; }

    SliceProgram& identity();
    SliceProgram& cup(int pos);
    SliceProgram& cap(int pos);
    SliceProgram& nested_cups(int n, int pos);
    SliceProgram& nested_caps(int n, int pos);
    SliceProgram& projector(int n, int pos);
    SliceProgram& merge(int a, int b, int c, int pos);
    SliceProgram& split(int a, int b, int c, int pos);
    SliceProgram& crossing(int sign, int pos);
    SliceProgram& cabled_crossing(int n, int sign, int pos);
    SliceProgram& custom(std::shared_ptr<const ScaledMorphism> m, int pos);
    SliceProgram& append(const Slice& s);

private:
    std::vector<Slice> slices_;
    int width_ = 0;
    int max_width_ = 0;
};

struct EvalOptions {
    std::size_t max_states = 5'000'000;  // cap on simultaneous matching states
};

// Sweep-composition of a closed program into a scalar.
RationalFn evaluate(const SliceProgram& program, const EvalOptions& opts = {});
// Sweep of an open program: the resulting morphism from 0 points to width() points.
ScaledMorphism evaluate_open(const SliceProgram& program, const EvalOptions& opts = {});

// Closed theta network with edges colored a, b, c.
SliceProgram theta_program(int a, int b, int c);
// Prism network: a top n-colored rim and a bottom n-colored rim, joined by
// rungs colored rungs[i] (even colors 2p_i), one rung per twist region.
SliceProgram drum(int n, const std::vector<int>& rungs);
// n-cabled pretzel with every region a vertical column of k_i negative cabled
// crossings. When socket_p >= 0 the first region is replaced by the clasped
// element T_{n,p} (merge to 2p, projector, split).
SliceProgram pretzel_program(const std::vector<int>& counts, int n, int socket_p = -1);

}  // namespace skein
