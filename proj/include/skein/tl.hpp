#pragma once

#include "skein/matching.hpp"
#include "skein/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <unordered_map>

namespace skein {

// Linear combination of matchings over a common denominator: sum(num_t * t) / den.
// All arithmetic on numerators stays inside Laurent polynomials.
struct ScaledMorphism {
    int bottom = 0;
    int top = 0;
    LaurentPoly den{1L};
    std::unordered_map<Matching, LaurentPoly, MatchingHash> terms;

    static ScaledMorphism identity(int n);
    static ScaledMorphism single(const Matching& m, const LaurentPoly& coeff = LaurentPoly(1L));
    void add(const Matching& m, const LaurentPoly& coeff);
    std::size_t size() const { return terms.size(); }
};

ScaledMorphism compose(const ScaledMorphism& f, const ScaledMorphism& g);
ScaledMorphism tensor(const ScaledMorphism& f, const ScaledMorphism& g);
// id_left ⊗ f ⊗ id_right
ScaledMorphism pad(const ScaledMorphism& f, int left, int right);

// Finite linear combination of matchings with rational-function coefficients.
class TLMorphism {
public:
    TLMorphism(int bottom, int top) : bottom_(bottom), top_(top) {}
    static TLMorphism identity(int n);
    static TLMorphism hook(int n, int i);
    static TLMorphism from_matching(const Matching& m, const RationalFn& c = RationalFn(1L));
    static TLMorphism from_scaled(const ScaledMorphism& s);

    int bottom_arity() const { return bottom_; }
    int top_arity() const { return top_; }
    const std::map<Matching, RationalFn>& terms() const { return terms_; }
    RationalFn coeff(const Matching& m) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const Matching& m, const RationalFn& c);
    TLMorphism& operator+=(const TLMorphism& o);
    TLMorphism operator*(const RationalFn& c) const;
    friend TLMorphism operator+(TLMorphism a, const TLMorphism& b) { return a += b; }
    friend TLMorphism operator-(TLMorphism a, const TLMorphism& b) { return a += b * RationalFn(-1L); }
    friend bool operator==(const TLMorphism& a, const TLMorphism& b);
    friend bool operator!=(const TLMorphism& a, const TLMorphism& b) { return !(a == b); }

    ScaledMorphism scaled() const;
    std::string to_string() const;

private:
    int bottom_, top_;
    std::map<Matching, RationalFn> terms_;
};

// f then g (g stacked on top of f).
TLMorphism compose(const TLMorphism& f, const TLMorphism& g);
TLMorphism tensor(const TLMorphism& f, const TLMorphism& g);
RationalFn closure(const TLMorphism& f);
RationalFn closure(const ScaledMorphism& f);

// Jones-Wenzl projector f^(n), built by the single-clasp form of Wenzl's
// recursion and memoized (optionally persisted, see set_projector_cache_dir).
TLMorphism jones_wenzl(int n);
std::shared_ptr<const ScaledMorphism> jones_wenzl_scaled(int n);
// Directory for the persistent projector cache; empty disables persistence.
void set_projector_cache_dir(const std::string& dir);
std::string projector_cache_dir();
// Drops the in-process memo (persisted files stay).
void clear_projector_memo();

// Bare trivalent vertex with a+b bottom points merging into c top points.
Matching vertex_matching(int a, int b, int c);
enum class VertexOrientation { Merge, Split };
// tau_{a,b,c} with projectors on all three legs. Merge: (a,b) below, c above;
// Split: c below, (a,b) above.
TLMorphism vertex_morphism(int a, int b, int c, VertexOrientation o = VertexOrientation::Merge);

}  // namespace skein
