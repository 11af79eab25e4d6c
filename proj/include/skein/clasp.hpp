#pragma once

#include "skein/rational.hpp"
#include "skein/tl.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace skein {

// Transfer-matrix evaluator for drum networks. The two rims are swept left
// to right as 2n parallel strands clasped by P = f_n ⊗ f_n; every element of
// P·TL_{2n}·P is a combination of the n+1 clasped elements P·H_j·P, where H_j
// joins the two n-groups by j caps on each side. A rung colored 2p contributes
// P·X_p·P with X_p the rotated projector f_{2p} between the groups.
class ClaspedAlgebra {
public:
    explicit ClaspedAlgebra(int n);

    int color() const { return n_; }
    // H_j as a 2n -> 2n matching.
    static Matching basis_matching(int n, int j);
    // The rung element P·X_p·P expressed in the clasped basis.
    std::vector<RationalFn> rung_element(int p) const;
    // Closed drum value for rungs colored 2p_i, in sweep order.
    RationalFn drum_value(const std::vector<int>& ps) const;

    static std::shared_ptr<const ClaspedAlgebra> get(int n);

private:
    struct Vec {
        std::vector<LaurentPoly> num;
        LaurentPoly den{1L};
    };
    Vec multiply(const Vec& x, const Vec& y) const;
    const Vec& rung(int p) const;

    int n_;
    // structure constants: compose(H̄_a, H̄_b) = sum_c N[a][b][c]/den_struct * H̄_c
    std::vector<std::vector<std::vector<LaurentPoly>>> structure_;
    LaurentPoly den_struct_{1L};
    std::vector<LaurentPoly> trace_;
    LaurentPoly den_trace_{1L};
    std::vector<Vec> rungs_;
    mutable std::mutex memo_mu_;
    mutable std::map<std::vector<int>, RationalFn> memo_;
};

// Classifies a 2n -> 2n matching: the clasped index j, or -1 when an arc joins
// two points of the same group on the same side (killed by the clasps).
int clasped_index(const Matching& m, int n);

}  // namespace skein
