#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace skein {

// Non-crossing perfect matching between `bottom` points (indices 0..m-1, left
// to right) and `top` points (indices m..m+k-1, left to right).
class Matching {
public:
    Matching() = default;
    Matching(int bottom, int top, std::vector<std::uint8_t> partner);

    static Matching identity(int n);
    // e_i on n strands: cap on bottom points (i-1,i) and cup on top points (i-1,i), 1 <= i < n.
    static Matching hook(int n, int i);
    static Matching from_arcs(int bottom, int top, const std::vector<std::pair<int, int>>& arcs);
    static Matching decode(const std::string& text);

    int bottom() const { return bottom_; }
    int top() const { return top_; }
    int size() const { return bottom_ + top_; }
    int partner(int p) const { return partner_[static_cast<std::size_t>(p)]; }
    const std::vector<std::uint8_t>& partners() const { return partner_; }
    // number of arcs joining a bottom point to a top point
    int through_strands() const;
    bool is_planar() const;

    // f then g: g stacked on top of f. Returns the matching and the number of closed loops.
    friend std::pair<Matching, int> compose(const Matching& f, const Matching& g);
    friend Matching tensor(const Matching& f, const Matching& g);
    // loops formed by the Markov closure (top i joined to bottom i)
    friend int closure_loops(const Matching& f);
    Matching reflected() const;  // top and bottom exchanged

    std::string encode() const;
    friend bool operator==(const Matching& a, const Matching& b) {
        return a.bottom_ == b.bottom_ && a.top_ == b.top_ && a.partner_ == b.partner_;
    }
    friend bool operator!=(const Matching& a, const Matching& b) { return !(a == b); }
    friend bool operator<(const Matching& a, const Matching& b) {
        if (a.bottom_ != b.bottom_) return a.bottom_ < b.bottom_;
        if (a.top_ != b.top_) return a.top_ < b.top_;
        return a.partner_ < b.partner_;
    }
    std::size_t hash() const;

private:
    int bottom_ = 0;
    int top_ = 0;
    std::vector<std::uint8_t> partner_;
};

struct MatchingHash {
    std::size_t operator()(const Matching& m) const { return m.hash(); }
};

std::uint64_t catalan(int n);

}  // namespace skein
