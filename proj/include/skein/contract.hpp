#pragma once

#include "skein/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace skein {

// A box of a closed network: a linear combination of perfect pairings of its
// points. Every point carries a wire id; each wire id occurs at exactly two
// points of the whole network (possibly on the same box).
struct PairingBox {
    std::vector<int> wires;
    std::vector<std::pair<std::vector<std::uint16_t>, LaurentPoly>> terms;  // local partner arrays
    LaurentPoly den{1L};
};

struct ContractOptions {
    std::size_t max_states = 5'000'000;
};

// Contracts the network box by box (greedy order keeping the open boundary
// small), replacing each closed loop by delta. Returns the closed value.
RationalFn contract(const std::vector<PairingBox>& boxes, const ContractOptions& opts = {});

}  // namespace skein
