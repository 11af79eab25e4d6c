#include "skein/contract.hpp"

#include "skein/errors.hpp"

#include <unordered_map>
#include <unordered_set>

namespace skein {

namespace {

struct PairingHash {
    std::size_t operator()(const std::vector<std::uint16_t>& v) const {
        std::size_t h = v.size();
        for (auto x : v) h = h * 1000003u ^ x;
        return h;
    }
};

using Terms = std::unordered_map<std::vector<std::uint16_t>, LaurentPoly, PairingHash>;

std::vector<std::size_t> greedy_order(const std::vector<PairingBox>& boxes) {
    const std::size_t nb = boxes.size();
    std::vector<bool> used(nb, false);
    std::unordered_map<int, int> open;  // wire -> number of open ends
    std::vector<std::size_t> order;
    long long width = 0;
    for (std::size_t step = 0; step < nb; ++step) {
        std::size_t best = nb;
        long long best_width = 0, best_shared = 0;
        for (std::size_t b = 0; b < nb; ++b) {
            if (used[b]) continue;
            std::unordered_map<int, int> local;
            for (int w : boxes[b].wires) ++local[w];
            long long shared = 0, added = 0;
            for (const auto& [w, c] : local) {
                if (open.count(w)) shared += c;
                else if (c == 1) ++added;
            }
            const long long nw = width - shared + added;
            if (best == nb || nw < best_width || (nw == best_width && shared > best_shared)) {
                best = b;
                best_width = nw;
                best_shared = shared;
            }
        }
        used[best] = true;
        order.push_back(best);
        std::unordered_map<int, int> local;
        for (int w : boxes[best].wires) ++local[w];
        for (const auto& [w, c] : local) {
            if (open.erase(w)) continue;
            if (c == 1) open[w] = 1;
        }
        width = best_width;
    }
    return order;
}

}  // namespace

RationalFn contract(const std::vector<PairingBox>& boxes, const ContractOptions& opts) {
    {
        std::unordered_map<int, int> count;
        for (const auto& b : boxes) {
            for (int w : b.wires) ++count[w];
            for (const auto& [p, c] : b.terms)
                if (p.size() != b.wires.size()) throw ArityError("pairing size does not match box arity");
        }
        for (const auto& [w, c] : count)
            if (c != 2) throw ArityError("wire " + std::to_string(w) + " has " + std::to_string(c) + " ends");
    }
    std::vector<int> boundary;
    Terms blob;
    blob.emplace(std::vector<std::uint16_t>{}, LaurentPoly(1L));
    LaurentPoly den(1L);

    for (std::size_t bi : greedy_order(boxes)) {
        const PairingBox& box = boxes[bi];
        const int nbd = static_cast<int>(boundary.size());
        const int total = nbd + static_cast<int>(box.wires.size());
        std::vector<int> wire(boundary);
        wire.insert(wire.end(), box.wires.begin(), box.wires.end());
        std::vector<int> glue(static_cast<std::size_t>(total), -1);
        std::unordered_map<int, int> first;
        for (int p = 0; p < total; ++p) {
            auto it = first.find(wire[p]);
            if (it == first.end()) {
                first.emplace(wire[p], p);
            } else {
                glue[p] = it->second;
                glue[it->second] = p;
            }
        }
        std::vector<int> next_boundary, new_index(static_cast<std::size_t>(total), -1);
        for (int p = 0; p < total; ++p)
            if (glue[p] < 0) {
                new_index[p] = static_cast<int>(next_boundary.size());
                next_boundary.push_back(wire[p]);
            }

        Terms next;
        std::vector<char> visited(static_cast<std::size_t>(total));
        std::vector<std::uint16_t> result(next_boundary.size());
        for (const auto& [bp, bc] : blob) {
            for (const auto& [xp, xc] : box.terms) {
                auto partner = [&](int p) { return p < nbd ? static_cast<int>(bp[p]) : nbd + xp[p - nbd]; };
                std::fill(visited.begin(), visited.end(), 0);
                for (int s = 0; s < total; ++s) {
                    if (glue[s] >= 0 || visited[s]) continue;
                    visited[s] = 1;
                    int cur = partner(s);
                    while (glue[cur] >= 0) {
                        visited[cur] = 1;
                        cur = glue[cur];
                        visited[cur] = 1;
                        cur = partner(cur);
                    }
                    visited[cur] = 1;
                    result[new_index[s]] = static_cast<std::uint16_t>(new_index[cur]);
                    result[new_index[cur]] = static_cast<std::uint16_t>(new_index[s]);
                }
                int loops = 0;
                for (int s = 0; s < total; ++s) {
                    if (visited[s]) continue;
                    ++loops;
                    int cur = s;
                    do {
                        visited[cur] = 1;
                        cur = partner(cur);
                        visited[cur] = 1;
                        cur = glue[cur];
                    } while (cur != s);
                }
                LaurentPoly c = bc * xc;
                if (loops) c *= loop_power(loops);
                auto it = next.find(result);
                if (it == next.end()) next.emplace(result, std::move(c));
                else it->second += c;
            }
        }
        for (auto it = next.begin(); it != next.end();) {
            if (it->second.is_zero()) it = next.erase(it);
            else ++it;
        }
        if (next.size() > opts.max_states)
            throw BudgetError("max-states", static_cast<long long>(opts.max_states),
                              static_cast<long long>(next.size()));
        blob = std::move(next);
        boundary = std::move(next_boundary);
        den *= box.den;
    }
    auto it = blob.find({});
    if (it == blob.end()) return RationalFn();
    return RationalFn(it->second, den);
}

}  // namespace skein
