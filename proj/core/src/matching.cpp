#include "hrl/matching.hpp"

#include <unordered_map>

namespace hrl {

namespace {

struct Kuhn {
    const std::vector<std::vector<int>>& cand;
    std::unordered_map<int, int> owner;  // value -> slot
    std::vector<char> visited_slot;

    bool augment(int slot) {
        if (visited_slot[slot]) return false;
        visited_slot[slot] = 1;
        for (int v : cand[slot]) {
            auto it = owner.find(v);
            if (it == owner.end() || augment(it->second)) {
                owner[v] = slot;
                return true;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> perfect_assignment(
    const std::vector<std::vector<int>>& candidates) {
    size_t n = candidates.size();
    Kuhn k{candidates, {}, {}};
    for (size_t s = 0; s < n; ++s) {
        k.visited_slot.assign(n, 0);
        if (!k.augment(static_cast<int>(s))) return std::nullopt;
    }
    std::vector<int> out(n, -1);
    for (const auto& [val, slot] : k.owner) out[slot] = val;
    return out;
}

}  // namespace hrl
