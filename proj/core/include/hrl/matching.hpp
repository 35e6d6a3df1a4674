#pragma once

#include <optional>
#include <vector>

namespace hrl {

// Assign to every slot one value from its candidate list so that all
// assigned values are distinct (a perfect matching on the slot side).
// Values are arbitrary ints.  Returns nullopt when no assignment exists.
std::optional<std::vector<int>> perfect_assignment(
    const std::vector<std::vector<int>>& candidates);

}  // namespace hrl
