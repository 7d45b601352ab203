#pragma once
#include <cstdint>
#include <vector>

#include "obstr/design.hpp"

namespace obstr {

struct ColoringResult {
    int colors = 0;
    std::vector<int> coloring;   // per point, 1-based colors
    std::vector<int> clique;     // pairwise-conflicting points proving a lower bound
};

// Exact chromatic number of the conflict graph: proper colorings must
// separate any two points sharing a slice. Branch and bound between a
// greedy clique lower bound and a greedy upper bound.
ColoringResult chromatic_index_exact(const ObstructionDesign& h,
                                     std::uint64_t budget = kDefaultNodeBudget);

// Largest-degree-first greedy coloring; at most 1 + max degree colors.
ColoringResult chromatic_index_greedy(const ObstructionDesign& h);

// true when the coloring separates every conflicting pair
bool coloring_is_proper(const ObstructionDesign& h, const std::vector<int>& coloring);

} // namespace obstr
