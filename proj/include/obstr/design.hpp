#pragma once
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "obstr/partition.hpp"
#include "obstr/rational.hpp"

namespace obstr {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

// Three set partitions of {0..d-1}, one per direction. Blocks are sorted
// internally and listed in order of their smallest element.
struct SetPartitionTriple {
    int d = 0;
    std::array<std::vector<std::vector<int>>, 3> blocks;
};

// Point set in a 3-dimensional box, coordinates 1-based. Points are stored
// sorted; slice structure per direction is derived on construction.
class ObstructionDesign {
public:
    ObstructionDesign(std::array<int, 3> box, std::vector<std::array<int, 3>> points);

    const std::array<int, 3>& box() const { return box_; }
    const std::vector<std::array<int, 3>>& points() const { return points_; }
    int point_count() const { return static_cast<int>(points_.size()); }

    // nonempty slices in direction k, each a sorted list of point indices,
    // ordered by coordinate value
    const std::vector<std::vector<int>>& slices(int k) const { return slices_[k]; }
    const std::vector<int>& slice_values(int k) const { return slice_values_[k]; }
    int slice_of(int k, int point) const { return slice_of_[k][point]; }

    Partition sorted_marginal(int k) const;
    bool operator==(const ObstructionDesign&) const = default;

private:
    std::array<int, 3> box_;
    std::vector<std::array<int, 3>> points_;
    std::array<std::vector<std::vector<int>>, 3> slices_;
    std::array<std::vector<int>, 3> slice_values_;
    std::array<std::vector<int>, 3> slice_of_;
};

// transpose of the sorted marginals, one partition per direction
PartitionTriple design_type(const ObstructionDesign& h);

SetPartitionTriple slices_as_set_partitions(const ObstructionDesign& h);

// Inverse construction. Throws IntersectionViolation when two elements
// share a block in all three directions (the triple-intersection bound),
// std::invalid_argument when the inputs are not partitions of {0..d-1}.
ObstructionDesign from_set_partitions(const SetPartitionTriple& s);

// adjacency: two points conflict when some direction puts them in a
// common slice
std::vector<std::vector<int>> conflict_adjacency(const ObstructionDesign& h);

// orbit test under independent coordinate relabelings per direction;
// padding by empty slices is ignored
bool equivalent(const ObstructionDesign& a, const ObstructionDesign& b);

// Lexicographically smallest point list achievable by admissible
// relabelings (those keeping marginals sorted), over a tight box with no
// empty slices. Branch-and-bound; throws LimitExceeded past the budget.
ObstructionDesign canonical_form(const ObstructionDesign& h,
                                 std::uint64_t budget = kDefaultNodeBudget);

// stream every design whose direction-k marginal of coordinate value i is
// exactly transpose(lambda_k)_i; deterministic lexicographic order
void for_each_design(const PartitionTriple& type,
                     const std::function<void(const ObstructionDesign&)>& fn,
                     std::uint64_t budget = kDefaultNodeBudget);

struct DesignClass {
    ObstructionDesign representative;   // canonical form
    Int orbit_size;                     // raw designs mapping to it
};

struct Classification {
    std::vector<DesignClass> classes;   // sorted by representative point list
    Int raw_count;                      // total raw designs streamed
};

// group the raw stream into equivalence classes
Classification classify_designs(const PartitionTriple& type,
                                std::uint64_t budget = kDefaultNodeBudget);

// canonical = one representative per class; otherwise the raw stream
std::vector<ObstructionDesign> enumerate_designs(const PartitionTriple& type,
                                                 bool canonical,
                                                 std::uint64_t budget = kDefaultNodeBudget);

Int count_classes(const PartitionTriple& type,
                  std::uint64_t budget = kDefaultNodeBudget);

// seeded random design: random box with sides in [1, max_side], then d
// distinct random cells (d <= max_d, capped by the box volume)
ObstructionDesign random_design(int max_d, int max_side, std::uint64_t seed);

} // namespace obstr
