#pragma once
#include <cstdint>
#include <map>
#include <vector>

#include "obstr/design.hpp"
#include "obstr/multipoly.hpp"
#include "obstr/tensor.hpp"

namespace obstr {

struct EvalOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
    int threads = 1;
};

struct EvalStats {
    std::uint64_t nodes = 0;       // label assignments attempted
    std::uint64_t completed = 0;   // labelings contributing a term
    std::uint64_t pruned = 0;      // subtrees cut by conflicts or zero blocks
};

struct EvalResult {
    Rat value;
    EvalStats stats;
};

// Product over blocks of det of the block's columns restricted to the
// first |block| rows; block members index into column_of_element, column
// order inside a block is increasing element index.
// Throws BlockTooLarge when a block is taller than a column.
Rat eval_blocks(const std::vector<std::vector<int>>& blocks,
                const std::vector<RatVec>& column_of_element);

MultiPoly eval_blocks_poly(const std::vector<std::vector<int>>& blocks,
                           const std::vector<std::vector<MultiPoly>>& column_of_element);

// One direction of an abstract labeled set partition.
Rat eval_set_partition(const std::vector<std::vector<int>>& blocks,
                       const std::vector<RatVec>& column_of_element);

// Single labeling of a design: labeling[p] picks a rank-one term of t for
// point p; the three directions multiply.
Rat eval_design_labeling(const ObstructionDesign& h, const std::vector<int>& labeling,
                         const Rank1Decomposition& t);

// Same with explicit polynomial columns per point and direction.
MultiPoly eval_design_labeling_poly(const ObstructionDesign& h,
                                    const std::array<std::vector<std::vector<MultiPoly>>, 3>& columns);

// Full sum over labelings of the rank-one terms of t. Branches die as soon
// as two points of a common slice carry equal component vectors or a
// completed block has determinant zero, so ranks below the chromatic index
// cost little. Deterministic for any thread count.
EvalResult eval_fH(const ObstructionDesign& h, const Rank1Decomposition& t,
                   const EvalOptions& opts = {});

// Element of the d-th tensor power of a triple tensor space, stored as a
// sparse combination of basis tensors (lists of d index triples, 1-based).
struct TensorPowerElement {
    int d = 0;
    std::array<int, 3> dims{0, 0, 0};
    std::map<std::vector<std::array<int, 3>>, Rat> entries;
};

// Symmetrize over the d positions, then apply the block evaluation in all
// three directions. Exact; divides by d!.
Rat eval_fH_general_argument(const SetPartitionTriple& s, const TensorPowerElement& t);

struct IdentityCheck {
    Rat lhs, rhs;
    bool ok = false;
};

// f(diag(alpha) w) against the predicted monomial in alpha times f(w);
// alpha entries must be nonzero
IdentityCheck check_weight_scaling(const ObstructionDesign& h, const Rank1Decomposition& w,
                                   const std::array<RatVec, 3>& alpha,
                                   const EvalOptions& opts = {});

// f(L w) = f(w) for lower-triangular L with unit diagonal
IdentityCheck check_unipotent_invariance(const ObstructionDesign& h,
                                         const Rank1Decomposition& w,
                                         const GroupElementTriple& l,
                                         const EvalOptions& opts = {});

struct SpanRankResult {
    int rank = 0;
    int class_count = 0;
    int samples = 0;
};

// Dimension of the span of the functionals f_H over the classes of the
// given type, measured by exact rank of the evaluation matrix on seeded
// random integer tensors in ambient dimension n per direction.
SpanRankResult span_rank(const PartitionTriple& lambda, int n, int samples,
                         std::uint64_t seed, const EvalOptions& opts = {});

} // namespace obstr
