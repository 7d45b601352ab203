#pragma once
#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "obstr/linalg.hpp"
#include "obstr/rational.hpp"

namespace obstr {

// Order-3 tensor with exact rational entries; zero entries are never stored.
// Coordinates are 1-based.
struct SparseTensor3 {
    std::array<int, 3> dims{0, 0, 0};
    std::map<std::array<int, 3>, Rat> entries;

    void set(int i, int j, int k, const Rat& v);
    Rat at(int i, int j, int k) const;
    bool operator==(const SparseTensor3&) const = default;
};

// Sum of r rank-one tensors u ⊗ v ⊗ x, kept as the list of vector triples.
struct Rank1Decomposition {
    std::array<int, 3> dims{0, 0, 0};
    std::vector<std::array<RatVec, 3>> triples;

    int rank_bound() const { return static_cast<int>(triples.size()); }
};

SparseTensor3 assemble(const Rank1Decomposition& d);

// invertible linear maps acting per direction
struct GroupElementTriple {
    std::array<RatMatrix, 3> g;

    void require_invertible() const;   // throws std::invalid_argument
};

GroupElementTriple identity_group_element(const std::array<int, 3>& dims);
GroupElementTriple diagonal_group_element(const std::array<RatVec, 3>& alpha);

// entrywise action (g1, g2, g3) on each rank-one factor
Rank1Decomposition act(const GroupElementTriple& g, const Rank1Decomposition& w);
SparseTensor3 act(const GroupElementTriple& g, const SparseTensor3& w);

// Matrix multiplication tensor for m x m matrices, flattened to three
// directions of dimension m^2 via (i,j) -> (i-1)*m + j. Comes with its
// standard m^3-term rank-one decomposition.
Rank1Decomposition mamu_tensor(int m);

// Diagonal unit tensor of size n.
Rank1Decomposition unit_tensor(int n);

// r random rank-one triples with nonzero integer-entry vectors, entries
// uniform in [lo, hi]; deterministic given the seed.
Rank1Decomposition random_low_rank(const std::array<int, 3>& dims, int r,
                                   long lo, long hi, std::uint64_t seed);

// exact rank of the direction-k flattening (k in {0,1,2})
int flattening_rank(const SparseTensor3& t, int k);

} // namespace obstr
