#pragma once
#include "obstr/partition.hpp"
#include "obstr/rational.hpp"

namespace obstr {

// irreducible symmetric group character value chi_lambda at cycle type mu
// (border-strip recursion with memoization); |lambda| = |mu| required
Int sym_character(const Partition& lambda, const Partition& mu);

// number of permutations with cycle type mu
Int conjugacy_class_size(const Partition& mu);

// multiplicity of the trivial representation in the tensor product of the
// three irreducibles; evaluated as the exact character inner product
Int kronecker_coefficient(const PartitionTriple& lambda);

} // namespace obstr
