#pragma once
#include "obstr/design.hpp"
#include "obstr/rational.hpp"

namespace obstr {

// n^2 points (i, j, (i-1)n + j) in an n x n x n^2 box: rows and columns
// are full slices, the third direction is all singletons.
ObstructionDesign latin_design(int n);

// total number of Latin squares of order n (backtracking; n <= 6)
Int count_latin_squares(int n);

enum class AlonTarsiMethod { Eval, Enumerate, Both };

// Signed count: even Latin squares minus odd ones, the sign of a square
// being the product of all row and column permutation signs. Eval sums
// the design evaluation at the diagonal tensor sum_i |i,i,1>; Enumerate
// walks the squares directly; Both runs the two and insists they agree.
Int alon_tarsi_difference(int n, AlonTarsiMethod method = AlonTarsiMethod::Both);

} // namespace obstr
