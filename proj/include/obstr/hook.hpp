#pragma once
#include <array>
#include <utility>
#include <vector>

#include "obstr/design.hpp"
#include "obstr/evaluate.hpp"
#include "obstr/multipoly.hpp"

namespace obstr {

// Union of the three coordinate axes in a (kappa+1)-cube: the center
// (1,1,1) plus three arms of length kappa. 3*kappa + 1 points.
ObstructionDesign hook_design(int kappa);

using Cell = std::pair<int, int>;   // 1-based matrix position

// Structured column substitution for the m x m matrix multiplication
// tensor, m odd. Direction k uses variables X_1^(k)..X_m^(k) (flat index
// (k-1)*m + i - 1). Column (i,j): the center (a,a) maps to X_a e_1,
// anti-diagonal cells to e_phi(i,j) + X_i e_1, all others to e_phi(i,j).
struct MatrixTriple {
    int m = 0;
    int arity = 0;                    // 3m
    std::array<PolyMatrix, 3> a;      // each m^2 x m^2
    std::vector<int> phi;             // cell (i-1)*m+(j-1) -> row in 2..m^2; center -> 1
};

// default phi: row-major order skipping the center
MatrixTriple matrix_triple(int m);
MatrixTriple matrix_triple(int m, const std::vector<int>& phi);

// quarter-turn tau(i,j) = (j, m+1-i) and complement within the punctured
// grid (center removed)
Cell tau_cell(Cell c, int m);
std::vector<Cell> tau_set(const std::vector<Cell>& s, int m);
std::vector<Cell> complement_set(const std::vector<Cell>& s, int m);

// products of X_a^(k) and X_i^(k)^{|i - (m+1-i)|} over all directions
Monomial target_monomial(int m);

// defining conditions: subset of the punctured grid, quarter-turn image
// equals the complement, row i holds |2i-m-1| cells
bool is_valid_set(const std::vector<Cell>& s, int m);

// the 2^((m-1)/2) valid sets, ordered by their diagonal/anti-diagonal
// choice mask; each is sorted
std::vector<std::vector<Cell>> enumerate_valid_sets(int m);

// Per-point labels (index triples <i,j,l>) of the hook design for
// kappa = (m^2-1)/2 induced by a valid set. The center gets <a,a,a>; the
// three arms get the labels forced by the single-slice factors.
std::vector<std::array<int, 3>> canonical_labeling(const std::vector<Cell>& s, int m);

struct HookCoefficient {
    int m = 0;
    int kappa = 0;
    Monomial monomial;            // target
    std::vector<Int> per_set;     // coefficient from each valid set's labeling
    Int multiplicity;             // (kappa!)^3 relabelings within classes
    Int total;                    // multiplicity * sum(per_set)
};

// Per-valid-set coefficients of the target monomial, in enumeration
// order, with no agreement requirement. 3 <= m <= 7, m odd.
std::vector<Int> hook_per_set_contributions(int m);
std::vector<Int> hook_per_set_contributions(int m, const std::vector<int>& phi);

// Coefficient of the target monomial in the polynomial obtained by
// substituting the structured columns into the hook evaluation. Raises
// CancellationDetected if the per-set contributions fail to agree, and
// WitnessVanished if the total is zero. 3 <= m <= 7, m odd.
HookCoefficient hook_coefficient(int m);
HookCoefficient hook_coefficient(int m, const std::vector<int>& phi);

struct MatmulBound {
    int m = 0;
    Int bound;                    // (3 m^2 - 1) / 2
    HookCoefficient witness;
    int chromatic_index = 0;
};

MatmulBound matmul_bound(int m);

} // namespace obstr
