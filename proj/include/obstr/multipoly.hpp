#pragma once
#include <map>
#include <string>
#include <vector>

#include "obstr/rational.hpp"

namespace obstr {

// Exponent vector; length = arity of the ambient polynomial ring.
using Monomial = std::vector<int>;

// Sparse polynomial over Z in a fixed number of variables. Terms are kept
// in a map ordered lexicographically by exponent vector, with no zero
// coefficients stored, so equality is structural and iteration is
// deterministic.
class MultiPoly {
public:
    MultiPoly() : arity_(0) {}
    explicit MultiPoly(int arity) : arity_(arity) {}

    static MultiPoly constant(int arity, Int c);
    static MultiPoly variable(int arity, int index, int power = 1);
    static MultiPoly monomial(int arity, Monomial m, Int c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int term_count() const { return static_cast<int>(terms_.size()); }
    int total_degree() const;   // -1 for the zero polynomial

    const std::map<Monomial, Int>& terms() const { return terms_; }
    Int coefficient(const Monomial& m) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Int& c);
    bool operator==(const MultiPoly& o) const = default;

    // exact division; throws std::domain_error if the division leaves a
    // remainder (callers use it only where exactness is guaranteed)
    MultiPoly divide_exact(const MultiPoly& divisor) const;

    // variable names default to x0, x1, ...
    std::string str(const std::vector<std::string>& names = {}) const;

    void add_term(const Monomial& m, const Int& c);

private:
    int arity_;
    std::map<Monomial, Int> terms_;

    // graded-lex leading term used by divide_exact
    std::map<Monomial, Int>::const_iterator leading() const;
};

Int poly_coefficient(const MultiPoly& p, const Monomial& m);

struct PolyMatrix {
    int rows = 0, cols = 0, arity = 0;
    std::vector<MultiPoly> a;   // row-major

    PolyMatrix() = default;
    PolyMatrix(int r, int c, int ar)
        : rows(r), cols(c), arity(ar), a(static_cast<size_t>(r) * c, MultiPoly(ar)) {}

    MultiPoly& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const MultiPoly& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Exact determinant of a square polynomial matrix. Strategy: peel rows and
// columns that hold a single nonzero entry (near-permutation matrices
// collapse entirely), then fraction-free elimination when every entry is
// constant, cofactor expansion along the sparsest row otherwise.
MultiPoly poly_det(const PolyMatrix& m);

} // namespace obstr
