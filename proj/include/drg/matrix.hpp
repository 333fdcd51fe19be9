#pragma once

#include "drg/rational.hpp"

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

namespace drg {

// Dense rational matrix, sized for spectral work on small association
// schemes (dimension <= 32) and for triple-system elimination.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    RatMatrix operator*(const RatMatrix& o) const;
    bool operator==(const RatMatrix& o) const = default;

    // Exact inverse via Gauss-Jordan; throws Error("SingularMatrix") if none.
    RatMatrix inverse() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// The solution set of A x = b in the form x = particular + span(basis).
// Pivots are chosen left to right, so `free_cols` (the non-pivot columns, in
// increasing order) is canonical for a given equation set.  basis[t] is the
// direction that sets free variable t to 1 and every other free variable to
// 0; particular sets all free variables to 0.
struct AffineSolution {
    std::size_t num_vars = 0;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> free_cols;
    std::vector<Rat> particular;
    std::vector<std::vector<Rat>> basis;

    std::size_t dim() const { return free_cols.size(); }

    // Value of variable `var` at the parameter point `params` (one rational
    // per free column, in free_cols order).
    Rat value(std::size_t var, const std::vector<Rat>& params) const;

    // Affine form of variable `var`: constant term and per-parameter
    // coefficients (free_cols order).
    Rat form_constant(std::size_t var) const { return particular[var]; }
    Rat form_coef(std::size_t var, std::size_t t) const { return basis[t][var]; }
};

// Witness that a system is unsolvable: a rational combination of the listed
// equations (by row index, with the given coefficients) reduces to 0 = 1.
struct InfeasibleCombination {
    std::vector<std::size_t> rows;
    std::vector<Rat> coefficients;
};

using SolveResult = std::variant<AffineSolution, InfeasibleCombination>;

// Reduced row echelon form of [A | b] with full certificate tracking.
SolveResult rref_parametric(const RatMatrix& A, const std::vector<Rat>& b);

// Monic characteristic polynomial of a square matrix; coefficient of x^i is
// at index i, so the vector has size n+1 and back() == 1.
std::vector<Rat> char_poly(const RatMatrix& M);

// Complete root list (value, multiplicity), sorted by descending value, when
// the characteristic polynomial splits over Q; throws IrrationalSpectrum
// otherwise.  Roots of the integer-scaled polynomial are found by searching
// integer divisors of the constant coefficient inside the Gershgorin bound.
std::vector<std::pair<Rat, int>> char_poly_roots(const RatMatrix& M);

}  // namespace drg
