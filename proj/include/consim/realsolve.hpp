#pragma once

#include "consim/cmatrix.hpp"

#include <cstddef>
#include <vector>

namespace consim {

/*
 * Linear systems in one unknown complex matrix S where the conjugate of S may
 * appear, e.g. conj(S)J = JS or MS = conj(S)M'. Such constraints are linear
 * over the reals but not over the complexes, so the solver works with the
 * real and imaginary parts of the entries of S.
 *
 * Realification convention (fixed so oracle bases are reproducible):
 * the unknown entry S[u][v] = x + iy contributes the two real unknowns
 * (x, y) at indices 2*(u*cols + v) and 2*(u*cols + v) + 1, and every complex
 * equation splits into its real part followed by its imaginary part.
 */

// One summand  left * S * right  (or  left * conj(S) * right).
struct SemilinearTerm {
    CMatrix left;
    CMatrix right;
    bool conj_unknown = false;
};

// Sum of terms = rhs, as matrices.
struct MatrixEquation {
    std::vector<SemilinearTerm> terms;
    CMatrix rhs;
};

class SemilinearSystem {
public:
    SemilinearSystem(std::size_t unknown_rows, std::size_t unknown_cols)
        : rows_(unknown_rows), cols_(unknown_cols) {}

    std::size_t unknown_rows() const { return rows_; }
    std::size_t unknown_cols() const { return cols_; }
    const std::vector<MatrixEquation>& equations() const { return equations_; }

    // Validates that every term maps the unknown shape to the rhs shape.
    void add_equation(MatrixEquation eq);

    // Homogeneous convenience: sum of terms = 0.
    void add_homogeneous(std::vector<SemilinearTerm> terms);

private:
    std::size_t rows_, cols_;
    std::vector<MatrixEquation> equations_;
};

struct RealSolveResult {
    bool consistent = true;
    CMatrix particular;          // a solution, when consistent
    std::vector<CMatrix> basis;  // real basis of the homogeneous solution space

    std::size_t real_dim() const { return basis.size(); }
};

// Exact sparse elimination over the rationals. The systems this library
// produces have a handful of nonzeros per row, so elimination with
// fewest-nonzeros-first pivoting stays near linear.
RealSolveResult solve_real_linear(const SemilinearSystem& sys);

// Substitutes S into every equation; exact check, used to validate solver output.
bool satisfies(const SemilinearSystem& sys, const CMatrix& s);

}  // namespace consim
