#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sandpile/bigint.hpp"

namespace sandpile {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
  public:
    IntMatrix(int rows, int cols);
    IntMatrix(int rows, int cols, std::vector<Int> entries);

    static IntMatrix identity(int n);
    static IntMatrix diagonal(const std::vector<Int>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& operator()(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    // this matrix with extra columns appended on the right
    IntMatrix augmented(const std::vector<std::vector<Int>>& extra_cols) const;

    bool operator==(const IntMatrix&) const = default;

  private:
    int rows_, cols_;
    std::vector<Int> e_;
};

// Thrown by cokernel() when the matrix is singular; carries the rank
// deficiency (the free rank of the would-be quotient).
class SingularMatrixError : public std::domain_error {
  public:
    explicit SingularMatrixError(int free_rank);
    int free_rank() const { return free_rank_; }

  private:
    int free_rank_;
};

// Diagonal of the Smith normal form: d_1 | d_2 | ... | d_k, all >= 0,
// zeros (if any) at the end, length min(rows, cols). Obtained by unimodular
// row/column operations; pivot selection is the smallest nonzero absolute
// value in the remaining submatrix, ties broken by row-major position, so
// the run is deterministic.
std::vector<Int> smith_normal_form(IntMatrix m);

// Exact determinant via Bareiss fraction-free elimination.
Int determinant(IntMatrix m);

// Finite abelian group in invariant-factor form: d_1 | d_2 | ... | d_k,
// every factor >= 2. The trivial group is the empty factor list.
struct AbelianGroup {
    std::vector<Int> invariant_factors;

    static AbelianGroup trivial() { return {}; }
    // Normalizes an arbitrary list of cyclic-factor moduli (each >= 1)
    // into the divisibility chain via pairwise gcd/lcm replacement.
    static AbelianGroup from_factors(std::vector<Int> factors);

    Int order() const;
    int num_generators() const { return static_cast<int>(invariant_factors.size()); }
    std::string to_string() const;  // "Z_2^3 x Z_24"; "trivial" for the empty list

    bool operator==(const AbelianGroup&) const = default;
};

// Cokernel of a square integer matrix as a finite abelian group.
// Throws SingularMatrixError if the determinant vanishes.
AbelianGroup cokernel(const IntMatrix& m);

// True iff the columns of m together with extra_cols generate all of Z^n,
// i.e. the Smith form of the augmented n x (n+k) matrix is all ones.
bool is_full_image(const IntMatrix& m, const std::vector<std::vector<Int>>& extra_cols);

// True iff col lies in the lattice spanned by the columns of the square
// nonsingular matrix m (augmented-Smith-form membership test).
bool image_contains(const IntMatrix& m, const std::vector<Int>& col);

}  // namespace sandpile
