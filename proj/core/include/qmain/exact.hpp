#pragma once

#include <gmpxx.h>

#include <vector>

#include "qmain/graph.hpp"

namespace qmain {

using BigInt = mpz_class;

/// Dense matrix over arbitrary-precision integers. Entries of Q^k j grow
/// like (2*maxdeg)^k, so fixed-width integers are not an option here.
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 1 || cols < 1) throw InvalidParameter("matrix dimensions must be >= 1");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) { return e_[index(i, j)]; }
    const BigInt& at(int i, int j) const { return e_[index(i, j)]; }

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw IndexError("matrix index out of range");
        return static_cast<std::size_t>(i) * cols_ + j;
    }
    int rows_, cols_;
    std::vector<BigInt> e_;
};

/// n x n matrix with columns j, Qj, Q^2 j, ..., Q^{n-1} j computed exactly.
ExactMatrix walk_matrix(const Graph& g);

/// Rank over the rationals via fraction-free (Bareiss) elimination.
int integer_rank(const ExactMatrix& m);

/// Number of main signless Laplacian eigenvalues = rank of the walk matrix.
/// Always >= 1 for connected graphs.
int main_count_exact(const Graph& g);

} // namespace qmain
