#ifndef CREPANT_INTMAT_HPP
#define CREPANT_INTMAT_HPP

#include "crepant/rational.hpp"

#include <vector>

namespace crepant {

/** Dense matrix of arbitrary-precision integers, row major. */
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    IntMat operator*(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    Int det() const;  // fraction-free Gaussian elimination (Bareiss)

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

struct HnfResult {
    IntMat h;  // row-style Hermite normal form
    IntMat u;  // unimodular, u * m == h
};

/**
 * Row-style Hermite normal form: U m = H with det(U) = +-1, H upper
 * triangular with positive pivots and entries above each pivot reduced.
 * Throws std::invalid_argument when m is rank-deficient for the square /
 * full-column-rank contract.
 */
HnfResult hermite_normal_form(const IntMat& m);

/** Diagonal of the Smith normal form (nonnegative, d_i | d_{i+1}). */
std::vector<Int> smith_diagonal(IntMat m);

}  // namespace crepant

#endif
