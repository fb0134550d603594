#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "gridstab/error.hpp"

namespace gridstab {

using Cx = std::complex<double>;

// Dense row-major complex matrix.  Small sizes only (grids of a few dozen
// nodes); no attempt at blocking or expression templates.
class CxMatrix {
public:
  CxMatrix() = default;
  CxMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CxMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Cx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Cx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  // Largest entry magnitude; 0 for an empty matrix.
  double max_abs() const noexcept;

  // Extract the rectangular block [r0, r0+nr) x [c0, c0+nc).
  CxMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                 std::size_t nc) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cx> data_;
};

CxMatrix operator+(const CxMatrix& a, const CxMatrix& b);
CxMatrix operator-(const CxMatrix& a, const CxMatrix& b);

// Plain O(n^3) product.  Throws DimensionMismatch when inner sizes differ.
CxMatrix matmul(const CxMatrix& a, const CxMatrix& b);

// Solve m * x = rhs by LU with partial pivoting.  rhs may have any number of
// columns.  Throws DimensionMismatch on shape errors and SingularMatrix when
// the best available pivot falls below 1e-12 relative to the largest entry
// magnitude of m (the offending elimination step is named in the message).
CxMatrix cx_lu_solve(const CxMatrix& m, const CxMatrix& rhs);

// Real symmetric matrix.  Constructed from a full row-major buffer, which is
// validated: entries finite, symmetric to 1e-12 relative to the largest
// magnitude (NotSymmetric otherwise).
class RealSymMatrix {
public:
  RealSymMatrix() = default;
  explicit RealSymMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  RealSymMatrix(std::size_t n, std::vector<double> entries);

  std::size_t size() const noexcept { return n_; }

  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * n_ + c];
  }

  // Symmetric write: sets (r,c) and (c,r).
  void set(std::size_t r, std::size_t c, double v) {
    data_[r * n_ + c] = v;
    data_[c * n_ + r] = v;
  }

  double max_abs() const noexcept;
  double norm_inf() const noexcept; // max absolute row sum

private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct Spectrum {
  std::vector<double> eigenvalues; // ascending
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;   // ascending
  std::vector<double> eigenvectors;  // row-major n x n; column j pairs with eigenvalue j
  std::size_t n = 0;
};

// Cyclic Jacobi rotations.  Deterministic; converges to machine precision for
// the matrix sizes used here.  Throws NoConvergence if the off-diagonal mass
// has not vanished after the sweep cap (64 sweeps).
Spectrum eig_symmetric(const RealSymMatrix& m);
EigenDecomposition eig_symmetric_full(const RealSymMatrix& m);

} // namespace gridstab
