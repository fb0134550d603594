#include "gridstab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gridstab {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::AlreadyAdjacent: return "AlreadyAdjacent";
    case ErrorCode::InvalidCode: return "InvalidCode";
    case ErrorCode::SingularLoadBlock: return "SingularLoadBlock";
    case ErrorCode::SingularPivot: return "SingularPivot";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::NonSymmetricResult: return "NonSymmetricResult";
    case ErrorCode::MultipleZeroModes: return "MultipleZeroModes";
    case ErrorCode::NoZeroMode: return "NoZeroMode";
    case ErrorCode::ZeroAdmittance: return "ZeroAdmittance";
    case ErrorCode::OddRequired: return "OddRequired";
    case ErrorCode::HopOutOfRange: return "HopOutOfRange";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NTooLarge: return "NTooLarge";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

CxMatrix CxMatrix::identity(std::size_t n) {
  CxMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double CxMatrix::max_abs() const noexcept {
  double best = 0.0;
  for (const Cx& v : data_) best = std::max(best, std::abs(v));
  return best;
}

CxMatrix CxMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                         std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    fail(ErrorCode::DimensionMismatch, "block extends past matrix bounds");
  CxMatrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

static void require_same_shape(const CxMatrix& a, const CxMatrix& b,
                               const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::DimensionMismatch,
         std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
             "x" + std::to_string(b.cols()));
}

CxMatrix operator+(const CxMatrix& a, const CxMatrix& b) {
  require_same_shape(a, b, "matrix add");
  CxMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

CxMatrix operator-(const CxMatrix& a, const CxMatrix& b) {
  require_same_shape(a, b, "matrix subtract");
  CxMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

CxMatrix matmul(const CxMatrix& a, const CxMatrix& b) {
  if (a.cols() != b.rows())
    fail(ErrorCode::DimensionMismatch,
         "matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
             " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  CxMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Cx av = a(r, k);
      if (av == Cx{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += av * b(k, c);
    }
  }
  return out;
}

CxMatrix cx_lu_solve(const CxMatrix& m, const CxMatrix& rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n)
    fail(ErrorCode::DimensionMismatch, "lu solve: matrix must be square");
  if (rhs.rows() != n)
    fail(ErrorCode::DimensionMismatch,
         "lu solve: rhs has " + std::to_string(rhs.rows()) + " rows, expected " +
             std::to_string(n));
  if (n == 0) return CxMatrix(0, rhs.cols());

  const double scale = m.max_abs();
  const double pivot_tol = 1e-12 * scale;

  CxMatrix lu = m;
  CxMatrix x = rhs;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = k;
    double best_mag = std::abs(lu(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      const double mag = std::abs(lu(r, k));
      if (mag > best_mag) {
        best_mag = mag;
        best = r;
      }
    }
    if (!(best_mag > pivot_tol))
      fail(ErrorCode::SingularMatrix,
           "lu solve: pivot " + std::to_string(k) + " has magnitude " +
               std::to_string(best_mag) + " (tolerance " +
               std::to_string(pivot_tol) + ")");
    if (best != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(best, c));
      for (std::size_t c = 0; c < x.cols(); ++c) std::swap(x(k, c), x(best, c));
    }
    const Cx pivot = lu(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const Cx f = lu(r, k) / pivot;
      if (f == Cx{}) continue;
      lu(r, k) = f;
      for (std::size_t c = k + 1; c < n; ++c) lu(r, c) -= f * lu(k, c);
      for (std::size_t c = 0; c < x.cols(); ++c) x(r, c) -= f * x(k, c);
    }
  }

  // back substitution
  for (std::size_t ri = n; ri-- > 0;) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      Cx acc = x(ri, c);
      for (std::size_t k = ri + 1; k < n; ++k) acc -= lu(ri, k) * x(k, c);
      x(ri, c) = acc / lu(ri, ri);
    }
  }
  return x;
}

RealSymMatrix::RealSymMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), data_(std::move(entries)) {
  if (data_.size() != n * n)
    fail(ErrorCode::DimensionMismatch,
         "symmetric matrix: buffer size " + std::to_string(data_.size()) +
             " != " + std::to_string(n * n));
  double scale = 0.0;
  for (double v : data_) {
    if (!std::isfinite(v))
      fail(ErrorCode::InvalidArgument, "symmetric matrix: non-finite entry");
    scale = std::max(scale, std::abs(v));
  }
  const double tol = 1e-12 * std::max(scale, 1.0);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = r + 1; c < n_; ++c)
      if (std::abs(data_[r * n_ + c] - data_[c * n_ + r]) > tol)
        fail(ErrorCode::NotSymmetric,
             "symmetric matrix: entries (" + std::to_string(r) + "," +
                 std::to_string(c) + ") and transpose differ beyond tolerance");
}

double RealSymMatrix::max_abs() const noexcept {
  double best = 0.0;
  for (double v : data_) best = std::max(best, std::abs(v));
  return best;
}

double RealSymMatrix::norm_inf() const noexcept {
  double best = 0.0;
  for (std::size_t r = 0; r < n_; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < n_; ++c) s += std::abs(data_[r * n_ + c]);
    best = std::max(best, s);
  }
  return best;
}

namespace {

// One pass of cyclic Jacobi over all (p, q) pairs. Returns the remaining
// off-diagonal Frobenius mass squared.
double jacobi_sweep(std::vector<double>& a, std::vector<double>* q,
                    std::size_t n) {
  auto at = [&](std::size_t r, std::size_t c) -> double& {
    return a[r * n + c];
  };
  for (std::size_t p = 0; p + 1 < n; ++p) {
    for (std::size_t r = p + 1; r < n; ++r) {
      const double apq = at(p, r);
      if (apq == 0.0) continue;
      const double app = at(p, p);
      const double arr = at(r, r);
      const double theta = (arr - app) / (2.0 * apq);
      // Stable tangent-of-rotation formula.
      double t;
      if (std::abs(theta) > 1e154) {
        t = 1.0 / (2.0 * theta);
      } else {
        t = std::copysign(1.0, theta) /
            (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      }
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;
      const double tau = s / (1.0 + c);

      at(p, p) = app - t * apq;
      at(r, r) = arr + t * apq;
      at(p, r) = 0.0;
      at(r, p) = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == r) continue;
        const double akp = at(k, p);
        const double akr = at(k, r);
        at(k, p) = akp - s * (akr + tau * akp);
        at(p, k) = at(k, p);
        at(k, r) = akr + s * (akp - tau * akr);
        at(r, k) = at(k, r);
      }
      if (q) {
        for (std::size_t k = 0; k < n; ++k) {
          const double qkp = (*q)[k * n + p];
          const double qkr = (*q)[k * n + r];
          (*q)[k * n + p] = qkp - s * (qkr + tau * qkp);
          (*q)[k * n + r] = qkr + s * (qkp - tau * qkr);
        }
      }
    }
  }
  double off = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) off += at(r, c) * at(r, c);
  return off;
}

EigenDecomposition jacobi_eig(const RealSymMatrix& m, bool want_vectors) {
  const std::size_t n = m.size();
  std::vector<double> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c);

  std::vector<double> q;
  if (want_vectors) {
    q.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) q[i * n + i] = 1.0;
  }

  double norm = 0.0;
  for (double v : a) norm += v * v;
  const double stop = 1e-28 * std::max(norm, 1e-300);

  constexpr int kMaxSweeps = 64;
  bool converged = (n < 2);
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    const double off = jacobi_sweep(a, want_vectors ? &q : nullptr, n);
    if (off <= stop) converged = true;
  }
  if (!converged)
    fail(ErrorCode::NoConvergence,
         "eigensolver: off-diagonal mass still above tolerance after 64 sweeps");

  EigenDecomposition out;
  out.n = n;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = a[i * n + i];

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return out.eigenvalues[x] < out.eigenvalues[y];
  });

  std::vector<double> sorted_vals(n);
  for (std::size_t i = 0; i < n; ++i) sorted_vals[i] = out.eigenvalues[order[i]];
  out.eigenvalues = std::move(sorted_vals);

  if (want_vectors) {
    out.eigenvectors.assign(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r)
        out.eigenvectors[r * n + j] = q[r * n + order[j]];
  }
  return out;
}

} // namespace

Spectrum eig_symmetric(const RealSymMatrix& m) {
  return Spectrum{jacobi_eig(m, false).eigenvalues};
}

EigenDecomposition eig_symmetric_full(const RealSymMatrix& m) {
  return jacobi_eig(m, true);
}

} // namespace gridstab
