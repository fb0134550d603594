#include "gridstab/kron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace gridstab {

static void require_square_with_generators(const AdmittanceMatrix& y0) {
  if (y0.matrix.rows() != y0.matrix.cols())
    fail(ErrorCode::DimensionMismatch, "reduce: matrix must be square");
  if (y0.n_generators == 0 || y0.n_generators > y0.matrix.rows())
    fail(ErrorCode::InvalidArgument, "reduce: invalid generator count");
}

ReducedAdmittance schur_reduce(const AdmittanceMatrix& y0) {
  require_square_with_generators(y0);
  const std::size_t n = y0.n_generators;
  const std::size_t l = y0.matrix.rows() - n;
  if (l == 0) return ReducedAdmittance{y0.matrix};

  const CxMatrix a = y0.matrix.block(0, 0, n, n);
  const CxMatrix b = y0.matrix.block(0, n, n, l);
  const CxMatrix c = y0.matrix.block(n, 0, l, n);
  const CxMatrix d = y0.matrix.block(n, n, l, l);
  try {
    return ReducedAdmittance{a - matmul(b, cx_lu_solve(d, c))};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularMatrix)
      fail(ErrorCode::SingularLoadBlock,
           std::string("reduce: load block not invertible (") + e.what() + ")");
    throw;
  }
}

ReducedAdmittance iterative_reduce(
    const AdmittanceMatrix& y0,
    std::optional<std::vector<std::size_t>> load_order) {
  require_square_with_generators(y0);
  const std::size_t n = y0.n_generators;
  const std::size_t v = y0.matrix.rows();
  const std::size_t l = v - n;

  std::vector<std::size_t> order;
  if (load_order) {
    order = *load_order;
    if (order.size() != l)
      fail(ErrorCode::InvalidArgument,
           "reduce: elimination order must list every load exactly once");
    std::vector<bool> seen(l, false);
    for (std::size_t x : order) {
      if (x >= l || seen[x])
        fail(ErrorCode::InvalidArgument,
             "reduce: elimination order is not a permutation of the loads");
      seen[x] = true;
    }
  } else {
    order.resize(l);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }

  CxMatrix m = y0.matrix;
  const double pivot_tol = 1e-12 * std::max(1.0, m.max_abs());
  std::vector<bool> alive(v, true);

  for (std::size_t load : order) {
    const std::size_t p = n + load;
    const Cx pivot = m(p, p);
    if (!(std::abs(pivot) > pivot_tol))
      fail(ErrorCode::SingularPivot,
           "reduce: load " + std::to_string(load) +
               " has a near-zero diagonal during elimination");
    for (std::size_t i = 0; i < v; ++i) {
      if (!alive[i] || i == p || m(i, p) == Cx{}) continue;
      const Cx f = m(i, p) / pivot;
      for (std::size_t j = 0; j < v; ++j) {
        if (!alive[j] || j == p) continue;
        m(i, j) -= f * m(p, j);
      }
    }
    alive[p] = false;
  }

  ReducedAdmittance out;
  out.matrix = m.block(0, 0, n, n);
  return out;
}

namespace {

struct CoeffMatrix {
  std::size_t n = 0;
  std::vector<double> k; // row-major real coefficients
  double at(std::size_t r, std::size_t c) const { return k[r * n + c]; }
};

// Divide every entry by the common admittance and insist the result is real.
CoeffMatrix real_coefficients(const CxMatrix& m, Cx common, const char* what) {
  CoeffMatrix out;
  out.n = m.rows();
  out.k.resize(out.n * out.n);
  for (std::size_t r = 0; r < out.n; ++r)
    for (std::size_t c = 0; c < out.n; ++c) {
      const Cx coeff = m(r, c) / common;
      const double mag = std::max(1.0, std::abs(coeff));
      if (std::abs(coeff.imag()) > 1e-9 * mag)
        fail(ErrorCode::NotUniform,
             std::string(what) + ": entry (" + std::to_string(r) + "," +
                 std::to_string(c) +
                 ") is not a real multiple of the common admittance");
      out.k[r * out.n + c] = coeff.real();
    }
  return out;
}

} // namespace

PreservationReport preservation_report(const AdmittanceMatrix& y0,
                                       const ReducedAdmittance& reduced,
                                       Cx common_admittance) {
  if (std::abs(common_admittance) == 0.0)
    fail(ErrorCode::InvalidArgument,
         "preservation: common admittance must be nonzero");
  require_square_with_generators(y0);
  if (reduced.matrix.rows() != y0.n_generators ||
      reduced.matrix.cols() != y0.n_generators)
    fail(ErrorCode::DimensionMismatch,
         "preservation: reduced matrix does not match the generator count");

  // Uniformity of the full matrix: off-diagonal coefficients 0 or -1 (branch
  // absent/present), diagonal coefficients nonnegative.
  const CoeffMatrix full =
      real_coefficients(y0.matrix, common_admittance, "full matrix");
  for (std::size_t r = 0; r < full.n; ++r)
    for (std::size_t c = 0; c < full.n; ++c) {
      const double coeff = full.at(r, c);
      if (r == c) {
        if (coeff < -1e-9)
          fail(ErrorCode::NotUniform,
               "full matrix: diagonal coefficient negative at row " +
                   std::to_string(r));
      } else if (std::abs(coeff) > 1e-9 && std::abs(coeff + 1.0) > 1e-9) {
        fail(ErrorCode::NotUniform,
             "full matrix: off-diagonal coefficient at (" + std::to_string(r) +
                 "," + std::to_string(c) + ") is neither 0 nor -1");
      }
    }

  const CoeffMatrix k =
      real_coefficients(reduced.matrix, common_admittance, "reduced matrix");
  const std::size_t n = k.n;
  double scale = 0.0;
  for (double v : k.k) scale = std::max(scale, std::abs(v));
  const double tol = 1e-9 * std::max(1.0, scale);

  PreservationReport rep;
  rep.symmetric = true;
  for (std::size_t r = 0; r < n && rep.symmetric; ++r)
    for (std::size_t c = r + 1; c < n; ++c)
      if (std::abs(k.at(r, c) - k.at(c, r)) > tol) {
        rep.symmetric = false;
        break;
      }

  rep.offdiag_nonpositive = true;
  for (std::size_t r = 0; r < n && rep.offdiag_nonpositive; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c && k.at(r, c) > tol) {
        rep.offdiag_nonpositive = false;
        break;
      }

  rep.diagonal_positive = true;
  rep.diagonally_dominant = true;
  for (std::size_t r = 0; r < n; ++r) {
    if (!(k.at(r, r) > tol)) rep.diagonal_positive = false;
    double off = 0.0;
    for (std::size_t c = 0; c < n; ++c)
      if (c != r) off += std::abs(k.at(r, c));
    if (std::abs(k.at(r, r)) + tol < off) rep.diagonally_dominant = false;
  }

  // Invertibility via the spectrum of the symmetrized coefficient matrix.
  std::vector<double> sym(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      sym[r * n + c] = 0.5 * (k.at(r, c) + k.at(c, r));
  const Spectrum spec = eig_symmetric(RealSymMatrix(n, std::move(sym)));
  double min_mag = std::numeric_limits<double>::infinity();
  for (double ev : spec.eigenvalues) min_mag = std::min(min_mag, std::abs(ev));
  rep.invertible = min_mag > 1e-9 * std::max(1.0, scale);

  return rep;
}

} // namespace gridstab
