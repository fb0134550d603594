#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "gridstab/numerics.hpp"
#include "support.hpp"

using namespace gridstab;
using testsupport::thrown_code;

namespace {

RealSymMatrix ring_laplacian(std::size_t n) {
  RealSymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, 2.0);
    m.set(i, (i + 1) % n, -1.0);
  }
  return m;
}

} // namespace

TEST_CASE("identity and block extraction") {
  CxMatrix id = CxMatrix::identity(3);
  CHECK(id(0, 0) == Cx{1.0, 0.0});
  CHECK(id(0, 1) == Cx{0.0, 0.0});
  CHECK(id.max_abs() == doctest::Approx(1.0));

  CxMatrix m(2, 3);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      m(r, c) = Cx(static_cast<double>(10 * r + c), 0.0);
  CxMatrix b = m.block(0, 1, 2, 2);
  CHECK(b.rows() == 2);
  CHECK(b.cols() == 2);
  CHECK(b(0, 0) == Cx{1.0, 0.0});
  CHECK(b(1, 1) == Cx{12.0, 0.0});
}

TEST_CASE("matmul rejects mismatched shapes") {
  CxMatrix a(2, 3), b(2, 2);
  CHECK(thrown_code([&] { matmul(a, b); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("complex LU solves a small system") {
  // [[j, 1], [1, j]] x = [1+j, 1+j]  =>  x = [1, 1]
  CxMatrix m(2, 2);
  m(0, 0) = Cx{0.0, 1.0};
  m(0, 1) = Cx{1.0, 0.0};
  m(1, 0) = Cx{1.0, 0.0};
  m(1, 1) = Cx{0.0, 1.0};
  CxMatrix rhs(2, 1);
  rhs(0, 0) = Cx{1.0, 1.0};
  rhs(1, 0) = Cx{1.0, 1.0};
  CxMatrix x = cx_lu_solve(m, rhs);
  CHECK(std::abs(x(0, 0) - Cx{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(x(1, 0) - Cx{1.0, 0.0}) < 1e-12);
}

TEST_CASE("complex LU solves against a random-ish well-conditioned matrix") {
  const std::size_t n = 5;
  CxMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = Cx(std::sin(1.0 + 3.0 * double(r) + double(c)),
                   std::cos(2.0 + double(r) - 2.0 * double(c)));
  for (std::size_t r = 0; r < n; ++r) m(r, r) += Cx{6.0, 0.0};
  // Build rhs = m * ones, solve, expect ones back.
  CxMatrix ones(n, 1);
  for (std::size_t r = 0; r < n; ++r) ones(r, 0) = Cx{1.0, 0.0};
  CxMatrix rhs = matmul(m, ones);
  CxMatrix x = cx_lu_solve(m, rhs);
  for (std::size_t r = 0; r < n; ++r)
    CHECK(std::abs(x(r, 0) - Cx{1.0, 0.0}) < 1e-12);
}

TEST_CASE("complex LU reports singular matrices") {
  CxMatrix m(2, 2);
  m(0, 0) = Cx{1.0, 0.0};
  m(0, 1) = Cx{2.0, 0.0};
  m(1, 0) = Cx{2.0, 0.0};
  m(1, 1) = Cx{4.0, 0.0};
  CxMatrix rhs(2, 1);
  rhs(0, 0) = Cx{1.0, 0.0};
  rhs(1, 0) = Cx{1.0, 0.0};
  CHECK(thrown_code([&] { cx_lu_solve(m, rhs); }) ==
        ErrorCode::SingularMatrix);
}

TEST_CASE("symmetric matrix construction validates input") {
  CHECK(thrown_code([] {
          RealSymMatrix(2, {0.0, 1.0, 2.0, 3.0});
        }) == ErrorCode::NotSymmetric);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK(thrown_code([&] {
          RealSymMatrix(2, {0.0, nan, nan, 0.0});
        }) == ErrorCode::InvalidArgument);
  CHECK(thrown_code([] {
          RealSymMatrix(2, {1.0, 2.0, 3.0});
        }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("eigenvalues of a 2x2 rank-one coupling") {
  RealSymMatrix m(2, {1.5, -1.5, -1.5, 1.5});
  Spectrum s = eig_symmetric(m);
  REQUIRE(s.eigenvalues.size() == 2);
  CHECK(std::abs(s.eigenvalues[0]) < 1e-12);
  CHECK(std::abs(s.eigenvalues[1] - 3.0) < 1e-12);
}

TEST_CASE("eigenvalues of the 3x3 second-difference matrix") {
  RealSymMatrix m(3, {2.0, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 2.0});
  Spectrum s = eig_symmetric(m);
  const double r2 = std::sqrt(2.0);
  REQUIRE(s.eigenvalues.size() == 3);
  CHECK(std::abs(s.eigenvalues[0] - (2.0 - r2)) < 1e-12);
  CHECK(std::abs(s.eigenvalues[1] - 2.0) < 1e-12);
  CHECK(std::abs(s.eigenvalues[2] - (2.0 + r2)) < 1e-12);
}

TEST_CASE("5-cycle Laplacian spectrum has the known double eigenvalues") {
  Spectrum s = eig_symmetric(ring_laplacian(5));
  REQUIRE(s.eigenvalues.size() == 5);
  const double lam2 = 1.3819660112501051; // 2 - 2 cos(2 pi / 5)
  const double lam4 = 3.6180339887498949; // 2 - 2 cos(4 pi / 5)
  CHECK(std::abs(s.eigenvalues[0]) < 1e-12);
  CHECK(std::abs(s.eigenvalues[1] - lam2) < 1e-12);
  CHECK(std::abs(s.eigenvalues[2] - lam2) < 1e-12);
  CHECK(std::abs(s.eigenvalues[3] - lam4) < 1e-12);
  CHECK(std::abs(s.eigenvalues[4] - lam4) < 1e-12);
}

TEST_CASE("full decomposition returns orthonormal eigenvectors with small residual") {
  RealSymMatrix m = ring_laplacian(7);
  EigenDecomposition d = eig_symmetric_full(m);
  REQUIRE(d.n == 7);
  REQUIRE(d.eigenvalues.size() == 7);
  // residual ||A v - lambda v||_inf per column
  for (std::size_t j = 0; j < d.n; ++j) {
    for (std::size_t i = 0; i < d.n; ++i) {
      double av = 0.0;
      for (std::size_t k = 0; k < d.n; ++k)
        av += m(i, k) * d.eigenvectors[k * d.n + j];
      const double r = av - d.eigenvalues[j] * d.eigenvectors[i * d.n + j];
      CHECK(std::abs(r) < 1e-9);
    }
  }
  // orthonormality
  for (std::size_t a = 0; a < d.n; ++a)
    for (std::size_t b = 0; b < d.n; ++b) {
      double dot = 0.0;
      for (std::size_t k = 0; k < d.n; ++k)
        dot += d.eigenvectors[k * d.n + a] * d.eigenvectors[k * d.n + b];
      CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-9);
    }
  // ascending order
  for (std::size_t j = 1; j < d.n; ++j)
    CHECK(d.eigenvalues[j] >= d.eigenvalues[j - 1]);
}

TEST_CASE("norms of a symmetric matrix") {
  RealSymMatrix m(2, {1.0, -3.0, -3.0, 2.0});
  CHECK(m.max_abs() == doctest::Approx(3.0));
  CHECK(m.norm_inf() == doctest::Approx(5.0));
}
