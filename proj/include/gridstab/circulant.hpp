#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace gridstab {

// Stability value of the circulant grid C(n, k) (odd n, hops 1..k, uniform
// unit negative susceptance): alpha2 = (2k+1) - sin((2k+1) pi / n) / sin(pi / n).
// Errors: OddRequired for even n, InvalidArgument for n < 3, HopOutOfRange
// unless 1 <= k <= (n-1)/2.
double alpha2_closed_form(std::size_t n, std::size_t k);

struct CirculantPoint {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t degree = 0; // 2k
  double alpha2_closed = 0.0;
  double alpha2_numeric = 0.0; // full pipeline on the generated grid
  double abs_err = 0.0;
};

// Every (n, k) with odd 3 <= n <= n_max, 1 <= k <= (n-1)/2, ordered by n then
// k.  InvalidArgument when n_max < 3.
std::vector<CirculantPoint> circulant_sweep(std::size_t n_max);

std::string sweep_to_csv(const std::vector<CirculantPoint>& points);
std::vector<CirculantPoint> parse_sweep_csv(const std::string& text);

struct FitPoint {
  double n = 0.0;
  double degree = 0.0;
  double alpha2 = 0.0;
};

// Least-squares quadratic surface alpha2 ~ c0 + c1 n + c2 d + c3 n^2 +
// c4 n d + c5 d^2 via the normal equations.  Needs at least 7 points
// (InvalidArgument); throws RankDeficient when the design collapses.
struct QuadraticSurface {
  std::array<double, 6> coefficients{}; // ordered as above
  double r2 = 0.0;
};

QuadraticSurface quadratic_fit(const std::vector<FitPoint>& points);

double surface_eval(const QuadraticSurface& s, double n, double degree);
std::string fit_to_json(const QuadraticSurface& s);

} // namespace gridstab
