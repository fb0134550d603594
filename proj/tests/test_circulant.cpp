#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "gridstab/circulant.hpp"
#include "support.hpp"

using namespace gridstab;
using testsupport::thrown_code;

TEST_CASE("closed form reproduces frozen values") {
  CHECK(std::abs(alpha2_closed_form(5, 1) - 1.3819660112501051) < 1e-14);
  CHECK(std::abs(alpha2_closed_form(7, 2) - 3.1980622641951615) < 1e-14);
  CHECK(std::abs(alpha2_closed_form(19, 1) - 0.10836551659873073) < 1e-14);
  CHECK(std::abs(alpha2_closed_form(3, 1) - 3.0) < 1e-12);
  // full-degree circulant is the complete graph: value n
  CHECK(std::abs(alpha2_closed_form(7, 3) - 7.0) < 1e-12);
  CHECK(std::abs(alpha2_closed_form(19, 9) - 19.0) < 1e-12);
}

TEST_CASE("closed form validates its domain") {
  CHECK(thrown_code([] { alpha2_closed_form(4, 1); }) ==
        ErrorCode::OddRequired);
  CHECK(thrown_code([] { alpha2_closed_form(1, 1); }) ==
        ErrorCode::InvalidArgument);
  CHECK(thrown_code([] { alpha2_closed_form(7, 0); }) ==
        ErrorCode::HopOutOfRange);
  CHECK(thrown_code([] { alpha2_closed_form(7, 4); }) ==
        ErrorCode::HopOutOfRange);
}

TEST_CASE("sweep covers every odd size and hop count once") {
  std::vector<CirculantPoint> pts = circulant_sweep(19);
  REQUIRE(pts.size() == 45);

  std::size_t idx = 0;
  for (std::size_t n = 3; n <= 19; n += 2)
    for (std::size_t k = 1; k <= (n - 1) / 2; ++k, ++idx) {
      REQUIRE(idx < pts.size());
      CHECK(pts[idx].n == n);
      CHECK(pts[idx].k == k);
      CHECK(pts[idx].degree == 2 * k);
    }

  for (const CirculantPoint& p : pts) {
    CHECK(p.abs_err <= 1e-9);
    CHECK(p.abs_err == std::abs(p.alpha2_closed - p.alpha2_numeric));
  }

  // monotone in k at fixed n, and the densest case equals n
  for (std::size_t n = 3; n <= 19; n += 2) {
    double prev = -1.0;
    double densest = 0.0;
    for (const CirculantPoint& p : pts)
      if (p.n == n) {
        CHECK(p.alpha2_closed > prev);
        prev = p.alpha2_closed;
        if (p.k == (n - 1) / 2) densest = p.alpha2_closed;
      }
    CHECK(std::abs(densest - static_cast<double>(n)) < 1e-9);
  }

  CHECK(circulant_sweep(3).size() == 1);
  CHECK(thrown_code([] { circulant_sweep(2); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("sweep CSV round-trips") {
  std::vector<CirculantPoint> pts = circulant_sweep(9);
  std::string csv = sweep_to_csv(pts);
  CHECK(csv.rfind("n,k,degree,alpha2_closed,alpha2_numeric,abs_err\n", 0) ==
        0);
  std::vector<CirculantPoint> back = parse_sweep_csv(csv);
  REQUIRE(back.size() == pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(back[i].n == pts[i].n);
    CHECK(back[i].k == pts[i].k);
    CHECK(back[i].degree == pts[i].degree);
    CHECK(std::abs(back[i].alpha2_closed - pts[i].alpha2_closed) < 1e-10);
    CHECK(std::abs(back[i].alpha2_numeric - pts[i].alpha2_numeric) < 1e-10);
  }
}

TEST_CASE("sweep CSV parser accepts comments and rejects junk") {
  const std::string ok =
      "# produced elsewhere\n"
      "n,k,degree,alpha2_closed,alpha2_numeric,abs_err\n"
      "\n"
      "5,1,2,1.38196601125,1.38196601125,0\n";
  std::vector<CirculantPoint> pts = parse_sweep_csv(ok);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].n == 5);

  CHECK(thrown_code([] { parse_sweep_csv("not a csv at all"); }) ==
        ErrorCode::ParseError);
  CHECK(thrown_code([] {
          parse_sweep_csv(
              "n,k,degree,alpha2_closed,alpha2_numeric,abs_err\n5,1,2,x,y,z\n");
        }) == ErrorCode::ParseError);
}

TEST_CASE("quadratic fit recovers an exact surface") {
  const double c0 = 0.5, c1 = 0.25, c2 = -0.125, c3 = 0.01, c4 = 0.002,
               c5 = 0.003;
  std::vector<FitPoint> pts;
  for (double n = 3.0; n <= 9.0; n += 2.0)
    for (double d = 2.0; d <= 6.0; d += 2.0)
      pts.push_back({n, d,
                     c0 + c1 * n + c2 * d + c3 * n * n + c4 * n * d +
                         c5 * d * d});
  QuadraticSurface s = quadratic_fit(pts);
  CHECK(std::abs(s.coefficients[0] - c0) < 1e-9);
  CHECK(std::abs(s.coefficients[1] - c1) < 1e-9);
  CHECK(std::abs(s.coefficients[2] - c2) < 1e-9);
  CHECK(std::abs(s.coefficients[3] - c3) < 1e-9);
  CHECK(std::abs(s.coefficients[4] - c4) < 1e-9);
  CHECK(std::abs(s.coefficients[5] - c5) < 1e-9);
  CHECK(s.r2 > 1.0 - 1e-12);
  const double expect54 =
      c0 + c1 * 5.0 + c2 * 4.0 + c3 * 25.0 + c4 * 20.0 + c5 * 16.0;
  CHECK(std::abs(surface_eval(s, 5.0, 4.0) - expect54) < 1e-9);
}

TEST_CASE("quadratic fit edge cases") {
  // constant data: zero variance counts as a perfect fit (three distinct
  // degrees keep the 1/d/d^2 columns independent)
  std::vector<FitPoint> flat;
  for (double n = 3.0; n <= 9.0; n += 2.0)
    for (double d = 2.0; d <= 6.0; d += 2.0) flat.push_back({n, d, 2.0});
  QuadraticSurface s = quadratic_fit(flat);
  CHECK(s.r2 == 1.0);
  CHECK(std::abs(s.coefficients[0] - 2.0) < 1e-8);
  for (std::size_t i = 1; i < 6; ++i)
    CHECK(std::abs(s.coefficients[i]) < 1e-8);

  std::vector<FitPoint> few(6, FitPoint{3.0, 2.0, 1.0});
  CHECK(thrown_code([&] { quadratic_fit(few); }) ==
        ErrorCode::InvalidArgument);

  std::vector<FitPoint> degenerate(7, FitPoint{3.0, 2.0, 1.0});
  CHECK(thrown_code([&] { quadratic_fit(degenerate); }) ==
        ErrorCode::RankDeficient);
}

TEST_CASE("fitting the full sweep reproduces the frozen surface") {
  std::vector<CirculantPoint> pts = circulant_sweep(19);
  std::vector<FitPoint> fp;
  for (const CirculantPoint& p : pts)
    fp.push_back({static_cast<double>(p.n), static_cast<double>(p.degree),
                  p.alpha2_closed});
  QuadraticSurface s = quadratic_fit(fp);
  CHECK(std::abs(s.r2 - 0.99795074018075081) < 1e-6);
  const double frozen[6] = {1.4068095261306834,   -0.53992476010945634,
                            1.5259331768358932,   0.02698510424099242,
                            -0.099319835359471767, 0.077227624787663873};
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(std::abs(s.coefficients[i] - frozen[i]) < 1e-5);

  std::string json = fit_to_json(s);
  CHECK(json.find("\"r2\"") != std::string::npos);
  CHECK(json.find("\"coefficients\"") != std::string::npos);
}
