#include "gridstab/circulant.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gridstab/analysis.hpp"
#include "gridstab/textio.hpp"

namespace gridstab {

double alpha2_closed_form(std::size_t n, std::size_t k) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "closed form: need n >= 3");
  if (n % 2 == 0)
    fail(ErrorCode::OddRequired,
         "closed form: defined for odd n, got " + std::to_string(n));
  if (k < 1 || 2 * k > n - 1)
    fail(ErrorCode::HopOutOfRange,
         "closed form: hop count " + std::to_string(k) +
             " outside 1..(n-1)/2 for n = " + std::to_string(n));
  const double nn = static_cast<double>(n);
  const double m = 2.0 * static_cast<double>(k) + 1.0;
  return m - std::sin(m * std::numbers::pi / nn) /
                 std::sin(std::numbers::pi / nn);
}

std::vector<CirculantPoint> circulant_sweep(std::size_t n_max) {
  if (n_max < 3) fail(ErrorCode::InvalidArgument, "sweep: need n_max >= 3");
  std::vector<CirculantPoint> out;
  for (std::size_t n = 3; n <= n_max; n += 2) {
    for (std::size_t k = 1; 2 * k <= n - 1; ++k) {
      CirculantPoint pt;
      pt.n = n;
      pt.k = k;
      pt.degree = 2 * k;
      pt.alpha2_closed = alpha2_closed_form(n, k);
      const GridSpec g =
          generate_named(NamedTopology::Circulant, n, k, Cx{0.0, -1.0});
      pt.alpha2_numeric = analyze_grid(g).report.alpha2;
      pt.abs_err = std::abs(pt.alpha2_closed - pt.alpha2_numeric);
      out.push_back(pt);
    }
  }
  return out;
}

std::string sweep_to_csv(const std::vector<CirculantPoint>& points) {
  std::string s = "n,k,degree,alpha2_closed,alpha2_numeric,abs_err\n";
  for (const CirculantPoint& p : points) {
    s += std::to_string(p.n) + "," + std::to_string(p.k) + "," +
         std::to_string(p.degree) + "," + fmt_g(p.alpha2_closed) + "," +
         fmt_g(p.alpha2_numeric) + "," + fmt_g(p.abs_err) + "\n";
  }
  return s;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, std::size_t line_no) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError,
         "csv line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
}

std::size_t parse_index(const std::string& s, std::size_t line_no) {
  const double v = parse_double(s, line_no);
  if (v < 0 || v != std::floor(v))
    fail(ErrorCode::ParseError,
         "csv line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  return static_cast<std::size_t>(v);
}

} // namespace

std::vector<CirculantPoint> parse_sweep_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<CirculantPoint> out;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r" || line[0] == '#') continue;
    const auto cells = split_csv_line(line);
    if (!header_seen) {
      if (cells.size() != 6 || cells[0] != "n")
        fail(ErrorCode::ParseError,
             "csv line " + std::to_string(line_no) +
                 ": expected header n,k,degree,alpha2_closed,alpha2_numeric,"
                 "abs_err");
      header_seen = true;
      continue;
    }
    if (cells.size() != 6)
      fail(ErrorCode::ParseError,
           "csv line " + std::to_string(line_no) + ": expected 6 fields, got " +
               std::to_string(cells.size()));
    CirculantPoint pt;
    pt.n = parse_index(cells[0], line_no);
    pt.k = parse_index(cells[1], line_no);
    pt.degree = parse_index(cells[2], line_no);
    pt.alpha2_closed = parse_double(cells[3], line_no);
    pt.alpha2_numeric = parse_double(cells[4], line_no);
    pt.abs_err = parse_double(cells[5], line_no);
    out.push_back(pt);
  }
  if (!header_seen)
    fail(ErrorCode::ParseError, "csv: missing header row");
  return out;
}

QuadraticSurface quadratic_fit(const std::vector<FitPoint>& points) {
  constexpr std::size_t kTerms = 6;
  if (points.size() < kTerms + 1)
    fail(ErrorCode::InvalidArgument,
         "fit: need at least 7 points, got " + std::to_string(points.size()));

  auto monomials = [](double n, double d) {
    return std::array<double, kTerms>{1.0, n, d, n * n, n * d, d * d};
  };

  // Normal equations (X^T X) beta = X^T y in the complex solver's containers.
  CxMatrix xtx(kTerms, kTerms);
  CxMatrix xty(kTerms, 1);
  for (const FitPoint& p : points) {
    const auto row = monomials(p.n, p.degree);
    for (std::size_t a = 0; a < kTerms; ++a) {
      for (std::size_t b = 0; b < kTerms; ++b)
        xtx(a, b) += Cx{row[a] * row[b], 0.0};
      xty(a, 0) += Cx{row[a] * p.alpha2, 0.0};
    }
  }

  CxMatrix beta;
  try {
    beta = cx_lu_solve(xtx, xty);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SingularMatrix)
      fail(ErrorCode::RankDeficient,
           std::string("fit: design matrix rank-deficient (") + e.what() + ")");
    throw;
  }

  QuadraticSurface s;
  for (std::size_t a = 0; a < kTerms; ++a) s.coefficients[a] = beta(a, 0).real();

  double mean = 0.0;
  for (const FitPoint& p : points) mean += p.alpha2;
  mean /= static_cast<double>(points.size());
  double sse = 0.0, sst = 0.0;
  for (const FitPoint& p : points) {
    const double pred = surface_eval(s, p.n, p.degree);
    sse += (p.alpha2 - pred) * (p.alpha2 - pred);
    sst += (p.alpha2 - mean) * (p.alpha2 - mean);
  }
  s.r2 = sst > 0.0 ? 1.0 - sse / sst : 1.0;
  return s;
}

double surface_eval(const QuadraticSurface& s, double n, double degree) {
  return s.coefficients[0] + s.coefficients[1] * n + s.coefficients[2] * degree +
         s.coefficients[3] * n * n + s.coefficients[4] * n * degree +
         s.coefficients[5] * degree * degree;
}

std::string fit_to_json(const QuadraticSurface& s) {
  JsonWriter w;
  w.begin_object();
  w.key("coefficients");
  w.begin_object();
  const char* names[6] = {"const", "n", "d", "n2", "nd", "d2"};
  for (std::size_t i = 0; i < 6; ++i) w.kv(names[i], s.coefficients[i]);
  w.end_object();
  w.kv("r2", s.r2);
  w.end_object();
  std::string out = w.take();
  out += "\n";
  return out;
}

} // namespace gridstab
