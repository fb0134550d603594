#include "gridstab/analysis.hpp"

#include <string>

#include "gridstab/textio.hpp"

namespace gridstab {

AnalysisResult analyze_grid(const GridSpec& g,
                            const CouplingConstants& constants) {
  AnalysisResult out;
  out.y0 = build_y0(g);
  out.y = schur_reduce(out.y0);
  out.p = build_coupling(out.y, constants);
  out.report = stability_value(out.p);
  return out;
}

namespace {

std::string cx_str(const Cx& v) {
  const std::string im = fmt_g(v.imag());
  std::string out = fmt_g(v.real());
  out += (im.empty() || im[0] == '-') ? "" : "+";
  out += im;
  out += "j";
  return out;
}

void append_cx_matrix_text(std::string& s, const char* title,
                           const CxMatrix& m) {
  s += title;
  s += " (";
  s += std::to_string(m.rows());
  s += "x";
  s += std::to_string(m.cols());
  s += "):\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += "  ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += "  ";
      s += cx_str(m(r, c));
    }
    s += "\n";
  }
}

void json_cx_matrix(JsonWriter& w, const std::string& key, const CxMatrix& m) {
  w.key(key);
  w.begin_object();
  for (const char* part : {"re", "im"}) {
    w.key(part);
    w.begin_array();
    const bool real_part = part[0] == 'r';
    for (std::size_t r = 0; r < m.rows(); ++r) {
      w.begin_array();
      for (std::size_t c = 0; c < m.cols(); ++c)
        w.value(real_part ? m(r, c).real() : m(r, c).imag());
      w.end_array();
    }
    w.end_array();
  }
  w.end_object();
}

void csv_cx_matrix(std::string& s, const std::string& name, const CxMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      s += name + "_re," + std::to_string(r) + "," + std::to_string(c) + "," +
           fmt_g(m(r, c).real()) + "\n";
      s += name + "_im," + std::to_string(r) + "," + std::to_string(c) + "," +
           fmt_g(m(r, c).imag()) + "\n";
    }
}

} // namespace

std::string analysis_to_text(const AnalysisResult& r) {
  std::string s;
  s += "nodes: " + std::to_string(r.y0.matrix.rows()) +
       "  generators: " + std::to_string(r.y0.n_generators) + "\n\n";
  append_cx_matrix_text(s, "nodal admittance matrix", r.y0.matrix);
  s += "\n";
  append_cx_matrix_text(s, "reduced (generator-only) matrix", r.y.matrix);
  s += "\ncoupling matrix (" + std::to_string(r.p.matrix.size()) + "x" +
       std::to_string(r.p.matrix.size()) + "):\n";
  for (std::size_t i = 0; i < r.p.matrix.size(); ++i) {
    s += "  ";
    for (std::size_t j2 = 0; j2 < r.p.matrix.size(); ++j2) {
      if (j2) s += "  ";
      s += fmt_g(r.p.matrix(i, j2));
    }
    s += "\n";
  }
  s += "\neigenvalues:";
  for (double ev : r.report.spectrum.eigenvalues) s += " " + fmt_g(ev);
  s += "\nzero mode: " + fmt_g(r.report.zero_mode_value);
  s += "\nstability value: " + fmt_g(r.report.alpha2);
  s += "\nverdict: ";
  s += verdict_name(r.report.verdict);
  s += "\n";
  return s;
}

std::string analysis_to_json(const AnalysisResult& r) {
  JsonWriter w;
  w.begin_object();
  w.kv("n_nodes", r.y0.matrix.rows());
  w.kv("n_generators", static_cast<std::size_t>(r.y0.n_generators));
  json_cx_matrix(w, "y0", r.y0.matrix);
  json_cx_matrix(w, "y", r.y.matrix);
  w.key("p");
  w.begin_array();
  for (std::size_t i = 0; i < r.p.matrix.size(); ++i) {
    w.begin_array();
    for (std::size_t j2 = 0; j2 < r.p.matrix.size(); ++j2)
      w.value(r.p.matrix(i, j2));
    w.end_array();
  }
  w.end_array();
  w.key("spectrum");
  w.begin_array();
  for (double ev : r.report.spectrum.eigenvalues) w.value(ev);
  w.end_array();
  w.kv("zero_mode_value", r.report.zero_mode_value);
  w.kv("alpha2", r.report.alpha2);
  w.kv("verdict", verdict_name(r.report.verdict));
  w.end_object();
  std::string out = w.take();
  out += "\n";
  return out;
}

std::string analysis_to_csv(const AnalysisResult& r) {
  std::string s = "quantity,i,j,value\n";
  csv_cx_matrix(s, "y0", r.y0.matrix);
  csv_cx_matrix(s, "y", r.y.matrix);
  for (std::size_t i = 0; i < r.p.matrix.size(); ++i)
    for (std::size_t j2 = 0; j2 < r.p.matrix.size(); ++j2)
      s += "p," + std::to_string(i) + "," + std::to_string(j2) + "," +
           fmt_g(r.p.matrix(i, j2)) + "\n";
  for (std::size_t i = 0; i < r.report.spectrum.eigenvalues.size(); ++i)
    s += "eigenvalue," + std::to_string(i) + ",," +
         fmt_g(r.report.spectrum.eigenvalues[i]) + "\n";
  s += "zero_mode_value,,," + fmt_g(r.report.zero_mode_value) + "\n";
  s += "alpha2,,," + fmt_g(r.report.alpha2) + "\n";
  s += std::string("verdict,,,") + verdict_name(r.report.verdict) + "\n";
  return s;
}

} // namespace gridstab
