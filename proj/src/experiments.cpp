#include "gridstab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gridstab/analysis.hpp"
#include "gridstab/textio.hpp"

namespace gridstab {

namespace {

const Cx kUnitSusceptance{0.0, -1.0};

double pipeline_alpha2(const GridSpec& g) {
  return analyze_grid(g).report.alpha2;
}

// Extract the single branch admittance shared by every edge of the grids
// passed in; fall back to -j when there are no edges at all.
Cx common_admittance(std::initializer_list<const GridSpec*> grids) {
  Cx common{};
  bool have = false;
  for (const GridSpec* g : grids)
    for (const Edge& e : g->edges()) {
      if (!have) {
        common = e.admittance;
        have = true;
      } else if (std::abs(e.admittance - common) >
                 1e-12 * std::max(1.0, std::abs(common))) {
        fail(ErrorCode::InvalidArgument,
             "experiment: branch admittances are not uniform");
      }
    }
  if (!have) return kUnitSusceptance;
  if (std::abs(common) == 0.0)
    fail(ErrorCode::InvalidArgument,
         "experiment: branch admittance must be nonzero");
  return common;
}

void require_all_generators(const GridSpec& g) {
  if (g.load_count() != 0)
    fail(ErrorCode::InvalidArgument,
         "experiment: grid must contain generators only");
}

// Exact cross-group violation counting on sorted value arrays.
// Direction::ValueFalls models "larger key => strictly smaller value": a pair
// (x from the smaller key, y from the larger) violates when x <= y.
// Direction::ValueRises models the opposite monotonicity: violation when
// x >= y.
enum class Direction { ValueFalls, ValueRises };

std::size_t count_cross_violations(const std::vector<double>& small_key_sorted,
                                   const std::vector<double>& large_key_sorted,
                                   Direction dir) {
  std::size_t count = 0;
  for (double y : large_key_sorted) {
    if (dir == Direction::ValueFalls) {
      // x <= y
      count += static_cast<std::size_t>(
          std::upper_bound(small_key_sorted.begin(), small_key_sorted.end(),
                           y) -
          small_key_sorted.begin());
    } else {
      // x >= y
      count += static_cast<std::size_t>(
          small_key_sorted.end() -
          std::lower_bound(small_key_sorted.begin(), small_key_sorted.end(),
                           y));
    }
  }
  return count;
}

bool is_extremal_violation(double small_key_extreme, double large_key_extreme,
                           Direction dir) {
  return dir == Direction::ValueFalls
             ? small_key_extreme <= large_key_extreme
             : small_key_extreme >= large_key_extreme;
}

} // namespace

TreeExperimentReport tree_diameter_experiment(std::size_t n) {
  if (n < 3)
    fail(ErrorCode::InvalidArgument, "tree experiment: need n >= 3");
  if (n > 8)
    fail(ErrorCode::NTooLarge,
         "tree experiment: exhaustive enumeration capped at n = 8 (" +
             std::to_string(n) + " requested)");

  TreeExperimentReport rep;
  rep.n = n;

  struct ClassAccum {
    std::vector<double> values;
    TreeRecord min_record, max_record;
  };
  std::map<std::size_t, ClassAccum> classes;

  std::vector<std::size_t> code(n - 2, 0);
  while (true) {
    const GridSpec tree = tree_from_pruefer(code, kUnitSusceptance);
    TreeRecord rec;
    rec.code = code;
    rec.diameter = diameter(tree);
    rec.alpha2 = pipeline_alpha2(tree);

    ClassAccum& acc = classes[rec.diameter];
    if (acc.values.empty() || rec.alpha2 < acc.min_record.alpha2)
      acc.min_record = rec;
    if (acc.values.empty() || rec.alpha2 > acc.max_record.alpha2)
      acc.max_record = rec;
    acc.values.push_back(rec.alpha2);
    rep.records.push_back(std::move(rec));

    // next code, counting in base n
    std::size_t pos = code.size();
    while (pos > 0) {
      if (++code[pos - 1] < n) break;
      code[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }

  for (auto& [diam, acc] : classes) {
    std::sort(acc.values.begin(), acc.values.end());
    rep.classes.push_back(DiameterClassStat{diam, acc.values.size(),
                                            acc.min_record, acc.max_record});
  }

  // "smaller diameter => strictly larger alpha2": value falls as key grows.
  for (auto it1 = classes.begin(); it1 != classes.end(); ++it1)
    for (auto it2 = std::next(it1); it2 != classes.end(); ++it2) {
      rep.violation_count += count_cross_violations(
          it1->second.values, it2->second.values, Direction::ValueFalls);
      if (is_extremal_violation(it1->second.min_record.alpha2,
                                it2->second.max_record.alpha2,
                                Direction::ValueFalls)) {
        // Re-derive the witness pair from scratch before reporting it.
        TreeViolation w;
        w.smaller_diameter = it1->second.min_record;
        w.larger_diameter = it2->second.max_record;
        const GridSpec t1 =
            tree_from_pruefer(w.smaller_diameter.code, kUnitSusceptance);
        const GridSpec t2 =
            tree_from_pruefer(w.larger_diameter.code, kUnitSusceptance);
        w.smaller_diameter.diameter = diameter(t1);
        w.smaller_diameter.alpha2 = pipeline_alpha2(t1);
        w.larger_diameter.diameter = diameter(t2);
        w.larger_diameter.alpha2 = pipeline_alpha2(t2);
        if (w.smaller_diameter.diameter < w.larger_diameter.diameter &&
            w.smaller_diameter.alpha2 <= w.larger_diameter.alpha2)
          rep.witnesses.push_back(std::move(w));
      }
    }
  rep.counterexample_found = rep.violation_count > 0;
  return rep;
}

CycleExperimentReport cycle_addition_experiment(const GridSpec& tree) {
  require_all_generators(tree);
  if (!is_tree(tree))
    fail(ErrorCode::NotATree, "cycle experiment: grid is not a tree");
  if (tree.node_count() < 3)
    fail(ErrorCode::InvalidArgument, "cycle experiment: need n >= 3");
  const Cx adm = common_admittance({&tree});

  CycleExperimentReport rep;
  struct GroupAccum {
    std::vector<double> values;
    CycleFinding min_f, max_f;
  };
  std::map<std::size_t, GroupAccum> groups;

  for (std::size_t a = 0; a < tree.node_count(); ++a)
    for (std::size_t b = a + 1; b < tree.node_count(); ++b) {
      if (tree.has_edge(a, b)) continue;
      CycleFinding f;
      f.a = a;
      f.b = b;
      f.cycle_length = cycle_length_of_edge(tree, a, b);
      f.alpha2 = pipeline_alpha2(with_added_edge(tree, a, b, adm));

      GroupAccum& acc = groups[f.cycle_length];
      if (acc.values.empty() || f.alpha2 < acc.min_f.alpha2) acc.min_f = f;
      if (acc.values.empty() || f.alpha2 > acc.max_f.alpha2) acc.max_f = f;
      acc.values.push_back(f.alpha2);
      rep.findings.push_back(f);
    }

  for (auto& [len, acc] : groups)
    std::sort(acc.values.begin(), acc.values.end());

  // "longer created cycle => strictly larger alpha2": value rises with key.
  for (auto it1 = groups.begin(); it1 != groups.end(); ++it1)
    for (auto it2 = std::next(it1); it2 != groups.end(); ++it2) {
      rep.violation_count += count_cross_violations(
          it1->second.values, it2->second.values, Direction::ValueRises);
      if (is_extremal_violation(it1->second.max_f.alpha2,
                                it2->second.min_f.alpha2,
                                Direction::ValueRises)) {
        CycleViolation w;
        w.shorter_cycle = it1->second.max_f;
        w.longer_cycle = it2->second.min_f;
        // recompute both findings before reporting
        w.shorter_cycle.cycle_length =
            cycle_length_of_edge(tree, w.shorter_cycle.a, w.shorter_cycle.b);
        w.shorter_cycle.alpha2 = pipeline_alpha2(
            with_added_edge(tree, w.shorter_cycle.a, w.shorter_cycle.b, adm));
        w.longer_cycle.cycle_length =
            cycle_length_of_edge(tree, w.longer_cycle.a, w.longer_cycle.b);
        w.longer_cycle.alpha2 = pipeline_alpha2(
            with_added_edge(tree, w.longer_cycle.a, w.longer_cycle.b, adm));
        if (w.shorter_cycle.cycle_length < w.longer_cycle.cycle_length &&
            w.shorter_cycle.alpha2 >= w.longer_cycle.alpha2)
          rep.witnesses.push_back(std::move(w));
      }
    }
  rep.counterexample_found = rep.violation_count > 0;
  return rep;
}

JoinReport best_join_edge(const GridSpec& t1, const GridSpec& t2) {
  require_all_generators(t1);
  require_all_generators(t2);
  if (!is_tree(t1) || !is_tree(t2))
    fail(ErrorCode::NotATree, "join: both grids must be trees");
  const Cx adm = common_admittance({&t1, &t2});

  const std::size_t n1 = t1.node_count();
  const std::size_t n2 = t2.node_count();

  // second tree relabeled after the first
  std::vector<Node> nodes;
  nodes.reserve(n1 + n2);
  for (const Node& nd : t1.nodes()) nodes.push_back(nd);
  for (const Node& nd : t2.nodes())
    nodes.push_back(Node{nd.id + n1, nd.kind, nd.shunt});
  std::vector<Edge> base_edges;
  base_edges.reserve(n1 + n2 - 1);
  for (const Edge& e : t1.edges()) base_edges.push_back(e);
  for (const Edge& e : t2.edges())
    base_edges.push_back(Edge{e.a + n1, e.b + n1, e.admittance});

  JoinReport rep;
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b) {
      std::vector<Edge> edges = base_edges;
      edges.push_back(Edge{a, n1 + b, adm});
      const GridSpec joined(nodes, std::move(edges));
      JoinCandidate cand;
      cand.a = a;
      cand.b = b;
      cand.alpha2 = pipeline_alpha2(joined);
      cand.diameter = diameter(joined);
      rep.ranking.push_back(cand);
    }

  std::sort(rep.ranking.begin(), rep.ranking.end(),
            [](const JoinCandidate& x, const JoinCandidate& y) {
              if (x.alpha2 != y.alpha2) return x.alpha2 > y.alpha2;
              if (x.a != y.a) return x.a < y.a;
              return x.b < y.b;
            });
  rep.best = rep.ranking.front();

  rep.centers_t1 = center_nodes(t1);
  rep.centers_t2 = center_nodes(t2);
  rep.best_is_center_center =
      std::binary_search(rep.centers_t1.begin(), rep.centers_t1.end(),
                         rep.best.a) &&
      std::binary_search(rep.centers_t2.begin(), rep.centers_t2.end(),
                         rep.best.b);

  std::size_t min_diam = rep.ranking.front().diameter;
  for (const JoinCandidate& c : rep.ranking)
    min_diam = std::min(min_diam, c.diameter);
  rep.alpha2_argmax_minimizes_diameter = rep.best.diameter == min_diam;
  return rep;
}

std::string format_pruefer_code(const std::vector<std::size_t>& code) {
  std::string s;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) s += "-";
    s += std::to_string(code[i]);
  }
  return s;
}

std::string trees_to_csv(const TreeExperimentReport& r) {
  std::string s = "code,diameter,alpha2\n";
  for (const TreeRecord& rec : r.records)
    s += format_pruefer_code(rec.code) + "," + std::to_string(rec.diameter) +
         "," + fmt_g(rec.alpha2) + "\n";
  s += "# n=" + std::to_string(r.n) +
       " instances=" + std::to_string(r.records.size()) + "\n";
  for (const DiameterClassStat& c : r.classes)
    s += "# class diameter=" + std::to_string(c.diameter) +
         " count=" + std::to_string(c.count) +
         " alpha2_min=" + fmt_g(c.min_record.alpha2) +
         " alpha2_max=" + fmt_g(c.max_record.alpha2) + "\n";
  s += "# violations=" + std::to_string(r.violation_count) + "\n";
  for (const TreeViolation& w : r.witnesses)
    s += "# witness smaller_diameter code=" +
         format_pruefer_code(w.smaller_diameter.code) +
         " diameter=" + std::to_string(w.smaller_diameter.diameter) +
         " alpha2=" + fmt_g(w.smaller_diameter.alpha2) +
         " | larger_diameter code=" +
         format_pruefer_code(w.larger_diameter.code) +
         " diameter=" + std::to_string(w.larger_diameter.diameter) +
         " alpha2=" + fmt_g(w.larger_diameter.alpha2) + "\n";
  s += std::string("# verdict=") +
       (r.counterexample_found ? "counterexample" : "no-counterexample") + "\n";
  return s;
}

std::string cycles_to_csv(const CycleExperimentReport& r) {
  std::string s = "a,b,cycle_length,alpha2\n";
  for (const CycleFinding& f : r.findings)
    s += std::to_string(f.a) + "," + std::to_string(f.b) + "," +
         std::to_string(f.cycle_length) + "," + fmt_g(f.alpha2) + "\n";
  s += "# violations=" + std::to_string(r.violation_count) + "\n";
  for (const CycleViolation& w : r.witnesses)
    s += "# witness shorter_cycle=(" + std::to_string(w.shorter_cycle.a) + "," +
         std::to_string(w.shorter_cycle.b) +
         ") length=" + std::to_string(w.shorter_cycle.cycle_length) +
         " alpha2=" + fmt_g(w.shorter_cycle.alpha2) + " | longer_cycle=(" +
         std::to_string(w.longer_cycle.a) + "," +
         std::to_string(w.longer_cycle.b) +
         ") length=" + std::to_string(w.longer_cycle.cycle_length) +
         " alpha2=" + fmt_g(w.longer_cycle.alpha2) + "\n";
  s += std::string("# verdict=") +
       (r.counterexample_found ? "counterexample" : "no-counterexample") + "\n";
  return s;
}

std::string join_to_csv(const JoinReport& r) {
  std::string s = "a,b,alpha2,diameter\n";
  for (const JoinCandidate& c : r.ranking)
    s += std::to_string(c.a) + "," + std::to_string(c.b) + "," +
         fmt_g(c.alpha2) + "," + std::to_string(c.diameter) + "\n";
  auto list = [](const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += "+";
      out += std::to_string(v[i]);
    }
    return out;
  };
  s += "# centers_t1=" + list(r.centers_t1) +
       " centers_t2=" + list(r.centers_t2) + "\n";
  s += "# best a=" + std::to_string(r.best.a) +
       " b=" + std::to_string(r.best.b) + " alpha2=" + fmt_g(r.best.alpha2) +
       " diameter=" + std::to_string(r.best.diameter) + "\n";
  s += std::string("# best_is_center_center=") +
       (r.best_is_center_center ? "true" : "false") + "\n";
  s += std::string("# alpha2_argmax_minimizes_diameter=") +
       (r.alpha2_argmax_minimizes_diameter ? "true" : "false") + "\n";
  return s;
}

} // namespace gridstab
