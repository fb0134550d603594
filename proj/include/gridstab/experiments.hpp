#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gridstab/grid.hpp"

namespace gridstab {

struct TreeRecord {
  std::vector<std::size_t> code; // length n-2
  std::size_t diameter = 0;
  double alpha2 = 0.0;
};

struct DiameterClassStat {
  std::size_t diameter = 0;
  std::size_t count = 0;
  TreeRecord min_record; // smallest alpha2 in the class
  TreeRecord max_record; // largest alpha2 in the class
};

struct TreeViolation {
  TreeRecord smaller_diameter;
  TreeRecord larger_diameter; // alpha2 >= the smaller-diameter tree's
};

// Exhaustive check of "smaller diameter => strictly larger stability value"
// over all n^(n-2) labeled trees (uniform unit negative susceptance, full
// pipeline).  violation_count is the exact number of ordered tree pairs
// (T1, T2) with diam T1 < diam T2 and alpha2(T1) <= alpha2(T2); witnesses is
// capped at one extremal, independently recomputed pair per diameter pair.
// Errors: InvalidArgument (n < 3), NTooLarge (n > 8).
struct TreeExperimentReport {
  std::size_t n = 0;
  std::vector<TreeRecord> records;        // code-enumeration order
  std::vector<DiameterClassStat> classes; // ascending diameter
  std::vector<TreeViolation> witnesses;
  std::size_t violation_count = 0;
  bool counterexample_found = false;
};

TreeExperimentReport tree_diameter_experiment(std::size_t n);

struct CycleFinding {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t cycle_length = 0; // of the cycle the new edge creates
  double alpha2 = 0.0;          // of the tree plus that edge
};

struct CycleViolation {
  CycleFinding shorter_cycle;
  CycleFinding longer_cycle; // alpha2 <= the shorter-cycle finding's
};

// Adds every currently-absent edge to the tree, one at a time, and checks
// "longer created cycle => strictly larger stability value".  The tree must be
// all-generator with one common branch admittance, which the added edge
// reuses.  violation_count counts pairs (f1, f2) with cycle(f1) < cycle(f2)
// and alpha2(f1) >= alpha2(f2), witnesses capped as above.
// Errors: NotATree, InvalidArgument (loads / non-uniform branches / n < 3).
struct CycleExperimentReport {
  std::vector<CycleFinding> findings; // ordered by (a, b)
  std::vector<CycleViolation> witnesses;
  std::size_t violation_count = 0;
  bool counterexample_found = false;
};

CycleExperimentReport cycle_addition_experiment(const GridSpec& tree);

struct JoinCandidate {
  std::size_t a = 0;        // node of the first tree
  std::size_t b = 0;        // node of the second tree (original labeling)
  double alpha2 = 0.0;      // of the joined tree
  std::size_t diameter = 0; // of the joined tree
};

// Joins two trees with one edge, trying every node pair; second tree's nodes
// are appended after the first's.  Ranking is by alpha2 descending with (a, b)
// tie-break.  Errors: NotATree, InvalidArgument (loads / non-uniform or
// conflicting branch admittances).  Two single-node trees are allowed (the
// join admittance then defaults to -j).
struct JoinReport {
  JoinCandidate best;
  std::vector<JoinCandidate> ranking;
  std::vector<std::size_t> centers_t1;
  std::vector<std::size_t> centers_t2;
  bool best_is_center_center = false;
  bool alpha2_argmax_minimizes_diameter = false;
};

JoinReport best_join_edge(const GridSpec& t1, const GridSpec& t2);

// CSV renderings: data rows then a '#'-prefixed summary block.
std::string trees_to_csv(const TreeExperimentReport& r);
std::string cycles_to_csv(const CycleExperimentReport& r);
std::string join_to_csv(const JoinReport& r);

std::string format_pruefer_code(const std::vector<std::size_t>& code);

} // namespace gridstab
