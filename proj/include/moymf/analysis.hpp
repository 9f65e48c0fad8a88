#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "moymf/diagram.hpp"
#include "moymf/mf.hpp"
#include "moymf/qseries.hpp"
#include "moymf/reduce.hpp"

namespace moymf {

// dims[k][j] = dim H^{j,k}.
struct Homology {
  std::map<int, std::int64_t> dims[2];
  QLaurent series(int z2) const;
};

// Needs zero potential and a finite dimensional base (run reduce_closed first).
Homology homology(const MatrixFactorization& x, int cutoff = default_cutoff());

// Sum of dim H^{j,k} q^j over both Z/2 indices, without sign.
QLaurent euler_characteristic(const Homology& h);

struct ClosedEvaluation {
  Homology homology;
  Reduction reduction;
};

// Reduce, expand, strip unit entries and take homology.
ClosedEvaluation evaluate_closed(const KoszulMF& k, const ReduceOptions& opt = {});
ClosedEvaluation evaluate_diagram(const Diagram& d, const ReduceOptions& opt = {});

// Homology after every boundary variable is set to 0. This is unchanged by
// homotopy equivalence over the boundary ring, adds over direct sums and
// follows grading shifts, so it compares open diagrams.
ClosedEvaluation evaluate_boundary_fiber(const Diagram& d, const ReduceOptions& opt = {});

// Independent evaluation by graph rewriting: circles, bubbles, counter-bubbles
// and the two square moves. Throws Irreducible when none applies.
QLaurent moy_bracket(const Diagram& d);

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct RelationReport {
  std::string relation;
  std::vector<int> params;
  QLaurent lhs_series, rhs_series;
  std::vector<Check> checks;
  bool pass = false;
  std::string reduction_log_ref;
  nlohmann::json logs = nlohmann::json::object();

  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Relation names: line_contract (i n), circle_jacobi (i n), assoc_merge and
// assoc_split (i1 i2 i3 n), bubble (i1 i2 n), counter_bubble (i1 i2 n),
// square_j and square_wide (j n), cor_square (j1 j2).
RelationReport verify_relation(const std::string& name, const std::vector<int>& params,
                               const ReduceOptions& opt = {});
std::vector<std::string> relation_names();

RelationReport oracle_crosscheck(const Diagram& d, const ReduceOptions& opt = {});

// Diagram texts used by the verifier, exposed for tests and the CLI.
namespace shapes {
std::string line(int i, int n);
std::string circle(int i, int n);
std::string two_lines(int i, int n);  // glued end to end
std::string bubble(int i1, int i2, int n);
std::string counter_bubble(int i1, int i2, int n);
std::string assoc_merge_left(int i1, int i2, int i3, int n);
std::string assoc_merge_right(int i1, int i2, int i3, int n);
std::string assoc_split_left(int i1, int i2, int i3, int n);
std::string assoc_split_right(int i1, int i2, int i3, int n);
std::string square_j(int j, int n);
std::string square_j_wide_edge(int j, int n);
std::string square_j_lines(int j, int n);
std::string square_wide(int j, int n);
std::string square_wide_lines(int j, int n);
std::string square_wide_lower(int j, int n);
}  // namespace shapes

// Renames boundary heads so that each (out label, in label) pair is glued.
Diagram close_up(Diagram d, const std::vector<std::pair<std::string, std::string>>& out_to_in);
Diagram disjoint_union(const Diagram& a, const Diagram& b);

}  // namespace moymf
