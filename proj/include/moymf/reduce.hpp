#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "moymf/mf.hpp"
#include "moymf/symfun.hpp"

namespace moymf {

struct LogEntry {
  std::string op;
  nlohmann::json params;
  bool potential_ok = true;
};
using ReductionLog = std::vector<LogEntry>;
nlohmann::json to_json(const ReductionLog& log);

// (a; b) -> (c a; b / c)
KoszulMF scalar_twist(const KoszulMF& k, std::size_t row, const Rational& c);

enum class Column { first, second };
// first:  a_j += lambda a_i,  b_i -= lambda b_j
// second: b_j += lambda b_i,  a_i -= lambda a_j
KoszulMF row_op(const KoszulMF& k, std::size_t i, std::size_t j, const Poly& lambda, Column kind);

// K(a; b) = K(-b; -a){(deg b - deg a)/2}<1>
KoszulMF swap_row(const KoszulMF& k, std::size_t row);

enum class Regularity { verified, unverified };
// Compares the quotient series with the prediction for a regular sequence up to cutoff.
Regularity regularity_heuristic(const QuotientRing& base, const std::vector<Poly>& seq, int cutoff);
// Certificate for a polynomial ring and as many homogeneous elements as variables:
// the quotient has exactly the predicted (finite) series, checked one window past its top.
bool certify_complete_intersection(const std::vector<VarId>& vars, const std::vector<Poly>& seq);

// Keeps the first column and swaps in new second entries with the same potential.
KoszulMF replace_second_sequence(const KoszulMF& k, const std::vector<Poly>& target_b, bool force, int cutoff);

// Removes one row. When b = c*y + p with y internal, c a nonzero constant and y
// not in p, y is eliminated by substitution; otherwise the row is excluded as a
// batch of one (see exclude_rows).
KoszulMF exclude_variable(const KoszulMF& k, std::size_t row, std::vector<VarId>& internal, int cutoff);

// Passes to base / <b_rows>. Requires the potential to avoid internal variables and
// the b's with external variables set to 0 to continue the base ideal (likewise
// specialized) as a regular sequence in the internal variables.
KoszulMF exclude_rows(const KoszulMF& k, const std::vector<std::size_t>& rows, const std::vector<VarId>& internal,
                      int cutoff, bool force = false);

// Tensor of two Koszul objects with the second object's alphabets renamed to the first's.
KoszulMF glue(const KoszulMF& x, const KoszulMF& y, const std::vector<std::pair<Alphabet, Alphabet>>& pairs);

// Sets the given variables to 0 and drops them from the base.
KoszulMF specialize(const KoszulMF& k, const std::vector<VarId>& vars);

// Splits off summands R -u-> R with u a unit of the base (after normal form).
MatrixFactorization remove_contractible(const MatrixFactorization& x);

struct ReduceOptions {
  int cutoff = default_cutoff();
  std::optional<std::uint64_t> seed;  // randomizes exclusion order
  bool force = false;
};

struct Reduction {
  KoszulMF mf;
  std::vector<VarId> internal;  // internal variables not yet excluded
  bool contractible = false;    // a unit entry: the object is zero
  ReductionLog log;
};

// Linear exclusions, then a batch exclusion over a finite internal quotient if one exists.
Reduction reduce_open(const KoszulMF& k, const std::vector<VarId>& internal, const ReduceOptions& opt = {});
// Zero potential, every variable internal: ends with a finite dimensional base.
Reduction reduce_closed(const KoszulMF& k, const ReduceOptions& opt = {});

}  // namespace moymf
