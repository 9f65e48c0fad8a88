#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "moymf/poly.hpp"
#include "moymf/qseries.hpp"

namespace moymf {

// Degree cutoff used when none is given: $MOYMF_CUTOFF, else 64.
int default_cutoff();

// Q[vars] / <gens> with homogeneous generators. Normal forms are computed one
// degree at a time from the span of {m * g} in the monomial basis.
class QuotientRing {
 public:
  QuotientRing();
  explicit QuotientRing(std::vector<VarId> vars, std::vector<Poly> gens = {}, int cutoff = default_cutoff());

  const std::vector<VarId>& vars() const { return vars_; }
  const std::vector<Poly>& gens() const { return gens_; }
  int cutoff() const { return cutoff_; }
  bool is_polynomial_ring() const { return gens_.empty(); }
  bool has_var(VarId v) const;
  std::vector<int> var_degrees() const;
  int max_var_degree() const;

  Poly normal_form(const Poly& p) const;
  bool is_zero(const Poly& p) const { return normal_form(p).is_zero(); }
  bool equal(const Poly& a, const Poly& b) const { return is_zero(a - b); }

  // Monomials of the ambient ring in one degree, largest first.
  const std::vector<Monomial>& monomials(int degree) const;
  std::vector<Monomial> standard_monomials(int degree) const;
  std::int64_t dimension(int degree) const;
  QLaurent dimension_series(int cutoff) const;

  // Last nonzero degree, once a full window of max_var_degree vanishing degrees
  // proves the ring is finite dimensional; nullopt if that does not happen by cutoff.
  std::optional<int> top_degree(int cutoff) const;

  QuotientRing with_generators(const std::vector<Poly>& extra) const;
  QuotientRing with_cutoff(int cutoff) const;
  // Applies a substitution to the generators and drops the substituted variables.
  QuotientRing eliminated(const Substitution& sigma) const;

  std::string str() const;

 private:
  struct Piece;
  struct Cache;
  const Piece& piece(int degree) const;

  std::vector<VarId> vars_;
  std::vector<Poly> gens_;
  int cutoff_;
  std::shared_ptr<Cache> cache_;
};

// Union of variables and generators; shared variable names are identified.
QuotientRing combine(const QuotientRing& a, const QuotientRing& b);

// Dimension series of the monomials of given degree in any variable set, by direct count.
QLaurent count_monomials(const std::vector<VarId>& vars, int cutoff);

}  // namespace moymf
