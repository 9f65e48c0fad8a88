#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "moymf/poly.hpp"
#include "moymf/quotient.hpp"

namespace moymf {

using BaseRing = std::shared_ptr<const QuotientRing>;
BaseRing make_base(QuotientRing r);
BaseRing polynomial_base(const std::vector<VarId>& vars);

using Matrix = std::vector<std::vector<Poly>>;  // [row][col]

// Free graded module; a generator with shift s sits in degree s.
struct GradedFreeModule {
  std::vector<int> shifts;
  std::size_t rank() const { return shifts.size(); }
};

// d0 : M0 -> M1 and d1 : M1 -> M0 with d1 d0 = d0 d1 = potential * Id.
// Both maps have degree potential_degree / 2; potential_degree is kept
// explicitly because a closed object has potential 0.
struct MatrixFactorization {
  BaseRing base;
  GradedFreeModule m0, m1;
  Matrix d0, d1;
  Poly potential;
  int potential_degree = 0;

  std::size_t rank0() const { return m0.rank(); }
  std::size_t rank1() const { return m1.rank(); }
};

bool operator==(const MatrixFactorization& a, const MatrixFactorization& b);

// One Koszul row (a; b). Degrees are stored because either entry may be zero.
struct KoszulRow {
  Poly a, b;
  int deg_a = 0, deg_b = 0;
};

KoszulRow make_row(const Poly& a, const Poly& b, int deg_a, int deg_b);

struct KoszulMF {
  BaseRing base;
  std::vector<KoszulRow> rows;
  int shift = 0;
  int z2 = 0;
  int potential_degree = 0;

  Poly potential() const;
};

// Rank-1 object R -> 0 -> R: the unit for the tensor product.
MatrixFactorization unit_object(const BaseRing& base, int potential_degree);
MatrixFactorization koszul_expand(const KoszulMF& k);
MatrixFactorization tensor(const MatrixFactorization& x, const MatrixFactorization& y);
MatrixFactorization translate(const MatrixFactorization& x);
MatrixFactorization grade_shift(const MatrixFactorization& x, int n);

struct Violation {
  std::string where;
  int row = -1;
  int col = -1;
  std::string detail;
};

std::vector<Violation> validate(const MatrixFactorization& x);

// (z2 index, generator shift) -> multiplicity.
std::map<std::pair<int, int>, int> graded_ranks(const MatrixFactorization& x);

nlohmann::json to_json(const MatrixFactorization& x);
nlohmann::json to_json(const KoszulMF& k);
std::string to_text(const MatrixFactorization& x);
std::string to_text(const KoszulMF& k);

}  // namespace moymf
