#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "moymf/errors.hpp"

namespace moymf {

// Laurent polynomial in q with integer coefficients.
class QLaurent {
 public:
  using Coeff = std::int64_t;

  QLaurent() = default;
  QLaurent(Coeff c);  // NOLINT
  static QLaurent monomial(int exponent, Coeff c = 1);

  const std::map<int, Coeff>& coeffs() const { return coeffs_; }
  Coeff coeff(int e) const;
  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const;
  int max_exponent() const;
  Coeff at_one() const;

  QLaurent shifted(int k) const;
  QLaurent truncated(int max_exp) const;
  QLaurent mirrored() const;
  bool is_palindromic() const { return *this == mirrored(); }

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  QLaurent operator-() const;
  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

  void add(int e, Coeff c);

  // Ascending exponents: "q^-1 + q", "1 + 2q^2", "0".
  std::string str() const;

 private:
  std::map<int, Coeff> coeffs_;
};

// Exact quotient; throws NotDivisible when a remainder is left.
QLaurent divide_exact(const QLaurent& num, const QLaurent& den);

// Balanced Gaussian binomial, symmetric under q <-> q^-1; zero outside 0 <= i <= n.
QLaurent qbinomial(int n, int i);
// Balanced quantum integer q^(1-m) + ... + q^(m-1); [0] = 0, [-m] = -[m].
QLaurent qinteger(int m);
// Coefficient of q^(-n1*n2 + n2^2 + 2j) in qbinomial(n1, n2).
std::int64_t p_coeff(int j, int n1, int n2);

QLaurent poincare_polynomial_ring(const std::vector<int>& var_degrees, int cutoff);
QLaurent poincare_regular_quotient(const std::vector<int>& var_degrees, const std::vector<int>& gen_degrees,
                                   int cutoff);
// Graded dimension of the Grassmannian cohomology ring Gr(r, n).
QLaurent jacobi_series(int n, int r);

// First exponent where two series differ, if any.
std::string first_difference(const QLaurent& a, const QLaurent& b);

}  // namespace moymf
