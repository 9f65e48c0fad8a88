#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moymf/errors.hpp"

namespace moymf {

using VarId = std::uint32_t;
using Rational = mpq_class;

struct GradedVar {
  std::string name;
  int degree;
};

// Variables are interned for the whole process: a name always resolves to the
// same id, and re-registering it with another degree throws IncompatibleBases.
VarId intern_var(std::string_view name, int degree);
std::optional<VarId> lookup_var(std::string_view name);
const GradedVar& var_info(VarId v);
inline const std::string& var_name(VarId v) { return var_info(v).name; }
inline int var_degree(VarId v) { return var_info(v).degree; }

// Sorted (variable, exponent) list with its weighted degree cached.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(VarId v, int exp = 1);

  int degree() const { return degree_; }
  bool is_one() const { return powers_.empty(); }
  int exponent(VarId v) const;
  const std::vector<std::pair<VarId, int>>& powers() const { return powers_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial without(VarId v) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.powers_ == b.powers_; }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.powers_ < b.powers_;
  }

  std::string str() const;

 private:
  std::vector<std::pair<VarId, int>> powers_;
  int degree_ = 0;
};

// Graded lex with variables compared by name; used for printing and leading terms.
bool name_order_less(const Monomial& a, const Monomial& b);

class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(long c);  // NOLINT: constants convert implicitly
  Poly(const Rational& c);  // NOLINT
  static Poly var(VarId v);
  static Poly var(std::string_view name, int degree) { return var(intern_var(name, degree)); }
  static Poly term(const Monomial& m, const Rational& c);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  // Degree of a nonzero homogeneous polynomial; nullopt for zero or mixed degrees.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const;
  int max_degree() const;
  std::map<int, Poly> homogeneous_components() const;
  Poly component(int degree) const;

  std::vector<VarId> variables() const;
  bool contains(VarId v) const;
  int degree_in(VarId v) const;
  Poly derivative(VarId v) const;
  Poly coefficient_of_power(VarId v, int e) const;  // coefficient of v^e, as a polynomial free of v

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const Rational& c) const;
  Poly pow(unsigned e) const;
  void add_term(const Monomial& m, const Rational& c);

  std::string str() const;

 private:
  Terms terms_;
};

using Substitution = std::map<VarId, Poly>;

// Simultaneous substitution. An image of a different degree than its variable
// throws DegreeMismatch; the zero polynomial is accepted for any variable.
Poly substitute(const Poly& p, const Substitution& sigma);

// (f - f[x->y]) / (x - y), computed monomial by monomial.
Poly divided_difference(const Poly& f, VarId x, VarId y);

std::string rational_str(const Rational& c);

}  // namespace moymf
