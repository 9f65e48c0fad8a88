#pragma once

#include <string>
#include <vector>

#include "moymf/poly.hpp"

namespace moymf {

// The elementary symmetric variables x_1..x_i of one boundary, deg x_j = 2j.
struct Alphabet {
  int color = 0;
  std::string label;
  std::vector<VarId> vars;

  // x_j, with x_0 = 1 and indices past the color giving 0.
  Poly x(int j) const;
  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.vars == b.vars; }
};

// Variables are named "x<j>_<label>".
Alphabet make_alphabet(int color, const std::string& label);
std::string alphabet_var_name(int j, const std::string& label);

// t_1^(n+1) + ... + t_i^(n+1) written in the elementary symmetric values e_1..e_i
// supplied as polynomials (Newton's identities, e_j = 0 for j > i).
Poly power_sum(int i, int n, const std::vector<Poly>& elementary);
Poly power_sum(int n, const Alphabet& a);

// Degree 2j part of (1 + sum x_{.,A})(1 + sum x_{.,B}).
Poly product_term(int j, const Alphabet& a, const Alphabet& b);
std::vector<Poly> product_alphabet(const Alphabet& a, const Alphabet& b);

// Row entries of the line, merge and split factorizations. Each is the divided
// difference of F in slot j with the other slots filled from the two sides.
//   line:  sum_j line_entry_j  * (x_{j,out} - x_{j,in})  = F(out) - F(in)
//   merge: sum_j merge_entry_j * (x_{j,C} - X_j(A,B))    = F(C) - F(A) - F(B)
//   split: sum_j split_entry_j * (X_j(A,B) - x_{j,C})    = F(A) + F(B) - F(C)
Poly line_entry(int j, int n, const Alphabet& out, const Alphabet& in);
Poly merge_entry(int j, int n, const Alphabet& a, const Alphabet& b, const Alphabet& c);
Poly split_entry(int j, int n, const Alphabet& a, const Alphabet& b, const Alphabet& c);

}  // namespace moymf
