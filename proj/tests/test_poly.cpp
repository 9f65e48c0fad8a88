#include <cstdlib>
#include <random>

#include "doctest.h"
#include "moymf/linalg.hpp"
#include "moymf/poly.hpp"
#include "moymf/quotient.hpp"
#include "oracles.hpp"

using namespace moymf;

namespace {
Poly X() { return Poly::var("px", 2); }
Poly Y() { return Poly::var("py", 2); }
Poly Z() { return Poly::var("pz", 4); }
}  // namespace

TEST_CASE("variables are interned once") {
  VarId a = intern_var("px", 2);
  CHECK(intern_var("px", 2) == a);
  CHECK(lookup_var("px") == a);
  CHECK(var_degree(a) == 2);
  CHECK_FALSE(lookup_var("never_made").has_value());
  CHECK_THROWS_AS(intern_var("px", 4), IncompatibleBases);
}

TEST_CASE("arithmetic and printing") {
  Poly p = X() * X() + X() * Y() + Y() * Y();
  CHECK(p.str() == "px^2 + px*py + py^2");
  CHECK((X() - Y()) * p == X().pow(3) - Y().pow(3));
  CHECK(p.homogeneous_degree() == 4);
  CHECK((p + Z()).is_homogeneous());
  CHECK_FALSE((p + X()).is_homogeneous());
  CHECK(Poly().str() == "0");
  CHECK(Poly(Rational(-3, 2)).str() == "-3/2");
  CHECK((X() - X()).is_zero());
  CHECK(p.derivative(intern_var("px", 2)) == X().scaled(2) + Y());
  CHECK(p.degree_in(intern_var("py", 2)) == 2);
  CHECK(p.coefficient_of_power(intern_var("py", 2), 1) == X());
  auto parts = (p + X() + Poly(3)).homogeneous_components();
  CHECK(parts.size() == 3);
  CHECK(parts.at(0) == Poly(3));
}

TEST_CASE("substitution respects degrees") {
  VarId x = intern_var("px", 2), z = intern_var("pz", 4);
  Poly p = Z() + X() * X();
  CHECK(substitute(p, {{z, X() * Y()}}) == X() * Y() + X() * X());
  CHECK(substitute(p, {{z, Poly()}}) == X() * X());
  CHECK_THROWS_AS(substitute(p, {{x, Z()}}), DegreeMismatch);
  CHECK(substitute(p, {{x, Y()}, {z, Poly()}}) == Y() * Y());
}

TEST_CASE("divided differences satisfy the defining identity") {
  VarId x = intern_var("px", 2), y = intern_var("py", 2);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    Poly f;
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; a + b <= 4; ++b)
        if ((4 - a - b) % 2 == 0) f += (X().pow(a) * Y().pow(b) * Z().pow((4 - a - b) / 2)).scaled(coef(rng));
    CHECK((X() - Y()) * divided_difference(f, x, y) == f - substitute(f, {{x, Y()}}));
  }
  CHECK(divided_difference(X().pow(3), x, x) == X().pow(2).scaled(3));
}

TEST_CASE("sparse echelon ranks") {
  std::vector<SparseRow> rows = {{{0, 1}, {2, 1}}, {{1, 1}, {2, -1}}, {{0, 1}, {1, 1}}};
  CHECK(rank_of(rows, 3) == 2);
  rows.push_back({{2, 5}});
  CHECK(rank_of(rows, 3) == 3);
  Echelon e(3);
  CHECK(e.insert({{0, 2}, {1, 2}}));
  CHECK_FALSE(e.insert({{0, 1}, {1, 1}}));
  CHECK(e.reduce({{0, 3}, {1, 4}}) == SparseRow{{1, 1}});
}

TEST_CASE("polynomial ring series match a direct count") {
  std::vector<VarId> vars = {intern_var("px", 2), intern_var("py", 2), intern_var("pz", 4)};
  QuotientRing r(vars);
  // coefficient of q^d: pairs (a, b, c) with 2a + 2b + 4c = d
  QLaurent expect;
  for (int d = 0; d <= 12; d += 2) {
    int n = 0;
    for (int c = 0; 4 * c <= d; ++c) n += (d - 4 * c) / 2 + 1;
    expect.add(d, n);
  }
  CHECK(r.dimension_series(12) == expect);
  CHECK(count_monomials(vars, 12) == expect);
  CHECK_FALSE(r.top_degree(20).has_value());
}

TEST_CASE("quotients") {
  VarId x = intern_var("px", 2), y = intern_var("py", 2);
  QuotientRing r({x}, {X() * X()});
  CHECK(r.dimension_series(10) == QLaurent(1) + QLaurent::monomial(2));
  CHECK(r.top_degree(20) == 2);
  CHECK(r.is_zero(X().pow(5)));

  QuotientRing s({x, y}, {X() * X() - Y() * Y(), X() * Y()});
  CHECK(s.equal(X() * X(), Y() * Y()));
  CHECK(s.normal_form(s.normal_form(X() * X() + X())) == s.normal_form(X() * X() + X()));
  CHECK(s.dimension_series(10) == QLaurent(1) + QLaurent::monomial(2, 2) + QLaurent::monomial(4));
  CHECK(s.top_degree(20) == 4);
  CHECK(s.dimension(2) == 2);
  CHECK(s.standard_monomials(4).size() == 1);

  CHECK_THROWS_AS(QuotientRing({x}, {X() + X() * X()}), DegreeMismatch);
  QuotientRing tiny({x}, {}, 6);
  CHECK_THROWS_AS(tiny.dimension(8), CutoffExceeded);
}

TEST_CASE("eliminating a variable") {
  VarId x = intern_var("px", 2), y = intern_var("py", 2);
  QuotientRing r({x, y}, {X() * X() - X() * Y()});
  auto e = r.eliminated({{y, X()}});
  CHECK(e.vars() == std::vector<VarId>{x});
  CHECK(e.is_zero(X() * X() - X() * X()));
  CHECK(e.dimension_series(6) == QLaurent(1) + QLaurent::monomial(2) + QLaurent::monomial(4) + QLaurent::monomial(6));
}

TEST_CASE("cutoff from the environment") {
  setenv("MOYMF_CUTOFF", "40", 1);
  CHECK(default_cutoff() == 40);
  setenv("MOYMF_CUTOFF", "junk", 1);
  CHECK(default_cutoff() == 64);
  unsetenv("MOYMF_CUTOFF");
  CHECK(default_cutoff() == 64);
}
