#include "doctest.h"
#include "moymf/mf.hpp"
#include "moymf/reduce.hpp"

using namespace moymf;

namespace {

VarId vx() { return intern_var("mx", 2); }
VarId vy() { return intern_var("my", 2); }
Poly X() { return Poly::var(vx()); }
Poly Y() { return Poly::var(vy()); }

KoszulMF koszul(std::vector<std::pair<Poly, Poly>> rows, int potential_degree) {
  KoszulMF k;
  k.base = polynomial_base({vx(), vy()});
  k.potential_degree = potential_degree;
  for (auto& [a, b] : rows) {
    int da = a.is_zero() ? potential_degree - *b.homogeneous_degree() : *a.homogeneous_degree();
    int db = b.is_zero() ? potential_degree - da : *b.homogeneous_degree();
    k.rows.push_back(make_row(a, b, da, db));
  }
  return k;
}

}  // namespace

TEST_CASE("rank one factor") {
  const int n = 4;
  KoszulMF k;
  k.base = polynomial_base({vx()});
  k.potential_degree = 2 * (n + 1);
  k.rows.push_back(make_row(X(), X().pow(n), 2, 2 * n));
  auto m = koszul_expand(k);
  CHECK(m.d0 == Matrix{{X()}});
  CHECK(m.d1 == Matrix{{X().pow(n)}});
  CHECK(m.potential == X().pow(n + 1));
  CHECK(m.m0.shifts == std::vector<int>{0});
  CHECK(m.m1.shifts == std::vector<int>{n - 1});
  CHECK(validate(m).empty());
}

TEST_CASE("two rows use the tensor block layout") {
  Poly a1 = X(), b1 = Y() * Y(), a2 = Y(), b2 = X() * Y();
  auto m = koszul_expand(koszul({{a1, b1}, {a2, b2}}, 6));
  CHECK(m.d0 == Matrix{{a1, -b2}, {a2, b1}});
  CHECK(m.d1 == Matrix{{b1, b2}, {-a2, a1}});
  CHECK(m.potential == a1 * b1 + a2 * b2);
  CHECK(validate(m).empty());
  CHECK(m.rank0() == 2);
  CHECK(m.rank1() == 2);
}

TEST_CASE("ranks and validation of larger expansions") {
  auto k = koszul({{X(), Y() * Y()}, {Y(), X() * X()}, {X() + Y(), X() * Y()}, {Poly(), X() * Y()}}, 6);
  auto m = koszul_expand(k);
  CHECK(m.rank0() == 8);
  CHECK(m.rank1() == 8);
  CHECK(validate(m).empty());
  CHECK(m.potential == k.potential());
}

TEST_CASE("zero potential") {
  auto m = koszul_expand(koszul({{Poly(), Y() * Y()}}, 4));
  CHECK(m.potential.is_zero());
  CHECK(validate(m).empty());
}

TEST_CASE("a corrupted entry is reported at its position") {
  auto m = koszul_expand(koszul({{X(), Y() * Y()}, {Y(), X() * X()}}, 6));
  m.d0[1][0] += Y();
  auto v = validate(m);
  REQUIRE_FALSE(v.empty());
  bool at_entry = false;
  for (auto& x : v) at_entry = at_entry || (x.row == 1 && x.col == 0);
  CHECK(at_entry);

  auto n = koszul_expand(koszul({{X(), Y() * Y()}}, 6));
  n.d1[0][0] = X() * Y();  // still homogeneous of the right degree
  auto w = validate(n);
  CHECK(w.size() >= 1);
}

TEST_CASE("inhomogeneous rows are rejected") {
  CHECK_THROWS_AS(make_row(X() + X() * X(), Y(), 2, 2), InhomogeneousRow);
  CHECK_THROWS_AS(make_row(X(), Y(), 2, 4), InhomogeneousRow);
}

TEST_CASE("unit object and tensor") {
  auto x = koszul_expand(koszul({{X(), Y() * Y()}, {Y(), X() * X()}}, 6));
  auto u = unit_object(x.base, 6);
  auto xu = tensor(x, u);
  CHECK(graded_ranks(xu) == graded_ranks(x));
  CHECK(xu.potential == x.potential);
  CHECK(validate(xu).empty());

  auto y = koszul_expand(koszul({{X() + Y(), X() * Y()}}, 6));
  auto xy = tensor(x, y), yx = tensor(y, x);
  CHECK(xy.rank0() == x.rank0() * y.rank0() + x.rank1() * y.rank1());
  CHECK(xy.potential == x.potential + y.potential);
  CHECK(graded_ranks(xy) == graded_ranks(yx));
  CHECK(validate(xy).empty());
}

TEST_CASE("translation and shifts") {
  auto x = koszul_expand(koszul({{X(), Y() * Y()}, {Y(), X() * X()}}, 6));
  CHECK(translate(translate(x)) == x);
  CHECK(translate(x).potential == x.potential);
  CHECK(validate(translate(x)).empty());
  CHECK(grade_shift(x, 0) == x);
  CHECK(grade_shift(grade_shift(x, 3), -5) == grade_shift(x, -2));
  auto y = koszul_expand(koszul({{X() + Y(), X() * Y()}}, 6));
  CHECK(tensor(grade_shift(x, 2), y) == grade_shift(tensor(x, y), 2));
}

TEST_CASE("translation of a rank one factor swaps the row") {
  auto k = koszul({{X(), Y() * Y() * X()}}, 8);
  auto swapped = swap_row(k, 0);
  CHECK(swapped.rows[0].a == -k.rows[0].b);
  CHECK(swapped.rows[0].b == -k.rows[0].a);
  CHECK(swapped.z2 == 1);
  CHECK(koszul_expand(swapped) == koszul_expand(k));
}

TEST_CASE("serialization") {
  auto k = koszul({{X(), Y() * Y()}}, 6);
  auto j = to_json(koszul_expand(k));
  CHECK(j.contains("d0"));
  CHECK(j["potential"] == k.potential().str());
  CHECK(to_text(k).find("row 1:") != std::string::npos);
  CHECK(to_json(k).dump() == to_json(k).dump());
}
