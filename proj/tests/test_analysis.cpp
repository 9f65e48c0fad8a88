#include <random>

#include "doctest.h"
#include "moymf/analysis.hpp"
#include "oracles.hpp"

using namespace moymf;

namespace {

Diagram load(const std::string& text) { return parse_diagram(text); }

Diagram theta(int i1, int i2, int n) { return close_up(load(shapes::bubble(i1, i2, n)), {{"out", "in"}}); }

QLaurent chi(const Diagram& d, const ReduceOptions& opt = {}) {
  return euler_characteristic(evaluate_diagram(d, opt).homology);
}

}  // namespace

TEST_CASE("circle homology") {
  auto h = evaluate_diagram(load(shapes::circle(1, 2))).homology;
  CHECK(h.dims[0].empty());
  CHECK(h.dims[1] == std::map<int, std::int64_t>{{-1, 1}, {1, 1}});
  CHECK(euler_characteristic(h).str() == "q^-1 + q");

  auto h2 = evaluate_diagram(load(shapes::circle(2, 3))).homology;
  CHECK(h2.dims[1].empty());
  CHECK(h2.dims[0] == std::map<int, std::int64_t>{{-2, 1}, {0, 1}, {2, 1}});
}

TEST_CASE("zero object and empty diagram") {
  MatrixFactorization zero;
  zero.base = polynomial_base({});
  zero.potential_degree = 6;
  auto h = homology(zero);
  CHECK(h.dims[0].empty());
  CHECK(h.dims[1].empty());
  CHECK(chi(load("level n 3\n")) == QLaurent(1));
}

TEST_CASE("circles give gaussian binomials") {
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i) {
      auto d = load(shapes::circle(i, n));
      CHECK(chi(d) == oracle::gauss(n, i));
      CHECK(moy_bracket(d) == oracle::gauss(n, i));
    }
}

TEST_CASE("theta") {
  QLaurent expect = oracle::qint(2) * oracle::gauss(3, 2);
  CHECK(expect.str() == "q^-3 + 2q^-1 + 2q + q^3");
  CHECK(chi(theta(1, 1, 3)) == expect);
  CHECK(moy_bracket(theta(1, 1, 3)) == expect);
  auto r = oracle_crosscheck(theta(1, 1, 3));
  CHECK(r.pass);
}

TEST_CASE("disjoint unions multiply") {
  auto a = load(shapes::circle(1, 3)), b = load(shapes::circle(2, 3));
  auto u = disjoint_union(a, b);
  CHECK(moy_bracket(u) == moy_bracket(a) * moy_bracket(b));
  CHECK(chi(u) == chi(a) * chi(b));
  auto t = disjoint_union(theta(1, 1, 3), a);
  CHECK(chi(t) == moy_bracket(t));
}

TEST_CASE("graph evaluation") {
  CHECK(moy_bracket(load(shapes::circle(1, 2))).str() == "q^-1 + q");
  for (int n = 3; n <= 4; ++n) {
    std::vector<Diagram> closed = {
        theta(1, 1, n), theta(1, 2, n), theta(2, 1, n),
        close_up(load(shapes::counter_bubble(1, 1, n)), {{"out", "in"}}),
        close_up(load(shapes::square_j(2, n)), {{"p1", "p3"}, {"p2", "p4"}}),
        close_up(load(shapes::square_wide(2, n)), {{"p3", "p1"}, {"p2", "p4"}}),
    };
    for (auto& d : closed) {
      QLaurent b;
      try {
        b = moy_bracket(d);
      } catch (const Irreducible&) {
        continue;
      }
      CHECK(b.is_palindromic());
      CHECK(chi(d) == b);
    }
  }
  auto open = load(shapes::line(1, 2));
  CHECK_THROWS_AS(moy_bracket(open), NotClosed);
}

TEST_CASE("relation reports") {
  auto b = verify_relation("bubble", {1, 1, 3});
  CHECK(b.pass);
  QLaurent mult;
  for (int j = 0; j <= 1; ++j) mult.add(-1 + 2 * j, p_coeff(j, 2, 1));
  CHECK(mult == oracle::qint(2));
  CHECK(b.lhs_series == b.rhs_series);
  auto j = b.to_json();
  for (auto key : {"relation", "params", "lhs_series", "rhs_series", "verdict", "reduction_log_ref"})
    CHECK(j.contains(key));
  CHECK(j["verdict"] == "PASS");

  CHECK(verify_relation("line_contract", {1, 2}).pass);
  auto c = verify_relation("cor_square", {3, 1});
  CHECK(c.pass);
  CHECK(c.lhs_series.str() == "q^-1 + q");
  CHECK(verify_relation("bubble", {1, 1, 2, 3}).pass);
  CHECK_THROWS_AS(verify_relation("bubble", {2, 2, 3}), IndexOutOfRange);
  CHECK_THROWS_AS(verify_relation("square_j", {1, 3}), IndexOutOfRange);
  CHECK_THROWS_AS(verify_relation("nonsense", {1}), Error);
  CHECK(relation_names().size() == 9);
}

TEST_CASE("euler characteristic ignores translation and follows shifts") {
  auto ev = evaluate_diagram(theta(1, 1, 3));
  auto mf = remove_contractible(koszul_expand(ev.reduction.mf));
  auto base = euler_characteristic(homology(mf));
  CHECK(euler_characteristic(homology(translate(mf))) == base);
  CHECK(euler_characteristic(homology(grade_shift(mf, 3))) == base.shifted(3));
  auto h = homology(mf), t = homology(translate(mf));
  CHECK(h.series(0) == t.series(1));
  CHECK(h.series(1) == t.series(0));
}

TEST_CASE("euler characteristic survives each reduction step") {
  auto c = compile(theta(1, 1, 3));
  auto expect = chi(theta(1, 1, 3));
  auto k = c.mf;
  std::vector<KoszulMF> variants = {scalar_twist(k, 0, 3), swap_row(k, 1), swap_row(swap_row(k, 2), 0)};
  for (std::size_t r = 0; r + 1 < k.rows.size(); ++r) {
    int gap = k.rows[r + 1].deg_a - k.rows[r].deg_a;
    if (gap == 0) variants.push_back(row_op(k, r, r + 1, Poly(2), Column::first));
  }
  for (auto& v : variants) CHECK(euler_characteristic(evaluate_closed(v).homology) == expect);
}

TEST_CASE("exclusion order does not matter") {
  std::vector<Diagram> closed = {theta(1, 1, 3), theta(1, 2, 4),
                                 close_up(load(shapes::counter_bubble(1, 1, 3)), {{"out", "in"}})};
  for (auto& d : closed) {
    auto base = evaluate_diagram(d).homology;
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      ReduceOptions opt;
      opt.seed = seed;
      auto h = evaluate_diagram(d, opt).homology;
      CHECK(h.dims[0] == base.dims[0]);
      CHECK(h.dims[1] == base.dims[1]);
    }
  }
}

TEST_CASE("random closed diagrams agree with graph evaluation") {
  std::mt19937_64 rng(77);
  int compared = 0;
  for (int k = 0; k < 40; ++k) {
    auto d = random_diagram(rng, 2 + k % 3, 2, 3, true);
    QLaurent b;
    try {
      b = moy_bracket(d);
    } catch (const Irreducible&) {
      continue;
    }
    CAPTURE(render(d));
    CHECK(chi(d) == b);
    ++compared;
  }
  CHECK(compared >= 10);
}

TEST_CASE("open or infinite inputs are rejected") {
  auto c = compile(load(shapes::line(1, 2)));
  CHECK_THROWS_AS(homology(koszul_expand(c.mf)), NotClosed);
  auto circle = compile(load(shapes::circle(1, 2)));
  auto raw = koszul_expand(circle.mf);  // over Q[x], not reduced
  CHECK_THROWS_AS(homology(raw, 20), CutoffExceeded);
}

TEST_CASE("colors above the level give vanishing euler characteristic") {
  DiagramOptions wide;
  wide.allow_large_colors = true;
  for (int n = 1; n <= 3; ++n)
    for (int i = n + 1; i <= n + 2; ++i) {
      CAPTURE(n);
      CAPTURE(i);
      auto d = parse_diagram(shapes::circle(i, n), wide);
      CHECK(euler_characteristic(evaluate_diagram(d).homology).is_zero());
    }
}
