#include <random>

#include "doctest.h"
#include "moymf/analysis.hpp"
#include "moymf/diagram.hpp"

using namespace moymf;

TEST_CASE("a single line") {
  auto d = parse_diagram("level n 2\nedge e1 color 2 from boundary:b1 to boundary:b2\n");
  CHECK(d.level == 2);
  REQUIRE(d.edges.size() == 1);
  CHECK(d.edges[0].color == 2);
  CHECK(d.edges[0].tail == Endpoint{true, "b1"});
  CHECK(d.vertices.empty());
  auto ends = boundary_ends(d);
  CHECK(ends.size() == 2);
  CHECK_FALSE(is_closed(d));
}

TEST_CASE("comments, blank lines and the short level form") {
  auto d = parse_diagram("# a circle\n\nlevel 3   # trailing\nedge e1 color 1 from boundary:a to boundary:a\n");
  CHECK(d.level == 3);
  CHECK(is_closed(d));
}

TEST_CASE("color constraints at vertices") {
  std::string ok =
      "level n 3\n"
      "edge a color 1 from boundary:p to v\n"
      "edge b color 1 from boundary:q to v\n"
      "edge c color 2 from v to boundary:r\n"
      "vertex v merge in a b out c\n";
  CHECK_NOTHROW(parse_diagram(ok));
  std::string bad = ok;
  bad.replace(bad.find("edge c color 2"), 14, "edge c color 3");
  try {
    parse_diagram(bad);
    FAIL("accepted a merge 1 + 1 -> 3");
  } catch (const ColorConstraintViolation& e) {
    CHECK(std::string(e.what()).find("v") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_diagram("level n 2\nedge e1 color 3 from boundary:a to boundary:b\n"), ColorConstraintViolation);
  DiagramOptions wide;
  wide.allow_large_colors = true;
  CHECK_NOTHROW(parse_diagram("level n 2\nedge e1 color 3 from boundary:a to boundary:b\n", wide));
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_diagram("level n 2\nedge e1 colour 1 from boundary:a to boundary:b\n");
    FAIL("accepted a misspelt keyword");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 2);
    CHECK(e.column > 1);
  }
  CHECK_THROWS_AS(parse_diagram("level n 2\nwire e1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_diagram("level n x\n"), SyntaxError);
  CHECK_THROWS_AS(parse_diagram("edge e1 color 1 from boundary:a to boundary:b\n"), Error);
  CHECK_THROWS_AS(parse_diagram("level n 2\nedge e1 color 1 from nowhere to boundary:b\n"), Error);
  CHECK_THROWS_AS(parse_diagram("level n 2\nedge e1 color 1 from boundary:a to boundary:b\n"
                                "edge e1 color 1 from boundary:c to boundary:d\n"),
                  Error);
}

TEST_CASE("render round trip") {
  for (auto text : {shapes::bubble(1, 2, 4), shapes::square_wide(2, 4), shapes::circle(2, 3),
                    shapes::counter_bubble(1, 1, 3)}) {
    auto d = parse_diagram(text);
    CHECK(parse_diagram(render(d)) == d);
  }
  std::mt19937_64 rng(19);
  for (int k = 0; k < 30; ++k) {
    auto d = random_diagram(rng, 4, 3, 4, k % 2 == 0);
    CHECK(parse_diagram(render(d)) == d);
  }
}

TEST_CASE("compiled line") {
  auto c = compile(parse_diagram(shapes::line(1, 2)));
  REQUIRE(c.mf.rows.size() == 1);
  Poly x = c.outputs[0].x(1), y = c.inputs[0].x(1);
  CHECK(c.mf.rows[0].a == x * x + x * y + y * y);
  CHECK(c.mf.rows[0].b == x - y);
  CHECK(c.mf.potential() == x.pow(3) - y.pow(3));
  CHECK(c.internal.empty());
}

TEST_CASE("compiled bubble") {
  const int n = 3;
  auto d = parse_diagram(shapes::bubble(1, 1, n));
  auto c = compile(d);
  CHECK(c.mf.rows.size() == 4);
  CHECK(c.mf.shift == -1);
  CHECK(c.mf.potential() == power_sum(n, c.outputs[0]) - power_sum(n, c.inputs[0]));
  CHECK(c.internal.size() == 2);
  CHECK(c.internal_vars().size() == 2);
  CHECK(compile(d).mf.potential() == c.mf.potential());
}

TEST_CASE("boundary potentials") {
  CHECK(boundary_potential(parse_diagram(shapes::circle(2, 3))).is_zero());
  CHECK(compile(parse_diagram(shapes::circle(2, 3))).mf.potential().is_zero());
  auto merge = parse_diagram(
      "level n 4\n"
      "edge a color 1 from boundary:p to v\n"
      "edge b color 2 from boundary:q to v\n"
      "edge c color 3 from v to boundary:r\n"
      "vertex v merge in a b out c\n");
  auto c = compile(merge);
  Poly expect = power_sum(4, make_alphabet(3, "r")) - power_sum(4, make_alphabet(1, "p")) -
                power_sum(4, make_alphabet(2, "q"));
  CHECK(boundary_potential(merge) == expect);
  CHECK(c.mf.potential() == expect);
}

TEST_CASE("potential depends only on the boundary") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 60; ++k) {
    int n = 2 + k % 3;
    auto d = random_diagram(rng, n, 3, 4, false);
    auto c = compile(d);
    CHECK(c.mf.potential() == boundary_potential(d));
  }
}

TEST_CASE("disjoint union compiles to the tensor product") {
  auto a = parse_diagram(shapes::bubble(1, 1, 3));
  auto b = parse_diagram("level n 3\nedge e1 color 2 from boundary:s to boundary:t\n");
  auto u = disjoint_union(a, b);
  auto joint = koszul_expand(compile(u).mf);
  auto apart = tensor(koszul_expand(compile(a).mf), koszul_expand(compile(b, "second").mf));
  CHECK(graded_ranks(joint) == graded_ranks(apart));
  CHECK(joint.potential == boundary_potential(u));
  CHECK(joint.potential.size() == apart.potential.size());
  auto other = tensor(koszul_expand(compile(b, "second").mf), koszul_expand(compile(a).mf));
  CHECK(graded_ranks(other) == graded_ranks(joint));
}

TEST_CASE("compilation is deterministic") {
  auto text = shapes::square_j(2, 4);
  CHECK(to_json(compile(parse_diagram(text)).mf).dump() == to_json(compile(parse_diagram(text)).mf).dump());
}
