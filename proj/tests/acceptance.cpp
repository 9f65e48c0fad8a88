// One line per acceptance criterion. Arithmetic is exact: every comparison
// below is an equality, i.e. the tolerance is zero.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "moymf/analysis.hpp"
#include "oracles.hpp"

using namespace moymf;

namespace {

constexpr int kTolerance = 0;  // exact identities only

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) out.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(budget_s) + " s");
  if (!out.ok) ++failures;
  std::printf("%s %2d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), secs, out.ok ? "" : ": ",
              out.note.c_str());
  std::fflush(stdout);
}

void relation(Outcome& out, const std::string& name, const std::vector<int>& params) {
  auto r = verify_relation(name, params);
  if (!r.pass) {
    std::string failed;
    for (auto& c : r.checks)
      if (!c.ok) failed += " [" + c.name + ": " + c.detail + "]";
    out.fail(r.reduction_log_ref + failed);
  }
}

Diagram load(const std::string& text) { return parse_diagram(text); }

std::string tag(const std::vector<int>& v) {
  std::ostringstream os;
  for (int x : v) os << x << ",";
  return os.str();
}

}  // namespace

int main() {
  static_assert(kTolerance == 0);

  criterion(1, "circle euler characteristic = q-binomial, 1 <= i <= n <= 5", 10, [](Outcome& out) {
    for (int n = 1; n <= 5; ++n)
      for (int i = 1; i <= n; ++i) {
        auto chi = euler_characteristic(evaluate_diagram(load(shapes::circle(i, n))).homology);
        out.expect(chi == qbinomial(n, i) && chi == oracle::gauss(n, i), tag({n, i}) + " got " + chi.str());
      }
  });

  criterion(2, "jacobi quotient series = grassmannian series, r <= 2, n <= 5", 30, [](Outcome& out) {
    for (int n = 1; n <= 5; ++n)
      for (int r = 1; r <= std::min(2, n); ++r) {
        auto a = make_alphabet(r, "jac");
        Poly f = power_sum(n, a);
        std::vector<Poly> partials;
        for (auto v : a.vars) partials.push_back(f.derivative(v));
        QuotientRing ring(a.vars, partials, 2 * r * (n - r) + 2 * r + 2);
        auto s = ring.dimension_series(2 * r * (n - r) + 2 * r);
        out.expect(s == jacobi_series(n, r) && s == oracle::grassmannian(n, r), tag({n, r}) + " got " + s.str());
        out.expect(s.at_one() == oracle::gauss(n, r).at_one(), tag({n, r}) + " total dimension");
      }
  });

  criterion(3, "two glued lines reduce to one line, i <= 2, n <= 4", 10, [](Outcome& out) {
    for (int n = 1; n <= 4; ++n)
      for (int i = 1; i <= std::min(2, n); ++i) relation(out, "line_contract", {i, n});
  });

  criterion(4, "bubble series = multiplicity * line series", 60, [](Outcome& out) {
    for (auto p : std::vector<std::vector<int>>{{1, 1, 2, 3}, {1, 1, 2, 4}, {1, 2, 3, 4}, {2, 1, 3, 4}})
      relation(out, "bubble", p);
  });

  criterion(5, "counter-bubble multiplicity = [n-i1 choose i2]", 60, [](Outcome& out) {
    for (auto p : std::vector<std::vector<int>>{{1, 1, 3}, {1, 1, 4}, {2, 1, 4}}) {
      relation(out, "counter_bubble", p);
      auto cb = euler_characteristic(evaluate_boundary_fiber(load(shapes::counter_bubble(p[0], p[1], p[2]))).homology);
      auto line = euler_characteristic(evaluate_boundary_fiber(load(shapes::line(p[0], p[2]))).homology);
      auto factor = divide_exact(cb, line);
      out.expect(factor == qbinomial(p[2] - p[0], p[1]) && factor == oracle::gauss(p[2] - p[0], p[1]),
                 tag(p) + " factor " + factor.str());
    }
  });

  criterion(6, "associativity of merges and splits, (1,1,1), n in {3,4}", 60, [](Outcome& out) {
    for (int n : {3, 4}) {
      relation(out, "assoc_merge", {1, 1, 1, n});
      relation(out, "assoc_split", {1, 1, 1, n});
    }
  });

  criterion(7, "square relations at j = 2, n in {3,4}", 120, [](Outcome& out) {
    for (int n : {3, 4}) {
      relation(out, "square_j", {2, n});
      relation(out, "square_wide", {2, n});
    }
  });

  criterion(8, "q-identity for 1 <= j2 < j1 <= 8", 1, [](Outcome& out) {
    for (int j1 = 2; j1 <= 8; ++j1)
      for (int j2 = 1; j2 < j1; ++j2) {
        relation(out, "cor_square", {j1, j2});
        auto lhs = oracle::qint(j1 - 1) * oracle::gauss(j1 - 1, j2 - 1) - oracle::qint(j2 - 1) * oracle::gauss(j1, j2);
        out.expect(lhs == oracle::gauss(j1 - 1, j2), tag({j1, j2}) + " oracle");
      }
  });

  criterion(9, "property suites on random corpora", 300, [](Outcome& out) {
    std::mt19937_64 rng(9001);
    std::vector<Diagram> corpus;
    for (int k = 0; k < 50; ++k) corpus.push_back(random_diagram(rng, 2 + k % 3, 3, 3, false));

    // (a) validate on everything compiled or reduced; (b) potentials along reductions
    int checked = 0;
    for (auto& d : corpus) {
      auto c = compile(d);
      auto x = koszul_expand(c.mf);
      out.expect(validate(x).empty(), "(a) compiled object fails validation:\n" + render(d));
      auto red = reduce_open(c.mf, c.internal_vars());
      for (auto& e : red.log) out.expect(e.potential_ok, "(b) step " + e.op + " changed the potential");
      if (!red.contractible) {
        out.expect(red.mf.base->equal(red.mf.potential(), boundary_potential(d)), "(b) reduced potential");
        out.expect(validate(koszul_expand(red.mf)).empty(), "(a) reduced object fails validation:\n" + render(d));
      }
      ++checked;
    }
    out.expect(checked == 50, "(a) corpus size");

    // (c) tensor commutativity and associativity at the level of graded ranks
    std::vector<MatrixFactorization> small;
    for (int k = 0; k < 60; ++k) {
      auto d = random_diagram(rng, 2 + k % 3, 3, 1, false);
      small.push_back(koszul_expand(compile(d, "t" + std::to_string(k)).mf));
    }
    int pairs = 0;
    for (int k = 0; k < 60 && pairs < 20; ++k)
      for (int m = k + 1; m < 60 && pairs < 20; ++m) {
        if (small[k].potential_degree != small[m].potential_degree) continue;
        auto a = tensor(small[k], small[m]), b = tensor(small[m], small[k]);
        out.expect(graded_ranks(a) == graded_ranks(b), "(c) commutativity");
        out.expect(a.potential == b.potential, "(c) potential of x*y");
        ++pairs;
      }
    out.expect(pairs == 20, "(c) fewer than 20 pairs of matching level");
    int triples = 0;
    for (int k = 0; k + 2 < 60 && triples < 20; ++k) {
      std::vector<int> same;
      for (int m = k; m < 60 && same.size() < 3; ++m)
        if (small[m].potential_degree == small[k].potential_degree) same.push_back(m);
      if (same.size() < 3) continue;
      auto &x = small[same[0]], &y = small[same[1]], &z = small[same[2]];
      auto l = tensor(tensor(x, y), z), r = tensor(x, tensor(y, z));
      out.expect(graded_ranks(l) == graded_ranks(r), "(c) associativity");
      out.expect(l.potential == r.potential, "(c) potential of (x*y)*z");
      ++triples;
    }
    out.expect(triples == 20, "(c) fewer than 20 triples of matching level");

    // (d) translation squares to the identity, shifts add
    for (auto& d : corpus) {
      auto x = koszul_expand(compile(d).mf);
      out.expect(translate(translate(x)) == x, "(d) translation twice");
      out.expect(grade_shift(grade_shift(x, 2), -5) == grade_shift(x, -3), "(d) shifts add");
    }

    // (e) euler characteristic under randomized exclusion order
    int closed = 0;
    for (int k = 0; closed < 10; ++k) {
      auto d = random_diagram(rng, 3 + k % 2, 2, 4, true);
      if (d.vertices.empty()) continue;
      auto base = euler_characteristic(evaluate_diagram(d).homology);
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        ReduceOptions opt;
        opt.seed = seed * 7919 + static_cast<std::uint64_t>(k);
        auto chi = euler_characteristic(evaluate_diagram(d, opt).homology);
        out.expect(chi == base, "(e) order dependence:\n" + render(d));
      }
      ++closed;
    }
  });

  criterion(10, "negative controls", 10, [](Outcome& out) {
    auto x = koszul_expand(compile(load(shapes::bubble(1, 1, 3))).mf);
    out.expect(validate(x).empty(), "clean object flagged");
    auto bad = x;
    bad.d0[1][2] += bad.d0[1][2].is_zero() ? Poly(1) : bad.d0[1][2];
    out.expect(!validate(bad).empty(), "corrupted entry not caught");
    VarId a = intern_var("neg_a", 2), b = intern_var("neg_b", 2);
    QuotientRing ring({a, b});
    out.expect(regularity_heuristic(ring, {Poly::var(a), Poly::var(a)}, 12) == Regularity::unverified,
               "repeated element reported regular");
    out.expect(regularity_heuristic(ring, {Poly::var(a) * Poly::var(b), Poly::var(a) * Poly::var(a)}, 12) ==
                   Regularity::unverified,
               "zero divisor reported regular");
    out.expect(regularity_heuristic(ring, {Poly::var(a), Poly::var(b)}, 12) == Regularity::verified,
               "regular pair rejected");
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
