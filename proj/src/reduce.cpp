#include "moymf/reduce.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace moymf {

nlohmann::json to_json(const ReductionLog& log) {
  auto j = nlohmann::json::array();
  for (auto& e : log) j.push_back({{"op", e.op}, {"params", e.params}, {"potential_ok", e.potential_ok}});
  return j;
}

namespace {

bool is_unit(const Poly& p) { return !p.is_zero() && p.is_constant(); }

std::vector<VarId> sorted_by_name(std::vector<VarId> vs) {
  std::sort(vs.begin(), vs.end(), [](VarId a, VarId b) { return var_name(a) < var_name(b); });
  return vs;
}

std::vector<std::string> names(const std::vector<VarId>& vs) {
  std::vector<std::string> out;
  for (auto v : sorted_by_name(vs)) out.push_back(var_name(v));
  return out;
}

std::vector<VarId> external_vars(const QuotientRing& base, const std::vector<VarId>& internal) {
  std::vector<VarId> ext;
  for (auto v : base.vars())
    if (std::find(internal.begin(), internal.end(), v) == internal.end()) ext.push_back(v);
  return ext;
}

void require_external_potential(const KoszulMF& k, const std::vector<VarId>& internal) {
  Poly w = k.base->normal_form(k.potential());
  for (auto v : w.variables())
    if (std::find(internal.begin(), internal.end(), v) != internal.end())
      throw ConditionUnmet("the potential involves internal variable " + var_name(v));
}

std::optional<std::pair<VarId, Rational>> linear_in(const Poly& b, const std::vector<VarId>& internal) {
  for (auto y : sorted_by_name(internal)) {
    if (b.degree_in(y) != 1) continue;
    Poly c = b.coefficient_of_power(y, 1);
    if (is_unit(c)) return std::make_pair(y, c.constant_term());
  }
  return std::nullopt;
}

KoszulMF substituted(const KoszulMF& k, const Substitution& sigma) {
  KoszulMF r = k;
  r.base = make_base(k.base->eliminated(sigma));
  for (auto& row : r.rows) {
    row.a = r.base->normal_form(substitute(row.a, sigma));
    row.b = r.base->normal_form(substitute(row.b, sigma));
  }
  return r;
}

bool potential_matches(const KoszulMF& k, const Poly& w) {
  Substitution zero;
  for (auto v : w.variables())
    if (!k.base->has_var(v)) zero[v] = Poly();
  return k.base->is_zero(k.potential() - substitute(w, zero));
}

}  // namespace

KoszulMF scalar_twist(const KoszulMF& k, std::size_t row, const Rational& c) {
  if (c == 0) throw ZeroScalar("scalar twist by 0");
  if (row >= k.rows.size()) throw IndexOutOfRange("row " + std::to_string(row));
  KoszulMF r = k;
  r.rows[row].a = r.rows[row].a.scaled(c);
  r.rows[row].b = r.rows[row].b.scaled(1 / c);
  return r;
}

KoszulMF row_op(const KoszulMF& k, std::size_t i, std::size_t j, const Poly& lambda, Column kind) {
  if (i >= k.rows.size() || j >= k.rows.size() || i == j) throw IndexOutOfRange("row_op needs two distinct rows");
  KoszulMF r = k;
  auto& ri = r.rows[i];
  auto& rj = r.rows[j];
  int want = kind == Column::first ? rj.deg_a - ri.deg_a : rj.deg_b - ri.deg_b;
  if (!lambda.is_zero() && lambda.homogeneous_degree() != want)
    throw DegreeMismatch("row_op multiplier must be homogeneous of degree " + std::to_string(want));
  if (kind == Column::first) {
    rj.a = rj.a + lambda * ri.a;
    ri.b = ri.b - lambda * rj.b;
  } else {
    rj.b = rj.b + lambda * ri.b;
    ri.a = ri.a - lambda * rj.a;
  }
  return r;
}

KoszulMF swap_row(const KoszulMF& k, std::size_t row) {
  if (row >= k.rows.size()) throw IndexOutOfRange("row " + std::to_string(row));
  KoszulMF r = k;
  auto& x = r.rows[row];
  r.shift += (x.deg_b - x.deg_a) / 2;
  r.z2 = (r.z2 + 1) % 2;
  x = {-x.b, -x.a, x.deg_b, x.deg_a};
  return r;
}

Regularity regularity_heuristic(const QuotientRing& base, const std::vector<Poly>& seq, int cutoff) {
  QLaurent pred = base.with_cutoff(std::max(cutoff, base.cutoff())).dimension_series(cutoff);
  for (auto& s : seq) {
    auto d = s.homogeneous_degree();
    if (!d) return Regularity::unverified;
    pred = (pred * (QLaurent(1) - QLaurent::monomial(*d))).truncated(cutoff);
  }
  QuotientRing q = base.with_generators(seq).with_cutoff(std::max(cutoff, base.cutoff()));
  return q.dimension_series(cutoff) == pred ? Regularity::verified : Regularity::unverified;
}

bool certify_complete_intersection(const std::vector<VarId>& vars, const std::vector<Poly>& seq) {
  if (seq.size() != vars.size()) return false;
  std::vector<int> vdeg, sdeg;
  int top = 0, window = 1;
  for (auto v : vars) {
    vdeg.push_back(var_degree(v));
    top -= var_degree(v);
    window = std::max(window, var_degree(v));
  }
  for (auto& s : seq) {
    auto d = s.homogeneous_degree();
    if (!d || *d == 0) return false;
    sdeg.push_back(*d);
    top += *d;
  }
  if (top < 0) return false;
  int limit = top + window;
  QLaurent pred = poincare_regular_quotient(vdeg, sdeg, limit);
  QuotientRing q(vars, seq, limit);
  for (int d = 0; d <= limit; ++d) {
    auto dim = q.dimension(d);
    if (dim != pred.coeff(d)) return false;
    if (d > top && dim != 0) return false;
  }
  return true;
}

KoszulMF replace_second_sequence(const KoszulMF& k, const std::vector<Poly>& target_b, bool force, int cutoff) {
  if (target_b.size() != k.rows.size()) throw IndexOutOfRange("target sequence length differs from row count");
  Poly w;
  std::vector<Poly> firsts;
  for (std::size_t m = 0; m < k.rows.size(); ++m) {
    w += k.rows[m].a * target_b[m];
    firsts.push_back(k.rows[m].a);
  }
  if (!k.base->equal(w, k.potential()))
    throw PotentialMismatch("sum a_m b'_m differs from the potential by " +
                            k.base->normal_form(w - k.potential()).str());
  if (regularity_heuristic(*k.base, firsts, cutoff) != Regularity::verified && !force)
    throw RegularityUnverified("first column not verified regular up to degree " + std::to_string(cutoff));
  KoszulMF r = k;
  for (std::size_t m = 0; m < r.rows.size(); ++m)
    r.rows[m] = make_row(r.rows[m].a, target_b[m], r.rows[m].deg_a, r.rows[m].deg_b);
  return r;
}

KoszulMF exclude_variable(const KoszulMF& k, std::size_t row, std::vector<VarId>& internal, int cutoff) {
  if (row >= k.rows.size()) throw IndexOutOfRange("row " + std::to_string(row));
  require_external_potential(k, internal);
  const Poly& b = k.rows[row].b;
  if (auto lin = linear_in(b, internal)) {
    auto [y, c] = *lin;
    Poly rest = b - Poly::var(y).scaled(c);
    KoszulMF r = k;
    r.rows.erase(r.rows.begin() + static_cast<long>(row));
    r = substituted(r, {{y, rest.scaled(-1 / c)}});
    internal.erase(std::find(internal.begin(), internal.end(), y));
    return r;
  }
  return exclude_rows(k, {row}, internal, cutoff);
}

KoszulMF exclude_rows(const KoszulMF& k, const std::vector<std::size_t>& rows, const std::vector<VarId>& internal,
                      int cutoff, bool force) {
  require_external_potential(k, internal);
  Substitution at_zero;
  for (auto v : external_vars(*k.base, internal)) at_zero[v] = Poly();
  std::vector<Poly> seq, added;
  for (auto& g : k.base->gens()) {
    Poly s = substitute(g, at_zero);
    if (!s.is_zero()) seq.push_back(s);
  }
  for (auto i : rows) {
    if (i >= k.rows.size()) throw IndexOutOfRange("row " + std::to_string(i));
    Poly s = substitute(k.rows[i].b, at_zero);
    if (s.is_zero())
      throw ConditionUnmet("row " + std::to_string(i + 1) +
                           " has b vanishing when external variables are 0");
    seq.push_back(s);
    added.push_back(k.rows[i].b);
  }
  bool regular = seq.size() == internal.size()
                     ? certify_complete_intersection(internal, seq)
                     : regularity_heuristic(QuotientRing(internal, {}, cutoff), seq, cutoff) == Regularity::verified;
  if (!regular && !force)
    throw ConditionUnmet("the b entries, with external variables set to 0, are not verified regular in the internal variables");
  KoszulMF r = k;
  r.base = make_base(k.base->with_generators(added));
  r.rows.clear();
  for (std::size_t i = 0; i < k.rows.size(); ++i) {
    if (std::find(rows.begin(), rows.end(), i) != rows.end()) continue;
    auto row = k.rows[i];
    row.a = r.base->normal_form(row.a);
    row.b = r.base->normal_form(row.b);
    r.rows.push_back(row);
  }
  return r;
}

KoszulMF glue(const KoszulMF& x, const KoszulMF& y, const std::vector<std::pair<Alphabet, Alphabet>>& pairs) {
  if (x.potential_degree != y.potential_degree) throw IncompatibleBases("potential degrees differ");
  Substitution sigma;
  for (auto& [a, b] : pairs) {
    if (a.color != b.color) throw ColorMismatch("glued alphabets " + a.label + ", " + b.label + " differ in color");
    for (int j = 1; j <= a.color; ++j)
      if (b.vars[j - 1] != a.vars[j - 1]) sigma[b.vars[j - 1]] = a.x(j);
  }
  KoszulMF yy = y;
  if (!sigma.empty()) {
    yy.base = make_base(y.base->eliminated(sigma));
    for (auto& row : yy.rows) {
      row.a = substitute(row.a, sigma);
      row.b = substitute(row.b, sigma);
    }
  }
  KoszulMF r;
  r.base = make_base(combine(*x.base, *yy.base));
  r.rows = x.rows;
  r.rows.insert(r.rows.end(), yy.rows.begin(), yy.rows.end());
  r.shift = x.shift + yy.shift;
  r.z2 = (x.z2 + yy.z2) % 2;
  r.potential_degree = x.potential_degree;
  return r;
}

KoszulMF specialize(const KoszulMF& k, const std::vector<VarId>& vars) {
  Substitution zero;
  for (auto v : vars)
    if (k.base->has_var(v)) zero[v] = Poly();
  return substituted(k, zero);
}

namespace {

MatrixFactorization eliminate_d0(const MatrixFactorization& x, std::size_t h, std::size_t g) {
  const Rational c = x.d0[h][g].constant_term();
  MatrixFactorization r = x;
  r.m0.shifts.erase(r.m0.shifts.begin() + static_cast<long>(g));
  r.m1.shifts.erase(r.m1.shifts.begin() + static_cast<long>(h));
  r.d0.clear();
  for (std::size_t h2 = 0; h2 < x.rank1(); ++h2) {
    if (h2 == h) continue;
    std::vector<Poly> row;
    for (std::size_t g2 = 0; g2 < x.rank0(); ++g2) {
      if (g2 == g) continue;
      Poly e = x.d0[h2][g2];
      if (!x.d0[h2][g].is_zero() && !x.d0[h][g2].is_zero()) e -= (x.d0[h2][g] * x.d0[h][g2]).scaled(1 / c);
      row.push_back(x.base->normal_form(e));
    }
    r.d0.push_back(row);
  }
  r.d1.clear();
  for (std::size_t g2 = 0; g2 < x.rank0(); ++g2) {
    if (g2 == g) continue;
    std::vector<Poly> row;
    for (std::size_t h2 = 0; h2 < x.rank1(); ++h2)
      if (h2 != h) row.push_back(x.d1[g2][h2]);
    r.d1.push_back(row);
  }
  return r;
}

std::optional<std::pair<std::size_t, std::size_t>> find_unit(const Matrix& m) {
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c)
      if (is_unit(m[r][c])) return std::make_pair(r, c);
  return std::nullopt;
}

}  // namespace

MatrixFactorization remove_contractible(const MatrixFactorization& in) {
  MatrixFactorization x = in;
  for (auto* m : {&x.d0, &x.d1})
    for (auto& row : *m)
      for (auto& e : row) e = x.base->normal_form(e);
  while (true) {
    if (auto u = find_unit(x.d0)) {
      x = eliminate_d0(x, u->first, u->second);
    } else if (auto v = find_unit(x.d1)) {
      x = translate(eliminate_d0(translate(x), v->second, v->first));
    } else {
      return x;
    }
  }
}

// ---- pipelines ----

namespace {

struct Session {
  KoszulMF k;
  std::vector<VarId> internal;
  Poly original;
  ReductionLog log;
  std::optional<std::mt19937_64> rng;

  void record(const std::string& op, nlohmann::json params) {
    bool ok = potential_matches(k, original);
    log.push_back({op, std::move(params), ok});
    if (!ok) throw PotentialMismatch("potential changed by " + op);
  }

  bool contractible() const {
    for (auto& r : k.rows)
      if (is_unit(r.a) || is_unit(r.b)) return true;
    return false;
  }

  // One linear exclusion through a b entry; with use_first, also through a swapped a entry.
  bool linear_step(bool use_first) {
    std::vector<std::pair<std::size_t, bool>> cands;
    for (std::size_t i = 0; i < k.rows.size(); ++i) {
      if (linear_in(k.rows[i].b, internal)) cands.push_back({i, false});
      else if (use_first && linear_in(k.rows[i].a, internal)) cands.push_back({i, true});
    }
    if (cands.empty()) return false;
    // prefer b entries; ties by row index
    std::stable_sort(cands.begin(), cands.end(), [](auto& x, auto& y) { return !x.second && y.second; });
    auto pick = cands.front();
    if (rng) pick = cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(*rng)];
    auto [row, swapped] = pick;
    if (swapped) {
      k = swap_row(k, row);
      record("swap_row", {{"row", row + 1}});
    }
    auto y = linear_in(k.rows[row].b, internal)->first;
    k = exclude_variable(k, row, internal, k.base->cutoff());
    record("exclude_linear", {{"row", row + 1}, {"variable", var_name(y)}});
    return true;
  }
};

struct Pick {
  std::size_t row;
  bool first;
};

// Depth-first search for rows whose chosen entries, together with `fixed`,
// form a complete intersection in `vars`.
std::optional<std::vector<Pick>> find_complete_intersection(const std::vector<VarId>& vars,
                                                            const std::vector<Poly>& fixed,
                                                            const std::vector<std::vector<std::pair<Poly, bool>>>& options,
                                                            std::vector<std::size_t> order) {
  const std::size_t need = vars.size() - std::min(vars.size(), fixed.size());
  std::vector<Pick> chosen;
  std::vector<Poly> seq = fixed;
  int window = 0;
  for (auto v : vars) window = std::max(window, var_degree(v));
  std::function<bool(std::size_t)> dfs = [&](std::size_t pos) -> bool {
    if (chosen.size() == need) return certify_complete_intersection(vars, seq);
    if (order.size() - pos < need - chosen.size()) return false;
    std::size_t row = order[pos];
    for (auto& [p, first] : options[row]) {
      seq.push_back(p);
      int reach = 0;
      for (auto& s : seq) reach = std::max(reach, s.max_degree());
      bool ok = regularity_heuristic(QuotientRing(vars, {}, reach + window), seq, reach + window) ==
                Regularity::verified;
      if (ok) {
        chosen.push_back({row, first});
        if (dfs(pos + 1)) return true;
        chosen.pop_back();
      }
      seq.pop_back();
    }
    return dfs(pos + 1);
  };
  if (fixed.size() > vars.size()) return std::nullopt;
  if (dfs(0)) return chosen;
  return std::nullopt;
}

}  // namespace

Reduction reduce_open(const KoszulMF& k0, const std::vector<VarId>& internal0, const ReduceOptions& opt) {
  Session s{k0, internal0, k0.potential(), {}, std::nullopt};
  if (opt.seed) s.rng.emplace(*opt.seed);
  require_external_potential(s.k, s.internal);
  if (s.contractible()) {
    s.log.push_back({"contractible", {}, true});
    return {s.k, s.internal, true, s.log};
  }
  while (s.linear_step(false)) {
    if (s.contractible()) {
      s.log.push_back({"contractible", {}, true});
      return {s.k, s.internal, true, s.log};
    }
  }
  if (!s.internal.empty()) {
    Substitution at_zero;
    for (auto v : external_vars(*s.k.base, s.internal)) at_zero[v] = Poly();
    std::vector<Poly> fixed;
    for (auto& g : s.k.base->gens())
      if (auto p = substitute(g, at_zero); !p.is_zero()) fixed.push_back(p);
    std::vector<std::vector<std::pair<Poly, bool>>> options(s.k.rows.size());
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < s.k.rows.size(); ++i) {
      Poly p = substitute(s.k.rows[i].b, at_zero);
      if (!p.is_zero()) {
        options[i].push_back({p, false});
        order.push_back(i);
      }
    }
    if (s.rng) std::shuffle(order.begin(), order.end(), *s.rng);
    if (auto picks = find_complete_intersection(s.internal, fixed, options, order)) {
      std::vector<std::size_t> rows;
      for (auto& p : *picks) rows.push_back(p.row);
      std::sort(rows.begin(), rows.end());
      auto excluded = names(s.internal);
      s.k = exclude_rows(s.k, rows, s.internal, opt.cutoff, opt.force);
      nlohmann::json jr = nlohmann::json::array();
      for (auto r : rows) jr.push_back(r + 1);
      s.record("exclude_batch", {{"rows", jr}, {"internal", excluded}});
      s.internal.clear();
    }
  }
  return {s.k, s.internal, false, s.log};
}

Reduction reduce_closed(const KoszulMF& k0, const ReduceOptions& opt) {
  Session s{k0, k0.base->vars(), k0.potential(), {}, std::nullopt};
  if (opt.seed) s.rng.emplace(*opt.seed);
  if (!k0.base->is_zero(s.original)) throw NotClosed("potential is not zero: " + s.original.str());
  auto done_if_zero = [&]() {
    if (!s.contractible()) return false;
    s.log.push_back({"contractible", {}, true});
    return true;
  };
  if (done_if_zero()) return {s.k, s.internal, true, s.log};
  while (s.linear_step(true))
    if (done_if_zero()) return {s.k, s.internal, true, s.log};
  if (s.internal.empty()) return {s.k, s.internal, false, s.log};

  // rows with b = 0 can only be excluded through a, after a swap
  std::vector<std::vector<std::pair<Poly, bool>>> options(s.k.rows.size());
  std::vector<std::size_t> zero_b, other;
  for (std::size_t i = 0; i < s.k.rows.size(); ++i) {
    auto& r = s.k.rows[i];
    if (!r.b.is_zero()) options[i].push_back({r.b, false});
    if (!r.a.is_zero()) options[i].push_back({r.a, true});
    (r.b.is_zero() ? zero_b : other).push_back(i);
  }
  if (s.rng) {
    std::shuffle(zero_b.begin(), zero_b.end(), *s.rng);
    std::shuffle(other.begin(), other.end(), *s.rng);
  }
  std::vector<std::size_t> order = zero_b;
  order.insert(order.end(), other.begin(), other.end());
  auto picks = find_complete_intersection(s.internal, s.k.base->gens(), options, order);
  if (!picks)
    throw ConditionUnmet("no subset of rows forms a regular sequence with a finite dimensional quotient");
  std::vector<std::size_t> rows;
  for (auto& p : *picks) {
    if (p.first) {
      s.k = swap_row(s.k, p.row);
      s.record("swap_row", {{"row", p.row + 1}});
    }
    rows.push_back(p.row);
  }
  std::sort(rows.begin(), rows.end());
  auto excluded = names(s.internal);
  s.k = exclude_rows(s.k, rows, s.internal, opt.cutoff, opt.force);
  nlohmann::json jr = nlohmann::json::array();
  for (auto r : rows) jr.push_back(r + 1);
  s.record("exclude_batch", {{"rows", jr}, {"internal", excluded}});
  s.internal.clear();
  return {s.k, s.internal, false, s.log};
}

}  // namespace moymf
