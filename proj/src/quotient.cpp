#include "moymf/quotient.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>

#include "moymf/linalg.hpp"

namespace moymf {

int default_cutoff() {
  if (const char* env = std::getenv("MOYMF_CUTOFF")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 64;
}

struct QuotientRing::Piece {
  std::vector<Monomial> monos;
  std::map<Monomial, int> index;
  Echelon echelon;
};

struct QuotientRing::Cache {
  std::recursive_mutex mu;
  std::map<int, std::unique_ptr<Piece>> pieces;
};

namespace {

void enumerate(const std::vector<VarId>& vars, std::size_t from, int degree, Monomial cur,
               std::vector<Monomial>& out) {
  if (degree == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < vars.size(); ++i) {
    int d = var_degree(vars[i]);
    if (d <= degree) enumerate(vars, i, degree - d, cur * Monomial::of(vars[i]), out);
  }
}

}  // namespace

QLaurent count_monomials(const std::vector<VarId>& vars, int cutoff) {
  std::vector<int> degs;
  for (auto v : vars) degs.push_back(var_degree(v));
  return poincare_polynomial_ring(degs, cutoff);
}

QuotientRing::QuotientRing() : QuotientRing(std::vector<VarId>{}) {}

QuotientRing::QuotientRing(std::vector<VarId> vars, std::vector<Poly> gens, int cutoff)
    : vars_(std::move(vars)), cutoff_(cutoff), cache_(std::make_shared<Cache>()) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw DegreeMismatch("ideal generator is not homogeneous: " + g.str());
    for (auto v : g.variables())
      if (!has_var(v)) throw IncompatibleBases("generator uses " + var_name(v) + " outside the ring");
    gens_.push_back(g);
  }
}

bool QuotientRing::has_var(VarId v) const { return std::binary_search(vars_.begin(), vars_.end(), v); }

std::vector<int> QuotientRing::var_degrees() const {
  std::vector<int> d;
  for (auto v : vars_) d.push_back(var_degree(v));
  return d;
}

int QuotientRing::max_var_degree() const {
  int m = 0;
  for (auto v : vars_) m = std::max(m, var_degree(v));
  return m;
}

const QuotientRing::Piece& QuotientRing::piece(int degree) const {
  std::lock_guard lock(cache_->mu);
  auto it = cache_->pieces.find(degree);
  if (it != cache_->pieces.end()) return *it->second;
  if (degree > cutoff_)
    throw CutoffExceeded("degree " + std::to_string(degree) + " exceeds cutoff " + std::to_string(cutoff_));

  auto p = std::make_unique<Piece>();
  if (degree >= 0) enumerate(vars_, 0, degree, Monomial{}, p->monos);
  std::sort(p->monos.begin(), p->monos.end(), [](auto& a, auto& b) { return b < a; });
  for (std::size_t i = 0; i < p->monos.size(); ++i) p->index.emplace(p->monos[i], static_cast<int>(i));
  p->echelon = Echelon(static_cast<int>(p->monos.size()));

  if (degree >= 0 && !gens_.empty()) {
    auto to_row = [&](const Poly& f) {
      SparseRow r;
      for (auto& [m, c] : f.terms()) r.emplace_back(p->index.at(m), c);
      std::sort(r.begin(), r.end(), [](auto& a, auto& b) { return a.first < b.first; });
      return r;
    };
    for (auto& g : gens_)
      if (g.homogeneous_degree() == degree) p->echelon.insert(to_row(g));
    for (auto v : vars_) {
      int d = var_degree(v);
      if (d > degree) continue;
      const Piece& lower = piece(degree - d);
      Monomial x = Monomial::of(v);
      for (auto& row : lower.echelon.rows()) {
        SparseRow r;
        for (auto& [j, c] : row) r.emplace_back(p->index.at(lower.monos[j] * x), c);
        std::sort(r.begin(), r.end(), [](auto& a, auto& b) { return a.first < b.first; });
        p->echelon.insert(r);
      }
    }
  }
  return *cache_->pieces.emplace(degree, std::move(p)).first->second;
}

Poly QuotientRing::normal_form(const Poly& p) const {
  for (auto v : p.variables())
    if (!has_var(v)) throw IncompatibleBases("polynomial uses " + var_name(v) + " outside the ring");
  if (gens_.empty()) return p;
  Poly out;
  for (auto& [d, part] : p.homogeneous_components()) {
    const Piece& pc = piece(d);
    SparseRow r;
    for (auto& [m, c] : part.terms()) r.emplace_back(pc.index.at(m), c);
    std::sort(r.begin(), r.end(), [](auto& a, auto& b) { return a.first < b.first; });
    for (auto& [j, c] : pc.echelon.reduce(r)) out.add_term(pc.monos[j], c);
  }
  return out;
}

const std::vector<Monomial>& QuotientRing::monomials(int degree) const { return piece(degree).monos; }

std::vector<Monomial> QuotientRing::standard_monomials(int degree) const {
  const Piece& pc = piece(degree);
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < pc.monos.size(); ++i)
    if (!pc.echelon.is_pivot(static_cast<int>(i))) out.push_back(pc.monos[i]);
  return out;
}

std::int64_t QuotientRing::dimension(int degree) const {
  if (degree < 0) return 0;
  const Piece& pc = piece(degree);
  return static_cast<std::int64_t>(pc.monos.size()) - pc.echelon.rank();
}

QLaurent QuotientRing::dimension_series(int cutoff) const {
  if (gens_.empty()) return count_monomials(vars_, cutoff);
  QLaurent s;
  for (int d = 0; d <= cutoff; ++d) s.add(d, dimension(d));
  return s;
}

std::optional<int> QuotientRing::top_degree(int cutoff) const {
  int window = std::max(1, max_var_degree());
  int top = -1, zeros = 0;
  for (int d = 0; d <= cutoff; ++d) {
    if (dimension(d) != 0) {
      top = d;
      zeros = 0;
    } else if (++zeros >= window) {
      return top;
    }
  }
  return std::nullopt;
}

QuotientRing QuotientRing::with_generators(const std::vector<Poly>& extra) const {
  auto g = gens_;
  g.insert(g.end(), extra.begin(), extra.end());
  return QuotientRing(vars_, g, cutoff_);
}

QuotientRing QuotientRing::with_cutoff(int cutoff) const {
  QuotientRing r = *this;
  r.cutoff_ = cutoff;
  return r;
}

QuotientRing QuotientRing::eliminated(const Substitution& sigma) const {
  std::vector<VarId> vs;
  for (auto v : vars_)
    if (!sigma.count(v)) vs.push_back(v);
  std::vector<Poly> gs;
  for (auto& g : gens_) gs.push_back(substitute(g, sigma));
  return QuotientRing(vs, gs, cutoff_);
}

std::string QuotientRing::str() const {
  std::vector<std::string> names;
  for (auto v : vars_) names.push_back(var_name(v));
  std::sort(names.begin(), names.end());
  std::string s = "Q[";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i];
  s += "]";
  if (!gens_.empty()) {
    s += "/<";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].str();
    s += ">";
  }
  return s;
}

QuotientRing combine(const QuotientRing& a, const QuotientRing& b) {
  auto vs = a.vars();
  vs.insert(vs.end(), b.vars().begin(), b.vars().end());
  auto gs = a.gens();
  gs.insert(gs.end(), b.gens().begin(), b.gens().end());
  return QuotientRing(vs, gs, std::max(a.cutoff(), b.cutoff()));
}

}  // namespace moymf
