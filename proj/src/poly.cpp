#include "moymf/poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace moymf {

namespace {

struct Registry {
  std::mutex mu;
  std::deque<GradedVar> vars;
  std::unordered_map<std::string, VarId> by_name;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

VarId intern_var(std::string_view name, int degree) {
  if (degree <= 0 || degree % 2 != 0)
    throw DegreeMismatch("variable " + std::string(name) + " needs a positive even degree, got " +
                         std::to_string(degree));
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto it = r.by_name.find(std::string(name));
  if (it != r.by_name.end()) {
    if (r.vars[it->second].degree != degree)
      throw IncompatibleBases("variable " + std::string(name) + " already has degree " +
                              std::to_string(r.vars[it->second].degree));
    return it->second;
  }
  auto id = static_cast<VarId>(r.vars.size());
  r.vars.push_back({std::string(name), degree});
  r.by_name.emplace(std::string(name), id);
  return id;
}

std::optional<VarId> lookup_var(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto it = r.by_name.find(std::string(name));
  if (it == r.by_name.end()) return std::nullopt;
  return it->second;
}

const GradedVar& var_info(VarId v) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return r.vars.at(v);
}

// ---- Monomial ----

Monomial Monomial::of(VarId v, int exp) {
  Monomial m;
  if (exp > 0) {
    m.powers_.push_back({v, exp});
    m.degree_ = exp * var_degree(v);
  }
  return m;
}

int Monomial::exponent(VarId v) const {
  for (auto& [w, e] : powers_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.degree_ = degree_ + o.degree_;
  r.powers_.reserve(powers_.size() + o.powers_.size());
  auto a = powers_.begin(), b = o.powers_.begin();
  while (a != powers_.end() || b != o.powers_.end()) {
    if (b == o.powers_.end() || (a != powers_.end() && a->first < b->first)) {
      r.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->first < a->first) {
      r.powers_.push_back(*b++);
    } else {
      r.powers_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (auto& [v, e] : powers_)
    if (o.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::without(VarId v) const {
  Monomial r;
  for (auto& [w, e] : powers_) {
    if (w == v) continue;
    r.powers_.push_back({w, e});
    r.degree_ += e * var_degree(w);
  }
  return r;
}

std::string Monomial::str() const {
  if (powers_.empty()) return "1";
  std::vector<std::pair<std::string, int>> named;
  for (auto& [v, e] : powers_) named.push_back({var_name(v), e});
  std::sort(named.begin(), named.end());
  std::string s;
  for (auto& [n, e] : named) {
    if (!s.empty()) s += '*';
    s += n;
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

bool name_order_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto named = [](const Monomial& m) {
    std::vector<std::pair<std::string, int>> v;
    for (auto& [x, e] : m.powers()) v.push_back({var_name(x), e});
    std::sort(v.begin(), v.end());
    return v;
  };
  auto na = named(a), nb = named(b);
  // lex: the monomial with the larger power of the first-named variable is bigger
  std::size_t i = 0;
  for (; i < na.size() && i < nb.size(); ++i) {
    if (na[i].first != nb[i].first) return na[i].first > nb[i].first;
    if (na[i].second != nb[i].second) return na[i].second < nb[i].second;
  }
  return na.size() < nb.size();
}

// ---- Poly ----

Poly::Poly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, Rational(c));
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::var(VarId v) { return term(Monomial::of(v), 1); }

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Poly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.degree();
  if (terms_.rbegin()->first.degree() != d) return std::nullopt;
  return d;
}

bool Poly::is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }

int Poly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

std::map<int, Poly> Poly::homogeneous_components() const {
  std::map<int, Poly> out;
  for (auto& [m, c] : terms_) out[m.degree()].terms_.emplace_hint(out[m.degree()].terms_.end(), m, c);
  return out;
}

Poly Poly::component(int degree) const {
  Poly p;
  for (auto& [m, c] : terms_)
    if (m.degree() == degree) p.terms_.emplace_hint(p.terms_.end(), m, c);
  return p;
}

std::vector<VarId> Poly::variables() const {
  std::vector<VarId> vs;
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m.powers()) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool Poly::contains(VarId v) const {
  for (auto& [m, c] : terms_)
    if (m.exponent(v) > 0) return true;
  return false;
}

int Poly::degree_in(VarId v) const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

Poly Poly::derivative(VarId v) const {
  Poly r;
  for (auto& [m, c] : terms_) {
    int e = m.exponent(v);
    if (e == 0) continue;
    r.add_term(m.without(v) * Monomial::of(v, e - 1), c * e);
  }
  return r;
}

Poly Poly::coefficient_of_power(VarId v, int e) const {
  Poly r;
  for (auto& [m, c] : terms_)
    if (m.exponent(v) == e) r.add_term(m.without(v), c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return {};
  Poly r = *this;
  for (auto& [m, k] : r.terms_) k *= c;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r(1), base = *this;
  while (e) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return r;
}

std::string rational_str(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Rational>*> ts;
  for (auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) { return name_order_less(b->first, a->first); });
  std::string s;
  bool first = true;
  for (auto* t : ts) {
    Rational c = t->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (t->first.is_one()) {
      s += rational_str(c);
    } else {
      if (c != 1) s += rational_str(c) + "*";
      s += t->first.str();
    }
  }
  return s;
}

Poly substitute(const Poly& p, const Substitution& sigma) {
  for (auto& [v, img] : sigma) {
    if (img.is_zero()) continue;
    auto d = img.homogeneous_degree();
    if (!d || *d != var_degree(v))
      throw DegreeMismatch("image of " + var_name(v) + " is not homogeneous of degree " +
                           std::to_string(var_degree(v)) + ": " + img.str());
  }
  std::map<std::pair<VarId, int>, Poly> powers;
  auto power = [&](VarId v, int e) -> const Poly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, sigma.at(v).pow(static_cast<unsigned>(e))).first;
    return it->second;
  };
  Poly r;
  for (auto& [m, c] : p.terms()) {
    Monomial kept;
    Poly factor(c);
    for (auto& [v, e] : m.powers()) {
      if (sigma.count(v))
        factor = factor * power(v, e);
      else
        kept = kept * Monomial::of(v, e);
    }
    if (factor.is_zero()) continue;
    for (auto& [fm, fc] : factor.terms()) r.add_term(fm * kept, fc);
  }
  return r;
}

Poly divided_difference(const Poly& f, VarId x, VarId y) {
  if (var_degree(x) != var_degree(y))
    throw DegreeMismatch("divided difference needs equal degrees: " + var_name(x) + ", " + var_name(y));
  if (x == y) return f.derivative(x);
  // x^k y^l r  ->  sum_{a+b=k-1} x^a y^(b+l) r
  Poly r;
  for (auto& [m, c] : f.terms()) {
    int k = m.exponent(x);
    if (k == 0) continue;
    int l = m.exponent(y);
    Monomial rest = m.without(x).without(y);
    for (int a = 0; a < k; ++a) r.add_term(rest * Monomial::of(x, a) * Monomial::of(y, k - 1 - a + l), c);
  }
  return r;
}

}  // namespace moymf
