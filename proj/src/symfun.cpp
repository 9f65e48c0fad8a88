#include "moymf/symfun.hpp"

#include <map>
#include <mutex>

namespace moymf {

Poly Alphabet::x(int j) const {
  if (j == 0) return 1;
  if (j < 0 || j > color) return {};
  return Poly::var(vars[j - 1]);
}

std::string alphabet_var_name(int j, const std::string& label) { return "x" + std::to_string(j) + "_" + label; }

Alphabet make_alphabet(int color, const std::string& label) {
  Alphabet a;
  a.color = color;
  a.label = label;
  for (int j = 1; j <= color; ++j) a.vars.push_back(intern_var(alphabet_var_name(j, label), 2 * j));
  return a;
}

namespace {

// F_i in placeholder variables e1..ei, built once per (i, n).
const Poly& power_sum_template(int i, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Poly> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(i, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<Poly> e(i + 1);
  for (int k = 1; k <= i; ++k) e[k] = Poly::var("_e" + std::to_string(k), 2 * k);
  auto elem = [&](int k) { return k <= i ? e[k] : Poly(); };
  // p_m = sum_{k<m} (-1)^(k-1) e_k p_(m-k) + (-1)^(m-1) m e_m
  std::vector<Poly> p(n + 2);
  for (int m = 1; m <= n + 1; ++m) {
    Poly acc = elem(m).scaled((m % 2 ? 1 : -1) * m);
    for (int k = 1; k < m; ++k) {
      if (k > i) break;
      acc += (elem(k) * p[m - k]).scaled(k % 2 ? 1 : -1);
    }
    p[m] = acc;
  }
  return cache.emplace(key, p[n + 1]).first->second;
}

Poly placeholder(int degree, bool second) {
  return Poly::var(std::string(second ? "_v" : "_u") + std::to_string(degree), degree);
}

// (H(u) - H(v)) / (u - v) where H fills slot j with a free argument.
Poly slot_difference(int j, int i, int n, std::vector<Poly> args, const Poly& u, const Poly& v) {
  Poly w = placeholder(2 * j, false), w2 = placeholder(2 * j, true);
  args[j - 1] = w;
  Poly h = power_sum(i, n, args);
  Poly dd = divided_difference(h, w.variables()[0], w2.variables()[0]);
  return substitute(dd, {{w.variables()[0], u}, {w2.variables()[0], v}});
}

}  // namespace

Poly power_sum(int i, int n, const std::vector<Poly>& elementary) {
  if (i < 1 || n < 1) throw IndexOutOfRange("power_sum needs i >= 1 and n >= 1");
  if (static_cast<int>(elementary.size()) != i) throw IndexOutOfRange("power_sum needs exactly i arguments");
  Substitution s;
  for (int k = 1; k <= i; ++k) s[intern_var("_e" + std::to_string(k), 2 * k)] = elementary[k - 1];
  return substitute(power_sum_template(i, n), s);
}

Poly power_sum(int n, const Alphabet& a) {
  std::vector<Poly> args;
  for (int j = 1; j <= a.color; ++j) args.push_back(a.x(j));
  return power_sum(a.color, n, args);
}

Poly product_term(int j, const Alphabet& a, const Alphabet& b) {
  if (j < 1 || j > a.color + b.color) throw IndexOutOfRange("product_term index " + std::to_string(j));
  Poly r;
  for (int k = 0; k <= j; ++k) r += a.x(k) * b.x(j - k);
  return r;
}

std::vector<Poly> product_alphabet(const Alphabet& a, const Alphabet& b) {
  std::vector<Poly> r;
  for (int j = 1; j <= a.color + b.color; ++j) r.push_back(product_term(j, a, b));
  return r;
}

Poly line_entry(int j, int n, const Alphabet& out, const Alphabet& in) {
  if (out.color != in.color) throw ColorMismatch("line ends carry different colors");
  int i = out.color;
  if (j < 1 || j > i) throw IndexOutOfRange("line row index " + std::to_string(j));
  std::vector<Poly> args(i);
  for (int k = 1; k <= i; ++k) args[k - 1] = k < j ? in.x(k) : out.x(k);
  return slot_difference(j, i, n, args, out.x(j), in.x(j));
}

Poly merge_entry(int j, int n, const Alphabet& a, const Alphabet& b, const Alphabet& c) {
  if (c.color != a.color + b.color) throw ColorMismatch("merge colors do not add up");
  int i = c.color;
  if (j < 1 || j > i) throw IndexOutOfRange("merge row index " + std::to_string(j));
  std::vector<Poly> args(i);
  for (int k = 1; k <= i; ++k) args[k - 1] = k < j ? product_term(k, a, b) : c.x(k);
  return slot_difference(j, i, n, args, c.x(j), product_term(j, a, b));
}

Poly split_entry(int j, int n, const Alphabet& a, const Alphabet& b, const Alphabet& c) {
  if (c.color != a.color + b.color) throw ColorMismatch("split colors do not add up");
  int i = c.color;
  if (j < 1 || j > i) throw IndexOutOfRange("split row index " + std::to_string(j));
  std::vector<Poly> args(i);
  for (int k = 1; k <= i; ++k) args[k - 1] = k < j ? c.x(k) : product_term(k, a, b);
  return slot_difference(j, i, n, args, product_term(j, a, b), c.x(j));
}

}  // namespace moymf
