#include "moymf/qseries.hpp"

#include <algorithm>

namespace moymf {

QLaurent::QLaurent(Coeff c) {
  if (c != 0) coeffs_[0] = c;
}

QLaurent QLaurent::monomial(int exponent, Coeff c) {
  QLaurent r;
  r.add(exponent, c);
  return r;
}

void QLaurent::add(int e, Coeff c) {
  if (c == 0) return;
  auto& slot = coeffs_[e];
  slot += c;
  if (slot == 0) coeffs_.erase(e);
}

QLaurent::Coeff QLaurent::coeff(int e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? 0 : it->second;
}

int QLaurent::min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
int QLaurent::max_exponent() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

QLaurent::Coeff QLaurent::at_one() const {
  Coeff s = 0;
  for (auto& [e, c] : coeffs_) s += c;
  return s;
}

QLaurent QLaurent::shifted(int k) const {
  QLaurent r;
  for (auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
  return r;
}

QLaurent QLaurent::truncated(int max_exp) const {
  QLaurent r;
  for (auto& [e, c] : coeffs_)
    if (e <= max_exp) r.coeffs_[e] = c;
  return r;
}

QLaurent QLaurent::mirrored() const {
  QLaurent r;
  for (auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
  return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (auto& [e, c] : o.coeffs_) add(e, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (auto& [e, c] : o.coeffs_) add(e, -c);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  for (auto& [ea, ca] : a.coeffs_)
    for (auto& [eb, cb] : b.coeffs_) r.add(ea + eb, ca * cb);
  return r;
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& [e, c] : r.coeffs_) c = -c;
  return r;
}

std::string QLaurent::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [e, c0] : coeffs_) {
    Coeff c = c0;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (e == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c);
    s += e == 1 ? "q" : "q^" + std::to_string(e);
  }
  return s;
}

QLaurent divide_exact(const QLaurent& num, const QLaurent& den) {
  if (den.is_zero()) throw NotDivisible("division by the zero series");
  QLaurent rem = num, quot;
  int d0 = den.min_exponent();
  auto lead = den.coeff(d0);
  int span = den.max_exponent() - d0;
  while (!rem.is_zero()) {
    int e = rem.min_exponent();
    if (rem.max_exponent() - e < span) throw NotDivisible("remainder " + rem.str());
    auto c = rem.coeff(e);
    if (c % lead != 0) throw NotDivisible("non-integral quotient coefficient");
    auto t = QLaurent::monomial(e - d0, c / lead);
    quot += t;
    rem -= t * den;
  }
  return quot;
}

QLaurent qbinomial(int n, int i) {
  if (i < 0 || n < 0 || i > n) return {};
  // balanced Pascal rule: [m k] = q^(k-m) [m-1 k-1] + q^k [m-1 k]
  std::vector<std::vector<QLaurent>> t(n + 1);
  for (int m = 0; m <= n; ++m) {
    t[m].resize(m + 1);
    t[m][0] = 1;
    t[m][m] = 1;
    for (int k = 1; k < m; ++k) t[m][k] = t[m - 1][k - 1].shifted(k - m) + t[m - 1][k].shifted(k);
  }
  return t[n][i];
}

QLaurent qinteger(int m) {
  QLaurent r;
  int a = m < 0 ? -m : m;
  for (int k = 0; k < a; ++k) r.add(1 - a + 2 * k, m < 0 ? -1 : 1);
  return r;
}

std::int64_t p_coeff(int j, int n1, int n2) {
  if (j < 0 || j > n1 * n2 - n2 * n2) return 0;
  return qbinomial(n1, n2).coeff(-n1 * n2 + n2 * n2 + 2 * j);
}

QLaurent poincare_polynomial_ring(const std::vector<int>& var_degrees, int cutoff) {
  QLaurent r = 1;
  for (int d : var_degrees) {
    QLaurent geo;
    for (int e = 0; e <= cutoff; e += d) geo.add(e, 1);
    r = (r * geo).truncated(cutoff);
  }
  return r;
}

QLaurent poincare_regular_quotient(const std::vector<int>& var_degrees, const std::vector<int>& gen_degrees,
                                   int cutoff) {
  QLaurent r = poincare_polynomial_ring(var_degrees, cutoff);
  for (int d : gen_degrees) r = (r * (QLaurent(1) - QLaurent::monomial(d))).truncated(cutoff);
  return r;
}

QLaurent jacobi_series(int n, int r) {
  if (r < 0 || r > n) throw IndexOutOfRange("jacobi_series needs 0 <= r <= n");
  auto prod = [](int m) {
    QLaurent p = 1;
    for (int k = 1; k <= m; ++k) p = p * (QLaurent(1) - QLaurent::monomial(2 * k));
    return p;
  };
  return divide_exact(prod(n), prod(r) * prod(n - r));
}

std::string first_difference(const QLaurent& a, const QLaurent& b) {
  QLaurent d = a - b;
  if (d.is_zero()) return {};
  int e = d.min_exponent();
  return "q^" + std::to_string(e) + ": " + std::to_string(a.coeff(e)) + " vs " + std::to_string(b.coeff(e));
}

}  // namespace moymf
