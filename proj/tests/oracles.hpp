#pragma once
// Independent reference computations used by the tests. None of these call
// into the engine beyond its data types.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "moymf/poly.hpp"
#include "moymf/qseries.hpp"

namespace oracle {

using moymf::QLaurent;
using moymf::Rational;

// Balanced Gaussian binomial by counting inversions of k-subsets of {0..n-1}:
// sum over subsets of q^(2 inv) times q^(-k(n-k)).
inline QLaurent gauss(int n, int k) {
  QLaurent out;
  if (k < 0 || k > n) return out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    int inv = 0, ones_seen = 0;
    for (int b = 0; b < n; ++b) {
      if (mask >> b & 1)
        ++ones_seen;
      else
        inv += ones_seen;
    }
    out.add(2 * inv - k * (n - k), 1);
  }
  return out;
}

// Graded dimension of H*(Gr(r, n)) with deg = 2 * (box count).
inline QLaurent grassmannian(int n, int r) { return gauss(n, r).shifted(r * (n - r)); }

inline QLaurent qint(int m) {
  QLaurent out;
  for (int k = 0; k < m; ++k) out.add(1 - m + 2 * k, 1);
  return out;
}

inline Rational eval(const moymf::Poly& p, const std::map<moymf::VarId, Rational>& at) {
  Rational sum = 0;
  for (auto& [m, c] : p.terms()) {
    Rational t = c;
    for (auto& [v, e] : m.powers())
      for (int k = 0; k < e; ++k) t *= at.at(v);
    sum += t;
  }
  return sum;
}

// e_1..e_k of the given values.
inline std::vector<Rational> elementary(const std::vector<Rational>& t) {
  std::vector<Rational> e(t.size() + 1, 0);
  e[0] = 1;
  for (auto& x : t)
    for (std::size_t j = t.size(); j >= 1; --j) e[j] += e[j - 1] * x;
  return std::vector<Rational>(e.begin() + 1, e.end());
}

inline Rational power_sum(const std::vector<Rational>& t, int exponent) {
  Rational s = 0;
  for (auto& x : t) {
    Rational p = 1;
    for (int k = 0; k < exponent; ++k) p *= x;
    s += p;
  }
  return s;
}

inline std::vector<Rational> random_values(std::mt19937_64& rng, int count) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Rational> v;
  for (int k = 0; k < count; ++k) v.push_back(d(rng));
  return v;
}

}  // namespace oracle
