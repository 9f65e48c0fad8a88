#include "moymf/linalg.hpp"

#include <map>

namespace moymf {

SparseRow Echelon::reduce(const SparseRow& row) const {
  std::map<int, Rational> acc;
  for (auto& [j, v] : row)
    if (v != 0) acc[j] += v;
  auto it = acc.begin();
  while (it != acc.end()) {
    if (it->second == 0) {
      it = acc.erase(it);
      continue;
    }
    int p = pivot_row_[it->first];
    if (p < 0) {
      ++it;
      continue;
    }
    Rational c = it->second;
    const auto& pr = rows_[p];
    // pr starts at this column with coefficient 1; later columns only grow the map upward
    for (std::size_t k = 1; k < pr.size(); ++k) acc[pr[k].first] -= c * pr[k].second;
    it = acc.erase(it);
  }
  SparseRow out;
  out.reserve(acc.size());
  for (auto& [j, v] : acc)
    if (v != 0) out.emplace_back(j, v);
  return out;
}

bool Echelon::insert(const SparseRow& row) {
  SparseRow r = reduce(row);
  if (r.empty()) return false;
  Rational lead = r.front().second;
  if (lead != 1)
    for (auto& [j, v] : r) v /= lead;
  pivot_row_[r.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

int rank_of(const std::vector<SparseRow>& rows, int columns) {
  Echelon e(columns);
  for (auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace moymf
