#include "ck/classes.hpp"

#include <algorithm>
#include <stdexcept>

namespace ck {

ClassData::ClassData(const Group& g) : g_(&g) {
  const auto orbit_id = conjugation_orbit_ids(g);
  const int n_orbits = *std::max_element(orbit_id.begin(), orbit_id.end()) + 1;
  std::vector<std::vector<int>> orbits(n_orbits);
  for (int i = 0; i < g.order(); ++i) orbits[orbit_id[i]].push_back(i);

  std::sort(orbits.begin(), orbits.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const int oa = g.element_order(a.front());
    const int ob = g.element_order(b.front());
    if (oa != ob) return oa < ob;
    return a.front() < b.front();
  });

  classes_ = std::move(orbits);
  reps_.resize(count());
  class_of_.assign(g.order(), -1);
  for (int c = 0; c < count(); ++c) {
    reps_[c] = classes_[c].front();  // members ascend, so front is minimal
    for (int m : classes_[c]) class_of_[m] = c;
  }
  inverse_class_.resize(count());
  for (int c = 0; c < count(); ++c) inverse_class_[c] = class_of_[g.inv(reps_[c])];
}

int ClassData::power_class(int c, long long k) const {
  return class_of_[g_->power(reps_[c], k)];
}

const ClassProduct& ClassData::coefficients(int i, int j) const {
  if (i < 0 || i >= count() || j < 0 || j >= count())
    throw std::invalid_argument("coefficients: class index out of range");
  std::lock_guard<std::mutex> lock(cache_mutex_);
  const auto key = std::make_pair(i, j);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  std::vector<long long> hits(count(), 0);
  for (int x : classes_[i]) {
    for (int y : classes_[j]) ++hits[class_of_[g_->mult(x, y)]];
  }
  ClassProduct prod{i, j, {}};
  for (int k = 0; k < count(); ++k) {
    if (hits[k] == 0) continue;
    // Each element of class k has the same number of factorizations.
    if (hits[k] % size(k) != 0) throw std::logic_error("coefficients: uneven class product");
    prod.support[k] = hits[k] / size(k);
  }
  return cache_.emplace(key, std::move(prod)).first->second;
}

ClassData conjugacy_classes(const Group& g) { return ClassData(g); }

std::optional<int> product_single_class(const ClassData& cd, int i, int j) {
  const auto& prod = cd.coefficients(i, j);
  if (!prod.single_class()) return std::nullopt;
  return prod.support.begin()->first;
}

}  // namespace ck
