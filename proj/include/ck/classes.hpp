#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "ck/group.hpp"

namespace ck {

/// Multiset structure of a set product of two conjugacy classes:
/// support[k] is the class multiplication coefficient a_{ijk}, the number of
/// factorizations of a fixed element of class k as (class i) * (class j).
struct ClassProduct {
  int left = 0;
  int right = 0;
  std::map<int, long long> support;

  bool single_class() const { return support.size() == 1; }
};

/// Conjugacy classes of a group, ordered by (size, representative order,
/// least member index); class 0 is {identity}. Coefficients are memoized
/// per ordered class pair behind a mutex.
class ClassData {
 public:
  explicit ClassData(const Group& g);

  const Group& group() const { return *g_; }
  int count() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  const std::vector<int>& members(int c) const { return classes_[c]; }
  int rep(int c) const { return reps_[c]; }
  int class_of(int element) const { return class_of_[element]; }
  long long size(int c) const { return static_cast<long long>(classes_[c].size()); }
  int inverse_class(int c) const { return inverse_class_[c]; }

  /// Class of rep(c)^k; well defined since powers commute with conjugation.
  int power_class(int c, long long k) const;

  const ClassProduct& coefficients(int i, int j) const;

 private:
  const Group* g_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> reps_;
  std::vector<int> class_of_;
  std::vector<int> inverse_class_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<int, int>, ClassProduct> cache_;
};

ClassData conjugacy_classes(const Group& g);

/// The class holding the whole set product C_i C_j, when it is one class.
std::optional<int> product_single_class(const ClassData& cd, int i, int j);

}  // namespace ck
