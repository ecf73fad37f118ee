#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ck {

/// Bijection on the points {0..n-1}. Products compose left to right:
/// (a*b) maps x to b(a(x)), i.e. a is applied first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<int> images);

  /// Parses disjoint-cycle text like "(0 1 2)(3 4)"; "()" is the identity.
  static Permutation from_cycles(int degree, const std::string& text);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Nontrivial cycles, each rotated to start at its minimum, sorted by it.
  std::vector<std::vector<int>> cycles() const;
  std::string cycle_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

Permutation compose(const Permutation& a, const Permutation& b);

}  // namespace ck

template <>
struct std::hash<ck::Permutation> {
  std::size_t operator()(const ck::Permutation& p) const;
};
