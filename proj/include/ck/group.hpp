#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "ck/permutation.hpp"

namespace ck {

/// Default closure cap; COPRIME_KIT_ORDER_CAP overrides it.
long long order_cap();

/// Finite permutation group, fully enumerated. elements[0] is the identity
/// and the rest follow breadth-first discovery order from the sorted
/// generators, so the element indexing is deterministic for a given
/// generating set. The multiplication table is cached for orders <= 5000.
class Group {
 public:
  static Group generate(std::vector<Permutation> gens, std::string name,
                        long long cap = order_cap());

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const Permutation& element(int i) const { return elements_[i]; }
  const std::vector<int>& generators() const { return generators_; }

  int mult(int i, int j) const {
    if (!mult_table_.empty()) return mult_table_[static_cast<size_t>(i) * elements_.size() + j];
    return index_.at(compose(elements_[i], elements_[j]));
  }
  int inv(int i) const { return inverse_[i]; }
  int element_order(int i) const { return orders_[i]; }

  /// g^-1 * x * g
  int conjugate(int x, int g) const { return mult(mult(inv(g), x), g); }
  int power(int i, long long k) const;

  /// Index of p in the element list, or -1.
  int index_of(const Permutation& p) const;

  long long exponent() const;  // lcm of element orders
  bool is_abelian() const;

 private:
  Group() = default;

  std::string name_;
  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, int> index_;
  std::vector<int> mult_table_;  // empty when order > 5000
  std::vector<int> inverse_;
  std::vector<int> orders_;
  std::vector<int> generators_;
};

/// Subgroup as a sorted member-index set of its parent. The parent group
/// must outlive the subgroup.
class Subgroup {
 public:
  static Subgroup generated(const Group& g, std::vector<int> seed);
  static Subgroup trivial(const Group& g);
  static Subgroup whole(const Group& g);
  /// Wraps an index set already known to be closed (centralizers etc.).
  static Subgroup from_members(const Group& g, std::vector<int> members,
                               std::vector<int> witnesses = {});

  const Group& parent() const { return *parent_; }
  const std::vector<int>& members() const { return members_; }
  const std::vector<int>& generator_witnesses() const { return witnesses_; }
  long long order() const { return static_cast<long long>(members_.size()); }
  bool contains(int i) const;

  bool is_normal() const;
  bool is_abelian() const;
  bool is_cyclic() const;

 private:
  const Group* parent_ = nullptr;
  std::vector<int> members_;    // sorted, contains 0
  std::vector<int> witnesses_;  // generating subset
};

Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// |AB| as a set product of two subgroups of the same parent.
long long product_set_size(const Subgroup& a, const Subgroup& b);

Subgroup centralizer(const Group& g, int i);
Subgroup normal_closure(const Group& g, const std::vector<int>& seed);

/// Subgroup generated by all commutators [a,b], a in A, b in B.
Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b);

enum class DerivedPath { automatic, pair_scan, generator_closure };
Subgroup derived_subgroup(const Group& g, DerivedPath path = DerivedPath::automatic);

/// Conjugation-orbit partition: element index -> orbit id (orbit of 0 is 0).
std::vector<int> conjugation_orbit_ids(const Group& g);

}  // namespace ck
