#pragma once

#include <optional>
#include <vector>

#include "ck/group.hpp"

namespace ck {

/// G >= G' >= G'' >= ... down to the stable term.
std::vector<Subgroup> derived_series(const Group& g);

/// O_p(G), generated by the elements whose normal closure is a p-group.
Subgroup p_core(const Group& g, long long p);

Subgroup fitting_subgroup(const Group& g);

struct QuotientResult {
  Group group;                 // coset action of G on the cosets of N
  std::vector<int> projection; // element index -> quotient element index
};
QuotientResult quotient(const Group& g, const Subgroup& n);

/// Descending chain G = N_0 > N_1 > ... > N_r = 1 with every term normal
/// in G and no normal subgroup of G strictly between consecutive terms.
struct ChiefSeries {
  std::vector<Subgroup> subgroups;
  std::vector<long long> factor_orders;
  std::vector<std::vector<long long>> factor_prime_supports;
};
ChiefSeries chief_series(const Group& g);

bool is_p_solvable(const Group& g, long long p);
bool is_p_solvable(const ChiefSeries& series, long long p);

struct StructurePredicates {
  bool is_abelian = false;
  bool is_nilpotent = false;
  bool is_solvable = false;
  bool is_metabelian = false;
};
StructurePredicates structure_predicates(const Group& g);

struct NormalHallParts {
  std::optional<Subgroup> normal_sylow_p;
  std::optional<Subgroup> normal_hall_p_prime;
};
NormalHallParts normal_hall_parts(const Group& g, long long p);

/// True when every nonidentity element of A centralizes only the identity
/// of D. Requires D normalized by A and A meeting D trivially.
bool is_frobenius_action(const Group& g, const Subgroup& a, const Subgroup& d);

}  // namespace ck
