#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ck/character_table.hpp"
#include "ck/classes.hpp"
#include "ck/group.hpp"
#include "ck/numtheory.hpp"
#include "ck/structure.hpp"

namespace ck {

/// Pair quantifier modes for the coprime-order conditions.
enum class PairMode {
  all_coprime,    // nonidentity x, y with coprime orders
  prime_power,    // both of prime power order (distinct primes)
  p_vs_p_prime,   // x a p-element, y a p'-element of prime power order
  pi_restricted,  // both prime-power pi-elements, coprime
};

struct PairModeSpec {
  PairMode mode = PairMode::prime_power;
  long long p = 0;               // for p_vs_p_prime
  std::vector<long long> pi;     // for pi_restricted

  static PairModeSpec all_coprime() { return {PairMode::all_coprime, 0, {}}; }
  static PairModeSpec prime_power() { return {PairMode::prime_power, 0, {}}; }
  static PairModeSpec p_vs_p_prime(long long p) { return {PairMode::p_vs_p_prime, p, {}}; }
  static PairModeSpec pi_restricted(std::vector<long long> pi) {
    return {PairMode::pi_restricted, 0, std::move(pi)};
  }
};

struct CoprimePair {
  int x = 0;
  int y = 0;
  long long ox = 0;
  long long oy = 0;
  std::optional<PrimePower> px;
  std::optional<PrimePower> py;
};

/// All element-level pairs matching the mode. Quadratic; meant for small
/// groups and oracle cross-checks.
std::vector<CoprimePair> coprime_pairs(const Group& g, const PairModeSpec& mode);

struct Witness {
  std::string kind;
  std::vector<int> elements;
  std::vector<int> classes;
  int char_row = -1;
  std::string note;
};

struct PredicateResult {
  bool holds = true;
  std::optional<Witness> witness;
};

/// Per-group bundle of everything the predicates consume. Construction is
/// the expensive step; the bundle is immutable afterwards.
struct GroupContext {
  std::shared_ptr<const Group> group;
  std::shared_ptr<const ClassData> classes;
  std::shared_ptr<const CharacterTable> table;
  ChiefSeries chief;
  StructurePredicates structure;

  const Group& g() const { return *group; }
  const ClassData& cd() const { return *classes; }
  const CharacterTable& tab() const { return *table; }

  static GroupContext build(std::shared_ptr<const Group> group);
};

/// o(xy) = o(x) o(y) over the mode (all_coprime or prime_power).
PredicateResult bw_condition(const GroupContext& ctx, const PairModeSpec& mode,
                             bool element_level = false);

/// |(xy)^G| = |x^G| |y^G| over prime-power pairs, or p-vs-p' pairs when a
/// prime is given.
PredicateResult thmA_condition(const GroupContext& ctx, std::optional<long long> p,
                               bool element_level = false);

/// (xy)^G = x^G y^G over the same modes.
PredicateResult thmB_condition(const GroupContext& ctx, std::optional<long long> p,
                               bool element_level = false);

struct BiconditionalSides {
  bool set_side = false;   // the set product is a single class
  bool char_side = false;  // chi(1) chi(z) = chi(x) chi(y) for all rows, z
  bool agree() const { return set_side == char_side; }
};
BiconditionalSides lemma_ch_equivalence(const GroupContext& ctx, int ci, int cj);

/// x^G y^G = (xy)^G whenever x^G != (y^-1)^G.
PredicateResult dade_yadav_condition(const GroupContext& ctx);

/// holds means no triple: no nontrivial p-, q-, r-elements (q != r, both
/// != p) multiplying to the identity. A found triple is the witness.
PredicateResult triple_condition(const GroupContext& ctx, long long p);

/// chi(xy) = chi(x) chi(y) for every irreducible row over the mode.
PredicateResult char_mult_condition(const GroupContext& ctx, std::optional<long long> p,
                                    bool element_level = false);

struct StructureWitness {
  long long p = 0;
  bool hall_variant = false;  // H is a normal Hall p'-subgroup, not a Sylow p
  Subgroup H, A, C, D;
  bool flag_i = false;
  bool flag_ii = false;
  bool flag_iii = false;
  bool c_normal = false;
  bool all_flags() const { return flag_i && flag_ii && flag_iii; }
};

struct ThmCPrimeVerdict {
  enum class Case { p_group, p_prime_group, abelian_group, structured, none };
  Case kind = Case::none;
  bool holds = false;
  std::optional<StructureWitness> witness;
};

struct ThmCOutcome {
  bool global_holds = false;
  std::optional<StructureWitness> global_witness;  // Sylow-variant structure
  std::map<long long, ThmCPrimeVerdict> per_prime;
};

/// Four-case structural classification, per prime and globally.
ThmCOutcome thmC_structure(const GroupContext& ctx);
ThmCPrimeVerdict thmC_structure_at(const GroupContext& ctx, long long p);

struct LemmaKeyResult {
  bool hypothesis_holds = false;
  bool single_class = false;       // (i)
  bool nonlinear_vanish = false;   // (ii)
  bool coset_equal = false;        // (iii) (xy)^G = xy G' and |C(xy)| = |G:G'|
  bool conclusions_ok() const { return single_class && nonlinear_vanish && coset_equal; }
};
LemmaKeyResult lemma_key_implications(const GroupContext& ctx, int ci, int cj);

struct PiConditionResult {
  bool hypothesis_holds = false;
  bool conclusion_holds = false;  // no chief factor with order divisible by pq
  std::optional<Witness> violating_pair;
  std::optional<long long> offending_factor;
  bool implication_holds() const { return !hypothesis_holds || conclusion_holds; }
};
/// pi = {2, p, q} for distinct odd primes p, q.
PiConditionResult pi_condition(const GroupContext& ctx, long long p, long long q);

struct MultiplicativeRow {
  int row = -1;
  bool is_faithful = false;
  std::optional<Subgroup> vanishing_normal_p_subgroup;
};
/// Rows with chi(xy) = chi(x) chi(y) over all coprime nonidentity pairs.
std::vector<MultiplicativeRow> multiplicative_characters(const GroupContext& ctx);

/// Rows vanishing on all but exactly two classes.
std::vector<int> gagola_rows(const GroupContext& ctx);

/// Replays a witness through raw element arithmetic and table lookups;
/// true when it reproduces the reported violation or triple.
bool replay_witness(const GroupContext& ctx, const PredicateResult& result);

}  // namespace ck
