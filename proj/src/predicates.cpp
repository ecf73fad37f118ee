#include "ck/predicates.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ck {

namespace {

bool mode_match(const PairModeSpec& mode, long long ox, long long oy,
                const std::optional<PrimePower>& px, const std::optional<PrimePower>& py) {
  if (ox <= 1 || oy <= 1 || std::gcd(ox, oy) != 1) return false;
  switch (mode.mode) {
    case PairMode::all_coprime:
      return true;
    case PairMode::prime_power:
      return px && py;
    case PairMode::p_vs_p_prime:
      return px && px->prime == mode.p && py && py->prime != mode.p;
    case PairMode::pi_restricted: {
      if (!px || !py) return false;
      const auto in_pi = [&](long long q) {
        return std::find(mode.pi.begin(), mode.pi.end(), q) != mode.pi.end();
      };
      return in_pi(px->prime) && in_pi(py->prime);
    }
  }
  return false;
}

// Ordered class pairs (i, j) of nonidentity classes matching the mode.
std::vector<std::pair<int, int>> class_pairs(const GroupContext& ctx, const PairModeSpec& mode) {
  const ClassData& cd = ctx.cd();
  const int r = cd.count();
  std::vector<long long> order(r);
  std::vector<std::optional<PrimePower>> pp(r);
  for (int c = 0; c < r; ++c) {
    order[c] = ctx.g().element_order(cd.rep(c));
    pp[c] = prime_power_info(order[c]);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < r; ++i) {
    for (int j = 1; j < r; ++j) {
      if (mode_match(mode, order[i], order[j], pp[i], pp[j])) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

// First y in class j with x*y landing in class k; exists whenever the
// class product hits k.
int find_partner(const GroupContext& ctx, int x, int j, int k) {
  for (int y : ctx.cd().members(j)) {
    if (ctx.cd().class_of(ctx.g().mult(x, y)) == k) return y;
  }
  throw std::logic_error("find_partner: class product support mismatch");
}

Witness pair_witness(const GroupContext& ctx, std::string kind, int i, int j, int k,
                     std::string note) {
  const int x = ctx.cd().rep(i);
  const int y = find_partner(ctx, x, j, k);
  Witness w;
  w.kind = std::move(kind);
  w.elements = {x, y};
  w.classes = {i, j, k};
  w.note = std::move(note);
  return w;
}

}  // namespace

std::vector<CoprimePair> coprime_pairs(const Group& g, const PairModeSpec& mode) {
  if (mode.mode == PairMode::p_vs_p_prime && !is_prime(mode.p))
    throw std::invalid_argument("coprime_pairs: p must be prime");
  if (mode.mode == PairMode::pi_restricted && mode.pi.empty())
    throw std::invalid_argument("coprime_pairs: empty prime set");
  std::vector<CoprimePair> out;
  std::vector<std::optional<PrimePower>> pp(g.order());
  for (int i = 0; i < g.order(); ++i) pp[i] = prime_power_info(g.element_order(i));
  for (int x = 1; x < g.order(); ++x) {
    for (int y = 1; y < g.order(); ++y) {
      const long long ox = g.element_order(x), oy = g.element_order(y);
      if (mode_match(mode, ox, oy, pp[x], pp[y]))
        out.push_back({x, y, ox, oy, pp[x], pp[y]});
    }
  }
  return out;
}

GroupContext GroupContext::build(std::shared_ptr<const Group> group) {
  GroupContext ctx;
  ctx.group = std::move(group);
  ctx.classes = std::make_shared<const ClassData>(*ctx.group);
  ctx.table =
      std::make_shared<const CharacterTable>(build_character_table(*ctx.group, *ctx.classes));
  ctx.chief = chief_series(*ctx.group);
  ctx.structure = structure_predicates(*ctx.group);
  return ctx;
}

PredicateResult bw_condition(const GroupContext& ctx, const PairModeSpec& mode,
                             bool element_level) {
  const Group& g = ctx.g();
  if (element_level) {
    for (const auto& pr : coprime_pairs(g, mode)) {
      if (g.element_order(g.mult(pr.x, pr.y)) != pr.ox * pr.oy) {
        Witness w{"bw", {pr.x, pr.y}, {}, -1, "o(xy) != o(x)o(y)"};
        return {false, std::move(w)};
      }
    }
    return {true, std::nullopt};
  }
  const ClassData& cd = ctx.cd();
  for (const auto& [i, j] : class_pairs(ctx, mode)) {
    const long long target = static_cast<long long>(g.element_order(cd.rep(i))) *
                             g.element_order(cd.rep(j));
    for (const auto& [k, a] : cd.coefficients(i, j).support) {
      if (g.element_order(cd.rep(k)) != target)
        return {false, pair_witness(ctx, "bw", i, j, k, "o(xy) != o(x)o(y)")};
    }
  }
  return {true, std::nullopt};
}

namespace {
PairModeSpec mode_for(std::optional<long long> p) {
  return p ? PairModeSpec::p_vs_p_prime(*p) : PairModeSpec::prime_power();
}
}  // namespace

PredicateResult thmA_condition(const GroupContext& ctx, std::optional<long long> p,
                               bool element_level) {
  const ClassData& cd = ctx.cd();
  if (element_level) {
    for (const auto& pr : coprime_pairs(ctx.g(), mode_for(p))) {
      const long long lhs = cd.size(cd.class_of(ctx.g().mult(pr.x, pr.y)));
      const long long rhs = cd.size(cd.class_of(pr.x)) * cd.size(cd.class_of(pr.y));
      if (lhs != rhs) {
        Witness w{"thmA", {pr.x, pr.y}, {}, -1, "|xy^G| != |x^G||y^G|"};
        return {false, std::move(w)};
      }
    }
    return {true, std::nullopt};
  }
  for (const auto& [i, j] : class_pairs(ctx, mode_for(p))) {
    const long long rhs = cd.size(i) * cd.size(j);
    for (const auto& [k, a] : cd.coefficients(i, j).support) {
      if (cd.size(k) != rhs)
        return {false, pair_witness(ctx, "thmA", i, j, k, "|xy^G| != |x^G||y^G|")};
    }
  }
  return {true, std::nullopt};
}

namespace {

// Brute set product of two classes, independent of the coefficient cache.
std::set<int> brute_product_classes(const GroupContext& ctx, int i, int j) {
  std::set<int> hit;
  for (int x : ctx.cd().members(i)) {
    for (int y : ctx.cd().members(j)) hit.insert(ctx.cd().class_of(ctx.g().mult(x, y)));
  }
  return hit;
}

}  // namespace

PredicateResult thmB_condition(const GroupContext& ctx, std::optional<long long> p,
                               bool element_level) {
  const ClassData& cd = ctx.cd();
  if (element_level) {
    std::map<std::pair<int, int>, bool> memo;
    for (const auto& pr : coprime_pairs(ctx.g(), mode_for(p))) {
      const auto key = std::make_pair(cd.class_of(pr.x), cd.class_of(pr.y));
      auto it = memo.find(key);
      if (it == memo.end())
        it = memo.emplace(key, brute_product_classes(ctx, key.first, key.second).size() == 1)
                 .first;
      if (!it->second) {
        Witness w{"thmB", {pr.x, pr.y}, {key.first, key.second}, -1,
                  "x^G y^G spans several classes"};
        return {false, std::move(w)};
      }
    }
    return {true, std::nullopt};
  }
  for (const auto& [i, j] : class_pairs(ctx, mode_for(p))) {
    const auto& prod = cd.coefficients(i, j);
    if (!prod.single_class()) {
      const int k = prod.support.begin()->first;
      return {false, pair_witness(ctx, "thmB", i, j, k, "x^G y^G spans several classes")};
    }
  }
  return {true, std::nullopt};
}

BiconditionalSides lemma_ch_equivalence(const GroupContext& ctx, int ci, int cj) {
  const ClassData& cd = ctx.cd();
  const CharacterTable& tab = ctx.tab();
  BiconditionalSides sides;
  const auto& prod = cd.coefficients(ci, cj);
  sides.set_side = prod.single_class();
  sides.char_side = true;
  const int e = static_cast<int>(tab.exponent());
  for (int r = 0; r < tab.row_count() && sides.char_side; ++r) {
    const CycValue rhs = tab.value(r, ci) * tab.value(r, cj);
    const CycValue deg = CycValue::integer(e, tab.row(r).degree);
    for (const auto& [k, a] : prod.support) {
      if (!(deg * tab.value(r, k) == rhs)) {
        sides.char_side = false;
        break;
      }
    }
  }
  return sides;
}

PredicateResult dade_yadav_condition(const GroupContext& ctx) {
  const ClassData& cd = ctx.cd();
  for (int i = 0; i < cd.count(); ++i) {
    for (int j = 0; j < cd.count(); ++j) {
      if (i == cd.inverse_class(j)) continue;
      const auto& prod = cd.coefficients(i, j);
      if (!prod.single_class()) {
        const int k = prod.support.begin()->first;
        return {false,
                pair_witness(ctx, "dy", i, j, k, "x^G y^G spans several classes")};
      }
    }
  }
  return {true, std::nullopt};
}

PredicateResult triple_condition(const GroupContext& ctx, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("triple_condition: p must be prime");
  const ClassData& cd = ctx.cd();
  const Group& g = ctx.g();
  const int r = cd.count();
  std::vector<std::optional<PrimePower>> pp(r);
  for (int c = 0; c < r; ++c) pp[c] = prime_power_info(g.element_order(cd.rep(c)));
  for (int i = 1; i < r; ++i) {
    if (!pp[i] || pp[i]->prime != p) continue;
    for (int j = 1; j < r; ++j) {
      if (!pp[j] || pp[j]->prime == p) continue;
      for (int k = 1; k < r; ++k) {
        if (!pp[k] || pp[k]->prime == p || pp[k]->prime == pp[j]->prime) continue;
        // 1 in Ci Cj Ck exactly when the product of Ci and Cj meets the
        // inverse class of Ck.
        const int ki = cd.inverse_class(k);
        if (!cd.coefficients(i, j).support.contains(ki)) continue;
        const int x = cd.rep(i);
        const int y = find_partner(ctx, x, j, ki);
        const int z = g.inv(g.mult(x, y));
        Witness w{"triple", {x, y, z}, {i, j, k}, -1, "xyz = 1"};
        return {false, std::move(w)};
      }
    }
  }
  return {true, std::nullopt};
}

PredicateResult char_mult_condition(const GroupContext& ctx, std::optional<long long> p,
                                    bool element_level) {
  const CharacterTable& tab = ctx.tab();
  if (element_level) {
    for (const auto& pr : coprime_pairs(ctx.g(), mode_for(p))) {
      const int xy = ctx.g().mult(pr.x, pr.y);
      for (int r = 0; r < tab.row_count(); ++r) {
        if (!(tab.evaluate(r, xy) == tab.evaluate(r, pr.x) * tab.evaluate(r, pr.y))) {
          Witness w{"char_mult", {pr.x, pr.y}, {}, r, "chi(xy) != chi(x)chi(y)"};
          return {false, std::move(w)};
        }
      }
    }
    return {true, std::nullopt};
  }
  const ClassData& cd = ctx.cd();
  for (const auto& [i, j] : class_pairs(ctx, mode_for(p))) {
    const auto& prod = cd.coefficients(i, j);
    for (int r = 0; r < tab.row_count(); ++r) {
      const CycValue rhs = tab.value(r, i) * tab.value(r, j);
      for (const auto& [k, a] : prod.support) {
        if (!(tab.value(r, k) == rhs)) {
          Witness w = pair_witness(ctx, "char_mult", i, j, k, "chi(xy) != chi(x)chi(y)");
          w.char_row = r;
          return {false, std::move(w)};
        }
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

std::optional<StructureWitness> try_structure(const GroupContext& ctx, long long p,
                                              const Subgroup& h, bool hall_variant) {
  const Group& g = ctx.g();
  const long long m = g.order() / h.order();
  if (m <= 1) return std::nullopt;
  // First element giving a cyclic complement; complements over a normal
  // Hall subgroup are conjugate, so any choice is as good as another.
  std::optional<Subgroup> complement;
  for (int a = 1; a < g.order(); ++a) {
    if (g.element_order(a) != m) continue;
    Subgroup cand = Subgroup::generated(g, {a});
    if (intersect(cand, h).order() == 1) {
      complement = std::move(cand);
      break;
    }
  }
  if (!complement) return std::nullopt;

  StructureWitness w;
  w.p = p;
  w.hall_variant = hall_variant;
  w.H = h;
  w.A = std::move(*complement);
  w.flag_i = true;  // H normal, A cyclic nontrivial, |A||H| = |G|

  const int a0 = w.A.generator_witnesses().front();
  std::vector<int> cz;
  for (int x : w.H.members()) {
    if (g.mult(x, a0) == g.mult(a0, x)) cz.push_back(x);
  }
  w.C = Subgroup::from_members(g, std::move(cz));
  w.D = commutator_subgroup(g, w.H, w.A);

  const bool d_normal = w.D.is_normal();
  w.flag_ii = w.C.is_abelian() && d_normal && intersect(w.C, w.D).order() == 1 &&
              w.C.order() * w.D.order() == w.H.order();
  w.flag_iii = d_normal && intersect(w.A, w.D).order() == 1 &&
               is_frobenius_action(g, w.A, w.D);
  w.c_normal = w.C.is_normal();
  return w;
}

}  // namespace

ThmCPrimeVerdict thmC_structure_at(const GroupContext& ctx, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("thmC_structure_at: p must be prime");
  const Group& g = ctx.g();
  ThmCPrimeVerdict verdict;
  const long long pp = p_part(g.order(), p);
  if (pp == g.order()) {
    verdict.kind = ThmCPrimeVerdict::Case::p_group;
    verdict.holds = true;
    return verdict;
  }
  if (pp == 1) {
    verdict.kind = ThmCPrimeVerdict::Case::p_prime_group;
    verdict.holds = true;
    return verdict;
  }
  if (ctx.structure.is_abelian) {
    verdict.kind = ThmCPrimeVerdict::Case::abelian_group;
    verdict.holds = true;
    return verdict;
  }
  const NormalHallParts parts = normal_hall_parts(g, p);
  if (parts.normal_sylow_p) {
    auto w = try_structure(ctx, p, *parts.normal_sylow_p, false);
    if (w && w->all_flags()) {
      verdict.kind = ThmCPrimeVerdict::Case::structured;
      verdict.holds = true;
      verdict.witness = std::move(w);
      return verdict;
    }
    if (w && !verdict.witness) verdict.witness = std::move(w);
  }
  if (parts.normal_hall_p_prime) {
    auto w = try_structure(ctx, p, *parts.normal_hall_p_prime, true);
    if (w && w->all_flags()) {
      verdict.kind = ThmCPrimeVerdict::Case::structured;
      verdict.holds = true;
      verdict.witness = std::move(w);
      return verdict;
    }
    if (w && !verdict.witness) verdict.witness = std::move(w);
  }
  verdict.kind = ThmCPrimeVerdict::Case::none;
  verdict.holds = false;
  return verdict;
}

ThmCOutcome thmC_structure(const GroupContext& ctx) {
  const Group& g = ctx.g();
  ThmCOutcome out;
  for (long long p : prime_divisors(g.order())) out.per_prime.emplace(p, thmC_structure_at(ctx, p));

  if (g.order() == 1 || ctx.structure.is_abelian || prime_power_info(g.order())) {
    out.global_holds = true;
    return out;
  }
  // The global form asks for a cyclic p'-complement over a normal Sylow
  // p-subgroup for some prime p.
  for (const auto& [p, verdict] : out.per_prime) {
    if (verdict.kind == ThmCPrimeVerdict::Case::structured && verdict.witness &&
        !verdict.witness->hall_variant && verdict.witness->all_flags()) {
      out.global_holds = true;
      out.global_witness = verdict.witness;
      return out;
    }
  }
  out.global_holds = false;
  return out;
}

LemmaKeyResult lemma_key_implications(const GroupContext& ctx, int ci, int cj) {
  if (ci <= 0 || cj <= 0)
    throw std::invalid_argument("lemma_key_implications: classes must be nontrivial");
  const ClassData& cd = ctx.cd();
  const CharacterTable& tab = ctx.tab();
  const Group& g = ctx.g();

  LemmaKeyResult res;
  const auto& prod = cd.coefficients(ci, cj);
  res.hypothesis_holds = true;
  for (int r = 0; r < tab.row_count() && res.hypothesis_holds; ++r) {
    const CycValue rhs = tab.value(r, ci) * tab.value(r, cj);
    for (const auto& [k, a] : prod.support) {
      if (!(tab.value(r, k) == rhs)) {
        res.hypothesis_holds = false;
        break;
      }
    }
  }
  if (!res.hypothesis_holds) return res;

  res.single_class = prod.single_class();

  res.nonlinear_vanish = true;
  for (int r = 0; r < tab.row_count(); ++r) {
    if (tab.row(r).linear) continue;
    for (const auto& [k, a] : prod.support) {
      if (!tab.value(r, k).is_zero()) res.nonlinear_vanish = false;
    }
  }

  res.coset_equal = false;
  if (res.single_class) {
    const int k = prod.support.begin()->first;
    const Subgroup derived = derived_subgroup(g);
    const int xy = g.mult(cd.rep(ci), find_partner(ctx, cd.rep(ci), cj, k));
    std::vector<int> coset;
    for (int n : derived.members()) coset.push_back(g.mult(xy, n));
    std::sort(coset.begin(), coset.end());
    res.coset_equal = coset == cd.members(k) &&
                      g.order() / cd.size(k) == g.order() / derived.order();
  }
  return res;
}

PiConditionResult pi_condition(const GroupContext& ctx, long long p, long long q) {
  if (!is_prime(p) || !is_prime(q) || p == 2 || q == 2 || p == q)
    throw std::invalid_argument("pi_condition: p, q must be distinct odd primes");
  PiConditionResult res;
  const ClassData& cd = ctx.cd();
  res.hypothesis_holds = true;
  for (const auto& [i, j] : class_pairs(ctx, PairModeSpec::pi_restricted({2, p, q}))) {
    const auto& prod = cd.coefficients(i, j);
    if (!prod.single_class()) {
      res.hypothesis_holds = false;
      const int k = prod.support.begin()->first;
      res.violating_pair = pair_witness(ctx, "pi_pair", i, j, k, "pi-pair with split product");
      break;
    }
  }
  res.conclusion_holds = true;
  for (long long f : ctx.chief.factor_orders) {
    if (f % p == 0 && f % q == 0) {
      res.conclusion_holds = false;
      res.offending_factor = f;
      break;
    }
  }
  return res;
}

std::vector<MultiplicativeRow> multiplicative_characters(const GroupContext& ctx) {
  const ClassData& cd = ctx.cd();
  const CharacterTable& tab = ctx.tab();
  const Group& g = ctx.g();
  const auto pairs = class_pairs(ctx, PairModeSpec::all_coprime());

  std::vector<MultiplicativeRow> out;
  for (int r = 0; r < tab.row_count(); ++r) {
    bool mult = true;
    for (const auto& [i, j] : pairs) {
      const CycValue rhs = tab.value(r, i) * tab.value(r, j);
      for (const auto& [k, a] : cd.coefficients(i, j).support) {
        if (!(tab.value(r, k) == rhs)) {
          mult = false;
          break;
        }
      }
      if (!mult) break;
    }
    if (!mult) continue;

    MultiplicativeRow row;
    row.row = r;
    row.is_faithful = tab.row(r).kernel_classes == std::vector<int>{0};
    // Smallest candidate: the subgroup generated by the nonvanishing set,
    // normal since that set is a union of classes.
    std::vector<int> seed{0};
    for (int c = 0; c < cd.count(); ++c) {
      if (!tab.value(r, c).is_zero())
        seed.insert(seed.end(), cd.members(c).begin(), cd.members(c).end());
    }
    Subgroup support_closure = Subgroup::generated(g, seed);
    if (support_closure.order() == 1 || prime_power_info(support_closure.order()))
      row.vanishing_normal_p_subgroup = std::move(support_closure);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<int> gagola_rows(const GroupContext& ctx) {
  const CharacterTable& tab = ctx.tab();
  std::vector<int> out;
  for (int r = 0; r < tab.row_count(); ++r) {
    int nonzero = 0;
    for (int c = 0; c < ctx.cd().count(); ++c) {
      if (!tab.value(r, c).is_zero()) ++nonzero;
    }
    if (nonzero == 2) out.push_back(r);
  }
  return out;
}

bool replay_witness(const GroupContext& ctx, const PredicateResult& result) {
  if (!result.witness) return false;
  const Witness& w = *result.witness;
  const Group& g = ctx.g();
  const ClassData& cd = ctx.cd();
  if (w.kind == "bw") {
    const int x = w.elements.at(0), y = w.elements.at(1);
    return g.element_order(g.mult(x, y)) !=
           static_cast<long long>(g.element_order(x)) * g.element_order(y);
  }
  if (w.kind == "thmA") {
    const int x = w.elements.at(0), y = w.elements.at(1);
    return cd.size(cd.class_of(g.mult(x, y))) !=
           cd.size(cd.class_of(x)) * cd.size(cd.class_of(y));
  }
  if (w.kind == "thmB" || w.kind == "dy" || w.kind == "pi_pair") {
    const int x = w.elements.at(0), y = w.elements.at(1);
    return brute_product_classes(ctx, cd.class_of(x), cd.class_of(y)).size() > 1;
  }
  if (w.kind == "char_mult") {
    const int x = w.elements.at(0), y = w.elements.at(1);
    const auto& tab = ctx.tab();
    return !(tab.evaluate(w.char_row, g.mult(x, y)) ==
             tab.evaluate(w.char_row, x) * tab.evaluate(w.char_row, y));
  }
  if (w.kind == "triple") {
    const int x = w.elements.at(0), y = w.elements.at(1), z = w.elements.at(2);
    if (g.mult(g.mult(x, y), z) != 0) return false;
    const auto px = prime_power_info(g.element_order(x));
    const auto py = prime_power_info(g.element_order(y));
    const auto pz = prime_power_info(g.element_order(z));
    return px && py && pz && py->prime != pz->prime && px->prime != py->prime &&
           px->prime != pz->prime;
  }
  return false;
}

}  // namespace ck
