#include "ck/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ck/numtheory.hpp"

namespace ck {

std::vector<Subgroup> derived_series(const Group& g) {
  std::vector<Subgroup> series;
  series.push_back(Subgroup::whole(g));
  for (;;) {
    const Subgroup& cur = series.back();
    Subgroup next = series.size() == 1 ? derived_subgroup(g)
                                       : commutator_subgroup(g, cur, cur);
    if (next.order() == cur.order()) break;
    series.push_back(std::move(next));
    if (series.back().order() == 1) break;
  }
  return series;
}

namespace {

// Normal closure order per conjugation orbit; closures are constant on
// orbits since ncl(x^g) = ncl(x).
std::vector<long long> orbit_closure_orders(const Group& g, const std::vector<int>& orbit_id) {
  const int n_orbits = *std::max_element(orbit_id.begin(), orbit_id.end()) + 1;
  std::vector<int> rep(n_orbits, -1);
  for (int i = 0; i < g.order(); ++i) {
    if (rep[orbit_id[i]] < 0) rep[orbit_id[i]] = i;
  }
  std::vector<long long> ord(n_orbits);
  for (int c = 0; c < n_orbits; ++c) ord[c] = normal_closure(g, {rep[c]}).order();
  return ord;
}

bool is_power_of(long long n, long long p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

Subgroup p_core(const Group& g, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("p_core: p must be prime");
  const auto orbit_id = conjugation_orbit_ids(g);
  const auto closure_orders = orbit_closure_orders(g, orbit_id);
  std::vector<int> seed{0};
  for (int i = 1; i < g.order(); ++i) {
    if (is_power_of(closure_orders[orbit_id[i]], p)) seed.push_back(i);
  }
  return Subgroup::generated(g, seed);
}

Subgroup fitting_subgroup(const Group& g) {
  std::vector<int> seed{0};
  for (long long p : prime_divisors(g.order())) {
    const Subgroup core = p_core(g, p);
    seed.insert(seed.end(), core.members().begin(), core.members().end());
  }
  return Subgroup::generated(g, seed);
}

QuotientResult quotient(const Group& g, const Subgroup& n) {
  if (&n.parent() != &g) throw std::invalid_argument("quotient: subgroup of another group");
  if (!n.is_normal()) throw std::invalid_argument("quotient: subgroup is not normal");

  // Enumerate cosets Ng in order of least representative; coset 0 is N.
  const int order = g.order();
  std::vector<int> coset_of(order, -1);
  std::vector<int> coset_rep;
  for (int i = 0; i < order; ++i) {
    if (coset_of[i] >= 0) continue;
    const int c = static_cast<int>(coset_rep.size());
    coset_rep.push_back(i);
    for (int m : n.members()) coset_of[g.mult(m, i)] = c;
  }
  const int n_cosets = static_cast<int>(coset_rep.size());

  // Right multiplication on cosets; with left-to-right composition this
  // makes the coset map a homomorphism.
  auto action = [&](int x) {
    std::vector<int> images(n_cosets);
    for (int c = 0; c < n_cosets; ++c) images[c] = coset_of[g.mult(coset_rep[c], x)];
    return Permutation(std::move(images));
  };

  std::vector<Permutation> qgens;
  for (int gen : g.generators()) qgens.push_back(action(gen));
  if (qgens.empty()) qgens.emplace_back(n_cosets);
  QuotientResult out{Group::generate(std::move(qgens),
                                     g.name() + "/N" + std::to_string(n.order())),
                     {}};
  if (out.group.order() != order / n.order())
    throw std::logic_error("quotient: coset action order mismatch");
  out.projection.resize(order);
  for (int i = 0; i < order; ++i) out.projection[i] = out.group.index_of(action(i));
  return out;
}

ChiefSeries chief_series(const Group& g) {
  // Ascending refinement: above each term pick a minimal normal subgroup of
  // G in the quotient sense, located as the least-order normal closure of
  // the term plus one extra element. Reversed at the end.
  std::vector<Subgroup> ascending;
  ascending.push_back(Subgroup::trivial(g));
  const auto orbit_id = conjugation_orbit_ids(g);
  while (ascending.back().order() < g.order()) {
    const Subgroup& cur = ascending.back();
    std::optional<Subgroup> best;
    std::vector<bool> orbit_done(g.order(), false);
    for (int x = 0; x < g.order(); ++x) {
      if (cur.contains(x) || orbit_done[orbit_id[x]]) continue;
      orbit_done[orbit_id[x]] = true;
      std::vector<int> seed = cur.generator_witnesses();
      seed.push_back(x);
      Subgroup cand = normal_closure(g, seed);
      if (!best || cand.order() < best->order()) best = std::move(cand);
    }
    ascending.push_back(std::move(*best));
  }

  ChiefSeries out;
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) out.subgroups.push_back(*it);
  for (size_t i = 0; i + 1 < out.subgroups.size(); ++i) {
    const long long f = out.subgroups[i].order() / out.subgroups[i + 1].order();
    out.factor_orders.push_back(f);
    out.factor_prime_supports.push_back(prime_divisors(f));
  }
  return out;
}

bool is_p_solvable(const ChiefSeries& series, long long p) {
  for (long long f : series.factor_orders) {
    if (f % p == 0 && !is_power_of(f, p)) return false;
  }
  return true;
}

bool is_p_solvable(const Group& g, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("is_p_solvable: p must be prime");
  return is_p_solvable(chief_series(g), p);
}

StructurePredicates structure_predicates(const Group& g) {
  StructurePredicates out;
  out.is_abelian = g.is_abelian();
  out.is_nilpotent = fitting_subgroup(g).order() == g.order();
  const auto series = derived_series(g);
  out.is_solvable = series.back().order() == 1;
  // The series ends at 1 within [G, G', G''] exactly when G'' = 1.
  out.is_metabelian = out.is_solvable && series.size() <= 3;
  return out;
}

NormalHallParts normal_hall_parts(const Group& g, long long p) {
  if (!is_prime(p) || g.order() % p != 0)
    throw std::invalid_argument("normal_hall_parts: p must be a prime dividing |G|");
  NormalHallParts out;
  const long long pp = p_part(g.order(), p);
  Subgroup core = p_core(g, p);
  if (core.order() == pp) out.normal_sylow_p = std::move(core);
  std::vector<int> seed{0};
  for (int i = 1; i < g.order(); ++i) {
    if (g.element_order(i) % p != 0) seed.push_back(i);
  }
  Subgroup hall = Subgroup::generated(g, seed);
  if (hall.order() == g.order() / pp) out.normal_hall_p_prime = std::move(hall);
  return out;
}

bool is_frobenius_action(const Group& g, const Subgroup& a, const Subgroup& d) {
  for (int w : a.generator_witnesses()) {
    for (int m : d.members()) {
      if (!d.contains(g.conjugate(m, w)))
        throw std::invalid_argument("is_frobenius_action: D is not normalized by A");
    }
  }
  if (intersect(a, d).order() != 1)
    throw std::invalid_argument("is_frobenius_action: A meets D nontrivially");
  for (int x : a.members()) {
    if (x == 0) continue;
    for (int m : d.members()) {
      if (m == 0) continue;
      if (g.mult(x, m) == g.mult(m, x)) return false;
    }
  }
  return true;
}

}  // namespace ck
