#include "ck/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace ck {

namespace {
constexpr long long kDefaultCap = 20000;
constexpr long long kMultTableCap = 5000;
}  // namespace

long long order_cap() {
  static const long long cap = [] {
    if (const char* s = std::getenv("COPRIME_KIT_ORDER_CAP")) {
      const long long v = std::atoll(s);
      if (v > 0) return v;
    }
    return kDefaultCap;
  }();
  return cap;
}

Group Group::generate(std::vector<Permutation> gens, std::string name, long long cap) {
  if (gens.empty()) throw std::invalid_argument("generate: no generators");
  const int degree = gens[0].degree();
  for (const auto& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("generate: generator degree mismatch");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Group out;
  out.name_ = std::move(name);
  out.degree_ = degree;
  out.elements_.emplace_back(degree);
  out.index_.emplace(out.elements_[0], 0);
  for (size_t at = 0; at < out.elements_.size(); ++at) {
    for (const auto& g : gens) {
      Permutation p = compose(out.elements_[at], g);
      if (out.index_.contains(p)) continue;
      if (static_cast<long long>(out.elements_.size()) >= cap)
        throw std::runtime_error("generate: order cap " + std::to_string(cap) +
                                 " exceeded for " + out.name_);
      out.index_.emplace(p, static_cast<int>(out.elements_.size()));
      out.elements_.push_back(std::move(p));
    }
  }

  const int n = out.order();
  for (const auto& g : gens) out.generators_.push_back(out.index_.at(g));

  if (n <= kMultTableCap) {
    out.mult_table_.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        out.mult_table_[static_cast<size_t>(i) * n + j] =
            out.index_.at(compose(out.elements_[i], out.elements_[j]));
    }
  }

  out.inverse_.resize(n);
  for (int i = 0; i < n; ++i) out.inverse_[i] = out.index_.at(out.elements_[i].inverse());

  out.orders_.resize(n);
  for (int i = 0; i < n; ++i) {
    int k = i, ord = 1;
    while (k != 0) {
      k = out.mult(k, i);
      ++ord;
    }
    out.orders_[i] = ord;
  }
  return out;
}

int Group::power(int i, long long k) const {
  const int ord = orders_[i];
  k %= ord;
  if (k < 0) k += ord;
  int r = 0;
  for (long long s = 0; s < k; ++s) r = mult(r, i);
  return r;
}

int Group::index_of(const Permutation& p) const {
  const auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

long long Group::exponent() const {
  long long e = 1;
  for (int o : orders_) e = std::lcm(e, static_cast<long long>(o));
  return e;
}

bool Group::is_abelian() const {
  for (int a : generators_) {
    for (int b : generators_) {
      if (mult(a, b) != mult(b, a)) return false;
    }
  }
  return true;
}

namespace {

std::vector<int> closure_of(const Group& g, const std::vector<int>& seed) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> list;
  in[0] = true;
  list.push_back(0);
  std::vector<int> gens;
  for (int s : seed) {
    if (!in[s]) {
      in[s] = true;
      list.push_back(s);
    }
    gens.push_back(s);
  }
  for (size_t at = 0; at < list.size(); ++at) {
    for (int s : gens) {
      const int t = g.mult(list[at], s);
      if (!in[t]) {
        in[t] = true;
        list.push_back(t);
      }
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

}  // namespace

Subgroup Subgroup::generated(const Group& g, std::vector<int> seed) {
  Subgroup s;
  s.parent_ = &g;
  s.members_ = closure_of(g, seed);
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  s.witnesses_ = std::move(seed);
  return s;
}

Subgroup Subgroup::trivial(const Group& g) {
  Subgroup s;
  s.parent_ = &g;
  s.members_ = {0};
  return s;
}

Subgroup Subgroup::whole(const Group& g) {
  Subgroup s;
  s.parent_ = &g;
  s.members_.resize(g.order());
  std::iota(s.members_.begin(), s.members_.end(), 0);
  s.witnesses_ = g.generators();
  return s;
}

Subgroup Subgroup::from_members(const Group& g, std::vector<int> members,
                                std::vector<int> witnesses) {
  Subgroup s;
  s.parent_ = &g;
  std::sort(members.begin(), members.end());
  if (witnesses.empty()) witnesses = members;
  s.members_ = std::move(members);
  s.witnesses_ = std::move(witnesses);
  return s;
}

bool Subgroup::contains(int i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

bool Subgroup::is_normal() const {
  for (int m : members_) {
    for (int g : parent_->generators()) {
      if (!contains(parent_->conjugate(m, g))) return false;
    }
  }
  return true;
}

bool Subgroup::is_abelian() const {
  for (size_t a = 0; a < members_.size(); ++a) {
    for (size_t b = a + 1; b < members_.size(); ++b) {
      if (parent_->mult(members_[a], members_[b]) != parent_->mult(members_[b], members_[a]))
        return false;
    }
  }
  return true;
}

bool Subgroup::is_cyclic() const {
  for (int m : members_) {
    if (parent_->element_order(m) == order()) return true;
  }
  return false;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (&a.parent() != &b.parent()) throw std::invalid_argument("intersect: different parents");
  std::vector<int> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(common));
  return Subgroup::from_members(a.parent(), std::move(common));
}

long long product_set_size(const Subgroup& a, const Subgroup& b) {
  return a.order() * b.order() / intersect(a, b).order();
}

Subgroup centralizer(const Group& g, int i) {
  std::vector<int> members;
  for (int j = 0; j < g.order(); ++j) {
    if (g.mult(j, i) == g.mult(i, j)) members.push_back(j);
  }
  return Subgroup::from_members(g, std::move(members));
}

Subgroup normal_closure(const Group& g, const std::vector<int>& seed) {
  if (seed.empty()) throw std::invalid_argument("normal_closure: empty seed");
  // Conjugation orbit of the seed, then subgroup closure; a subgroup
  // generated by a conjugation-closed set is normal.
  std::vector<bool> in(g.order(), false);
  std::vector<int> orbit;
  for (int s : seed) {
    if (!in[s]) {
      in[s] = true;
      orbit.push_back(s);
    }
  }
  for (size_t at = 0; at < orbit.size(); ++at) {
    for (int gen : g.generators()) {
      const int c = g.conjugate(orbit[at], gen);
      if (!in[c]) {
        in[c] = true;
        orbit.push_back(c);
      }
    }
  }
  return Subgroup::generated(g, orbit);
}

Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<bool> seen(g.order(), false);
  std::vector<int> comms;
  for (int x : a.members()) {
    const int xi = g.inv(x);
    for (int y : b.members()) {
      const int c = g.mult(g.mult(xi, g.inv(y)), g.mult(x, y));
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  }
  return Subgroup::generated(g, comms);
}

Subgroup derived_subgroup(const Group& g, DerivedPath path) {
  const bool scan = path == DerivedPath::pair_scan ||
                    (path == DerivedPath::automatic && g.order() <= 5000);
  if (scan) return commutator_subgroup(g, Subgroup::whole(g), Subgroup::whole(g));
  // Above the pair-scan cap: normal closure of generator-pair commutators.
  std::vector<int> comms;
  for (int x : g.generators()) {
    for (int y : g.generators()) {
      comms.push_back(g.mult(g.mult(g.inv(x), g.inv(y)), g.mult(x, y)));
    }
  }
  return normal_closure(g, comms);
}

std::vector<int> conjugation_orbit_ids(const Group& g) {
  std::vector<int> id(g.order(), -1);
  int next = 0;
  std::vector<int> queue;
  for (int i = 0; i < g.order(); ++i) {
    if (id[i] >= 0) continue;
    const int me = next++;
    id[i] = me;
    queue.assign(1, i);
    for (size_t at = 0; at < queue.size(); ++at) {
      for (int gen : g.generators()) {
        const int c = g.conjugate(queue[at], gen);
        if (id[c] < 0) {
          id[c] = me;
          queue.push_back(c);
        }
      }
    }
  }
  return id;
}

}  // namespace ck
