// Acceptance suite: runs every top-level requirement over the built-in
// corpus and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "ck/corpus.hpp"
#include "ck/predicates.hpp"
#include "ck/report.hpp"

using namespace ck;

namespace {

struct Criterion {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<Criterion> results;

void record(int id, const std::string& name, bool pass, const std::string& detail = "") {
  results.push_back({id, name, pass, detail});
}

bool exact_orthogonality(const GroupContext& ctx, std::string& why) {
  const CharacterTable& tab = ctx.tab();
  const ClassData& cd = ctx.cd();
  const int e = static_cast<int>(tab.exponent());
  for (int a = 0; a < tab.row_count(); ++a) {
    for (int b = 0; b < tab.row_count(); ++b) {
      CycValue sum = CycValue::integer(e, 0);
      for (int c = 0; c < cd.count(); ++c)
        sum = sum + CycValue::integer(e, cd.size(c)) * tab.value(a, c) *
                        tab.value(b, c).conjugate();
      if (!sum.is_integer(a == b ? ctx.g().order() : 0)) {
        why = "row orthogonality fails at rows " + std::to_string(a) + "," + std::to_string(b);
        return false;
      }
    }
  }
  for (int ci = 0; ci < cd.count(); ++ci) {
    for (int cj = 0; cj < cd.count(); ++cj) {
      CycValue sum = CycValue::integer(e, 0);
      for (int r = 0; r < tab.row_count(); ++r)
        sum = sum + tab.value(r, ci) * tab.value(r, cj).conjugate();
      if (!sum.is_integer(ci == cj ? ctx.g().order() / cd.size(ci) : 0)) {
        why = "column orthogonality fails at classes " + std::to_string(ci) + "," +
              std::to_string(cj);
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  const auto t_start = std::chrono::steady_clock::now();
  const Corpus corpus = default_corpus();

  std::vector<std::string> names;
  std::map<std::string, GroupContext> ctxs;
  for (size_t i = 0; i < corpus.size(); ++i) {
    names.push_back(corpus.specs[i].name);
    ctxs.emplace(corpus.specs[i].name, GroupContext::build(corpus.groups[i]));
  }
  const auto ctx_of = [&](const std::string& n) -> const GroupContext& { return ctxs.at(n); };

  // 1. Character-table validity across the corpus (timing asserted at the end).
  bool c1 = corpus.size() >= 25;
  std::string c1_why = c1 ? "" : "corpus too small";
  for (const auto& name : names) {
    const GroupContext& ctx = ctx_of(name);
    const long long order = ctx.g().order();
    if (order < 1 || order > 2000) {
      c1 = false;
      c1_why = name + ": order out of range";
      break;
    }
    if (ctx.tab().row_count() != ctx.cd().count()) {
      c1 = false;
      c1_why = name + ": row count != class count";
      break;
    }
    long long degsum = 0;
    for (const auto& row : ctx.tab().rows()) {
      degsum += row.degree * row.degree;
      if (order % row.degree != 0) {
        c1 = false;
        c1_why = name + ": degree does not divide order";
      }
    }
    if (degsum != order) {
      c1 = false;
      c1_why = name + ": sum of squared degrees != order";
      break;
    }
    std::string why;
    if (!exact_orthogonality(ctx, why)) {
      c1 = false;
      c1_why = name + ": " + why;
      break;
    }
  }

  // 2. Known tables: S3 and Q8.
  {
    bool ok = true;
    std::string why;
    const GroupContext& s3 = ctx_of("S3");
    const int e3 = static_cast<int>(s3.tab().exponent());
    std::vector<long long> degrees;
    for (const auto& row : s3.tab().rows()) degrees.push_back(row.degree);
    if (degrees != std::vector<long long>{1, 1, 2}) {
      ok = false;
      why = "S3 degrees wrong";
    }
    int transpositions = -1, threecycles = -1;
    for (int c = 0; c < s3.cd().count(); ++c) {
      const int o = s3.g().element_order(s3.cd().rep(c));
      if (o == 2) transpositions = c;
      if (o == 3) threecycles = c;
    }
    if (ok && !(s3.tab().value(2, 0).is_integer(2) &&
                s3.tab().value(2, transpositions).is_integer(0) &&
                s3.tab().value(2, threecycles).is_integer(-1))) {
      ok = false;
      why = "S3 degree-2 row is not (2, 0, -1)";
    }
    const GroupContext& q8 = ctx_of("Q8");
    degrees.clear();
    for (const auto& row : q8.tab().rows()) degrees.push_back(row.degree);
    if (ok && degrees != std::vector<long long>{1, 1, 1, 1, 2}) {
      ok = false;
      why = "Q8 degrees wrong";
    }
    int central = -1;
    for (int c = 0; c < q8.cd().count(); ++c) {
      if (q8.cd().size(c) == 1 && q8.g().element_order(q8.cd().rep(c)) == 2) central = c;
    }
    const int e8 = static_cast<int>(q8.tab().exponent());
    if (ok && !q8.tab().value(4, central).is_integer(-2)) {
      ok = false;
      why = "Q8 degree-2 row misses -2 on the central involution";
    }
    (void)e3;
    (void)e8;
    record(2, "known tables S3 and Q8", ok, why);
  }

  // 3. Class-size multiplicativity iff nilpotent; per-prime Sylow direct factor.
  {
    bool ok = true;
    std::string why;
    for (const auto& name : names) {
      const GroupContext& ctx = ctx_of(name);
      if (thmA_condition(ctx, std::nullopt).holds != ctx.structure.is_nilpotent) {
        ok = false;
        why = name + ": global equivalence fails";
        break;
      }
      for (long long p : prime_divisors(ctx.g().order())) {
        const auto parts = normal_hall_parts(ctx.g(), p);
        const bool direct_factor =
            parts.normal_sylow_p.has_value() && parts.normal_hall_p_prime.has_value();
        if (thmA_condition(ctx, p).holds != direct_factor) {
          ok = false;
          why = name + ": per-prime equivalence fails at p=" + std::to_string(p);
          break;
        }
      }
      if (!ok) break;
    }
    record(3, "class-size condition iff nilpotent (global and per prime)", ok, why);
  }

  // 4. Order multiplicativity iff nilpotent, both modes.
  {
    bool ok = true;
    std::string why;
    for (const auto& name : names) {
      const GroupContext& ctx = ctx_of(name);
      const bool nil = ctx.structure.is_nilpotent;
      if (bw_condition(ctx, PairModeSpec::all_coprime()).holds != nil ||
          bw_condition(ctx, PairModeSpec::prime_power()).holds != nil) {
        ok = false;
        why = name;
        break;
      }
    }
    record(4, "order condition iff nilpotent (both modes)", ok, why);
  }

  // 5. Single-class products imply solvable / p-solvable.
  {
    bool ok = true;
    std::string why;
    for (const auto& name : names) {
      const GroupContext& ctx = ctx_of(name);
      if (thmB_condition(ctx, std::nullopt).holds && !ctx.structure.is_solvable) {
        ok = false;
        why = name + ": global implication fails";
        break;
      }
      for (long long p : prime_divisors(ctx.g().order())) {
        if (thmB_condition(ctx, p).holds && !is_p_solvable(ctx.chief, p)) {
          ok = false;
          why = name + ": p-implication fails at p=" + std::to_string(p);
          break;
        }
      }
      if (!ok) break;
    }
    record(5, "single-class products imply (p-)solvability", ok, why);
  }

  // 6. Set-product and character formulations agree on every class pair.
  {
    bool ok = true;
    std::string why;
    for (const auto& name : names) {
      const GroupContext& ctx = ctx_of(name);
      for (int i = 0; i < ctx.cd().count() && ok; ++i) {
        for (int j = 0; j < ctx.cd().count(); ++j) {
          if (!lemma_ch_equivalence(ctx, i, j).agree()) {
            ok = false;
            why = name + ": pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
            break;
          }
        }
      }
      if (!ok) break;
    }
    record(6, "set and character sides agree on all class pairs", ok, why);
  }

  // 7. Triple condition iff p-solvable; A5 produces triples at 2, 3, 5.
  {
    bool ok = true;
    std::string why;
    for (const auto& name : names) {
      const GroupContext& ctx = ctx_of(name);
      for (long long p : prime_divisors(ctx.g().order())) {
        if (triple_condition(ctx, p).holds != is_p_solvable(ctx.chief, p)) {
          ok = false;
          why = name + " at p=" + std::to_string(p);
          break;
        }
      }
      if (!ok) break;
    }
    const GroupContext& a5 = ctx_of("A5");
    for (long long p : {2, 3, 5}) {
      const auto res = triple_condition(a5, p);
      if (res.holds || !res.witness || !replay_witness(a5, res)) {
        ok = false;
        why = "A5 triple missing at p=" + std::to_string(p);
      }
    }
    record(7, "triple condition iff p-solvable; A5 triples found", ok, why);
  }

  // 8. Character condition iff structural classification; vanishing check.
  {
    bool ok = true;
    std::string why;
    for (const auto& name : names) {
      const GroupContext& ctx = ctx_of(name);
      const auto outcome = thmC_structure(ctx);
      if (char_mult_condition(ctx, std::nullopt).holds != outcome.global_holds) {
        ok = false;
        why = name + ": global equivalence fails";
        break;
      }
      for (const auto& [p, verdict] : outcome.per_prime) {
        if (char_mult_condition(ctx, p).holds != verdict.holds) {
          ok = false;
          why = name + ": per-prime equivalence fails at p=" + std::to_string(p);
          break;
        }
        if (verdict.kind == ThmCPrimeVerdict::Case::structured) {
          const Subgroup& h = verdict.witness->H;
          for (int r = 0; r < ctx.tab().row_count() && ok; ++r) {
            if (ctx.tab().row(r).linear) continue;
            for (int c = 0; c < ctx.cd().count(); ++c) {
              if (!h.contains(ctx.cd().rep(c)) && !ctx.tab().value(r, c).is_zero()) {
                ok = false;
                why = name + ": nonlinear row fails to vanish off H at p=" + std::to_string(p);
                break;
              }
            }
          }
        }
      }
      if (!ok) break;
    }
    record(8, "character condition iff structure; vanishing off H", ok, why);
  }

  // 9. Named witnesses from the corpus.
  {
    bool ok = true;
    std::string why;
    {
      const GroupContext& asl = ctx_of("ASL2_3");
      const Group& g = asl.g();
      const Subgroup q8 = Subgroup::generated(
          g, {g.index_of(affine_perm_gf3(0, 2, 1, 0, 0, 0)),
              g.index_of(affine_perm_gf3(1, 1, 1, 2, 0, 0))});
      const Subgroup t = Subgroup::generated(
          g, {g.index_of(affine_perm_gf3(1, 0, 0, 1, 1, 0)),
              g.index_of(affine_perm_gf3(1, 0, 0, 1, 0, 1))});
      if (q8.order() != 8 || t.order() != 9 || !is_frobenius_action(g, q8, t)) {
        ok = false;
        why = "Q8 action on C3xC3 not Frobenius";
      }
    }
    if (ok) {
      const auto outcome = thmC_structure(ctx_of("G54"));
      if (!outcome.global_holds || !outcome.global_witness ||
          !outcome.global_witness->all_flags() || outcome.global_witness->c_normal) {
        ok = false;
        why = "order-54 witness wrong";
      }
    }
    if (ok) {
      for (const std::string name : {"Q8C3C3", "AGL1_3", "AGL1_4", "AGL1_5", "AGL1_8"}) {
        if (!dade_yadav_condition(ctx_of(name)).holds) {
          ok = false;
          why = name + " fails the restricted product condition";
          break;
        }
      }
    }
    record(9, "paper witnesses: Frobenius action, order 54, restricted products", ok, why);
  }

  // 10. Key-lemma conclusions wherever the hypothesis holds.
  {
    bool ok = true;
    std::string why;
    long long hypothesis_pairs = 0;
    for (const auto& name : names) {
      const GroupContext& ctx = ctx_of(name);
      for (int i = 1; i < ctx.cd().count() && ok; ++i) {
        for (int j = 1; j < ctx.cd().count(); ++j) {
          const auto res = lemma_key_implications(ctx, i, j);
          if (!res.hypothesis_holds) continue;
          ++hypothesis_pairs;
          if (!res.conclusions_ok()) {
            ok = false;
            why = name + ": conclusions fail on (" + std::to_string(i) + "," +
                  std::to_string(j) + ")";
            break;
          }
        }
      }
      if (!ok) break;
    }
    if (ok && hypothesis_pairs == 0) {
      ok = false;
      why = "no hypothesis pairs found anywhere";
    }
    record(10, "key-lemma conclusions (" + std::to_string(hypothesis_pairs) + " pairs)", ok,
           why);
  }

  // 11. Pi-restricted hypothesis implies clean chief factors; A5 contrapositive.
  {
    bool ok = true;
    std::string why;
    for (const auto& name : names) {
      const GroupContext& ctx = ctx_of(name);
      const auto ps = prime_divisors(ctx.g().order());
      for (size_t a = 0; a < ps.size() && ok; ++a) {
        for (size_t b = a + 1; b < ps.size(); ++b) {
          if (ps[a] == 2 || ps[b] == 2) continue;
          const auto res = pi_condition(ctx, ps[a], ps[b]);
          if (!res.implication_holds()) {
            ok = false;
            why = name + " at (" + std::to_string(ps[a]) + "," + std::to_string(ps[b]) + ")";
            break;
          }
        }
      }
      if (!ok) break;
    }
    if (ok) {
      const auto res = pi_condition(ctx_of("A5"), 3, 5);
      if (res.hypothesis_holds || !res.violating_pair ||
          !replay_witness(ctx_of("A5"), {false, res.violating_pair})) {
        ok = false;
        why = "A5 contrapositive pair not found";
      }
    }
    record(11, "pi-restricted hypothesis implies clean chief factors", ok, why);
  }

  // 12. Class-representative evaluation equals full element-level evaluation
  //     for every corpus group of order <= 200.
  {
    bool ok = true;
    std::string why;
    for (const auto& name : names) {
      const GroupContext& ctx = ctx_of(name);
      if (ctx.g().order() > 200) continue;
      const auto check = [&](const std::string& what, bool a, bool b) {
        if (a != b && ok) {
          ok = false;
          why = name + ": " + what;
        }
      };
      check("bw all", bw_condition(ctx, PairModeSpec::all_coprime()).holds,
            bw_condition(ctx, PairModeSpec::all_coprime(), true).holds);
      check("bw pp", bw_condition(ctx, PairModeSpec::prime_power()).holds,
            bw_condition(ctx, PairModeSpec::prime_power(), true).holds);
      check("thmA", thmA_condition(ctx, std::nullopt).holds,
            thmA_condition(ctx, std::nullopt, true).holds);
      check("thmB", thmB_condition(ctx, std::nullopt).holds,
            thmB_condition(ctx, std::nullopt, true).holds);
      check("char_mult", char_mult_condition(ctx, std::nullopt).holds,
            char_mult_condition(ctx, std::nullopt, true).holds);
      for (long long p : prime_divisors(ctx.g().order())) {
        const auto tag = std::string(" p=") + std::to_string(p);
        check("thmA" + tag, thmA_condition(ctx, p).holds, thmA_condition(ctx, p, true).holds);
        check("thmB" + tag, thmB_condition(ctx, p).holds, thmB_condition(ctx, p, true).holds);
        check("char_mult" + tag, char_mult_condition(ctx, p).holds,
              char_mult_condition(ctx, p, true).holds);
      }
      if (!ok) break;
    }
    record(12, "class-level evaluation equals the element-level oracle (orders <= 200)", ok,
           why);
  }

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  if (c1 && elapsed >= 300.0) {
    c1 = false;
    c1_why = "suite exceeded 300 seconds";
  }
  record(1, "character-table validity on the full corpus", c1, c1_why);

  std::sort(results.begin(), results.end(),
            [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
  int failures = 0;
  for (const auto& r : results) {
    std::printf("%s  %2d: %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.empty() ? "" : " -- ", r.detail.c_str());
    failures += r.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed in %.1fs\n", static_cast<int>(results.size()) - failures,
              results.size(), elapsed);
  return failures == 0 ? 0 : 1;
}
