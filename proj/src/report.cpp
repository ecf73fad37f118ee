#include "ck/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace ck {

namespace {

constexpr int kSchemaVersion = 1;

bool wants(const VerifyOptions& opt, const std::string& thm) {
  if (opt.theorems.empty()) return true;
  return std::find(opt.theorems.begin(), opt.theorems.end(), thm) != opt.theorems.end();
}

bool wants_prime(const VerifyOptions& opt, long long p) {
  return !opt.prime || *opt.prime == p;
}

bool has_tag(const GroupSpec& spec, const std::string& tag) {
  return std::find(spec.tags.begin(), spec.tags.end(), tag) != spec.tags.end();
}

std::string fmt_complex(const std::complex<double>& c) {
  auto fmt = [](double v) {
    std::ostringstream os;
    const double r = std::round(v * 10000.0) / 10000.0;
    os << (r == 0 ? 0.0 : r);
    return os.str();
  };
  if (std::abs(c.imag()) < 1e-9) return fmt(c.real());
  return fmt(c.real()) + (c.imag() < 0 ? "-" : "+") + fmt(std::abs(c.imag())) + "i";
}

// Nonlinear rows vanish outside H: the converse half of the structural
// classification.
bool vanishing_off_h(const GroupContext& ctx, const Subgroup& h) {
  const CharacterTable& tab = ctx.tab();
  const ClassData& cd = ctx.cd();
  for (int r = 0; r < tab.row_count(); ++r) {
    if (tab.row(r).linear) continue;
    for (int c = 0; c < cd.count(); ++c) {
      if (!h.contains(cd.rep(c)) && !tab.value(r, c).is_zero()) return false;
    }
  }
  return true;
}

void run_group_checks(const GroupContext& ctx, const GroupSpec& spec, const VerifyOptions& opt,
                      PropertyReport& report) {
  const Group& g = ctx.g();
  const auto primes = prime_divisors(g.order());

  const auto add = [&](std::string name, bool ok, std::string detail,
                       std::optional<Witness> w = std::nullopt) {
    CheckOutcome out{std::move(name), ok, std::move(detail), std::move(w), {}};
    if (out.witness) {
      for (int e : out.witness->elements)
        out.witness_cycles.push_back(g.element(e).cycle_string());
    }
    report.checks.push_back(std::move(out));
  };
  const auto add_equiv = [&](std::string name, const PredicateResult& pred, bool rhs,
                             std::string detail) {
    bool ok = pred.holds == rhs;
    if (ok && !pred.holds && pred.witness && !replay_witness(ctx, pred))
      ok = false;  // a reported witness must replay
    add(std::move(name), ok, std::move(detail), pred.witness);
  };

  if (wants(opt, "BW")) {
    add_equiv("BW:all_coprime", bw_condition(ctx, PairModeSpec::all_coprime()),
              ctx.structure.is_nilpotent, "o(xy)=o(x)o(y) iff nilpotent");
    add_equiv("BW:prime_power", bw_condition(ctx, PairModeSpec::prime_power()),
              ctx.structure.is_nilpotent, "prime-power form iff nilpotent");
  }
  if (wants(opt, "A")) {
    add_equiv("A", thmA_condition(ctx, std::nullopt), ctx.structure.is_nilpotent,
              "|(xy)^G|=|x^G||y^G| iff nilpotent");
  }
  if (wants(opt, "2.2")) {
    for (long long p : primes) {
      if (!wants_prime(opt, p)) continue;
      const auto parts = normal_hall_parts(g, p);
      const bool direct_factor =
          parts.normal_sylow_p.has_value() && parts.normal_hall_p_prime.has_value();
      add_equiv("2.2:p=" + std::to_string(p), thmA_condition(ctx, p), direct_factor,
                "class-size condition iff Sylow p direct factor");
    }
  }
  if (wants(opt, "B")) {
    const auto pred = thmB_condition(ctx, std::nullopt);
    add("B", !pred.holds || ctx.structure.is_solvable,
        "single-class products imply solvable", pred.witness);
  }
  if (wants(opt, "2.5")) {
    for (long long p : primes) {
      if (!wants_prime(opt, p)) continue;
      const auto pred = thmB_condition(ctx, p);
      add("2.5:p=" + std::to_string(p), !pred.holds || is_p_solvable(ctx.chief, p),
          "p-form implies p-solvable", pred.witness);
    }
  }
  if (wants(opt, "2.3")) {
    bool ok = true;
    std::string detail = "set and character sides agree on every class pair";
    for (int i = 0; i < ctx.cd().count() && ok; ++i) {
      for (int j = 0; j < ctx.cd().count(); ++j) {
        const auto sides = lemma_ch_equivalence(ctx, i, j);
        if (!sides.agree()) {
          ok = false;
          detail = "sides disagree on class pair (" + std::to_string(i) + "," +
                   std::to_string(j) + ")";
          break;
        }
      }
    }
    add("2.3", ok, std::move(detail));
  }
  if (wants(opt, "2.4")) {
    for (long long p : primes) {
      if (!wants_prime(opt, p)) continue;
      add_equiv("2.4:p=" + std::to_string(p), triple_condition(ctx, p),
                is_p_solvable(ctx.chief, p), "no p-q-r triple iff p-solvable");
    }
  }
  if (wants(opt, "C")) {
    const auto outcome = thmC_structure(ctx);
    add_equiv("C:global", char_mult_condition(ctx, std::nullopt), outcome.global_holds,
              "character condition iff structural classification");
    for (long long p : primes) {
      if (!wants_prime(opt, p)) continue;
      add_equiv("C:p=" + std::to_string(p), char_mult_condition(ctx, p),
                outcome.per_prime.at(p).holds, "p-form iff per-prime classification");
    }
    bool vanish_ok = true;
    for (const auto& [p, verdict] : outcome.per_prime) {
      if (verdict.kind == ThmCPrimeVerdict::Case::structured &&
          !vanishing_off_h(ctx, verdict.witness->H))
        vanish_ok = false;
    }
    add("C:vanishing", vanish_ok, "nonlinear rows vanish off the normal part");
  }
  if (wants(opt, "3.1")) {
    bool ok = true;
    int pairs_with_hypothesis = 0;
    for (int i = 1; i < ctx.cd().count() && ok; ++i) {
      for (int j = 1; j < ctx.cd().count(); ++j) {
        const auto res = lemma_key_implications(ctx, i, j);
        if (!res.hypothesis_holds) continue;
        ++pairs_with_hypothesis;
        if (!res.conclusions_ok()) {
          ok = false;
          break;
        }
      }
    }
    add("3.1", ok,
        std::to_string(pairs_with_hypothesis) + " hypothesis pair(s), conclusions verified");
  }
  if (wants(opt, "4.2")) {
    for (size_t a = 0; a < primes.size(); ++a) {
      for (size_t b = a + 1; b < primes.size(); ++b) {
        const long long p = primes[a], q = primes[b];
        if (p == 2 || q == 2) continue;
        if (opt.prime && *opt.prime != p && *opt.prime != q) continue;
        const auto res = pi_condition(ctx, p, q);
        add("4.2:p=" + std::to_string(p) + ",q=" + std::to_string(q), res.implication_holds(),
            res.hypothesis_holds ? "hypothesis holds, chief factors clean"
                                 : "hypothesis fails, implication vacuous",
            res.violating_pair);
      }
    }
  }
  if (wants(opt, "DY")) {
    const auto pred = dade_yadav_condition(ctx);
    bool ok = true;
    std::string detail;
    if (ctx.structure.is_abelian && !pred.holds) {
      ok = false;
      detail = "abelian group must satisfy the class condition";
    } else if (has_tag(spec, "dy_family") && !pred.holds) {
      ok = false;
      detail = "group in the known family fails the class condition";
    } else if (!ctx.structure.is_nilpotent && pred.holds && !has_tag(spec, "dy_family")) {
      ok = false;
      detail = "nonnilpotent group outside the known family satisfies the condition";
    } else {
      detail = pred.holds ? "condition holds" : "condition fails (allowed)";
      if (!pred.holds && pred.witness && !replay_witness(ctx, pred)) {
        ok = false;
        detail = "witness does not replay";
      }
    }
    add("DY", ok, std::move(detail), pred.witness);
  }
}

}  // namespace

bool PropertyReport::all_ok() const {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

std::vector<PropertyReport> run_verification(const Corpus& corpus, const VerifyOptions& opt) {
  using clock = std::chrono::steady_clock;
  std::vector<PropertyReport> reports;
  for (size_t i = 0; i < corpus.size(); ++i) {
    const GroupSpec& spec = corpus.specs[i];
    if (opt.group_filter && spec.name != *opt.group_filter) continue;

    PropertyReport report;
    report.group_name = spec.name;
    const auto t0 = clock::now();
    const GroupContext ctx = GroupContext::build(corpus.groups[i]);
    const auto t1 = clock::now();
    report.order = ctx.g().order();
    report.degree = ctx.g().degree();
    report.class_count = ctx.cd().count();
    for (int c = 0; c < ctx.cd().count(); ++c) report.class_sizes.push_back(ctx.cd().size(c));
    for (const auto& row : ctx.tab().rows()) report.character_degrees.push_back(row.degree);

    run_group_checks(ctx, spec, opt, report);
    const auto t2 = clock::now();
    report.timings_ms.emplace_back(
        "context", std::chrono::duration<double, std::milli>(t1 - t0).count());
    report.timings_ms.emplace_back(
        "checks", std::chrono::duration<double, std::milli>(t2 - t1).count());
    reports.push_back(std::move(report));
  }
  return reports;
}

nlohmann::json witness_json(const GroupContext& ctx, const Witness& w) {
  nlohmann::json j;
  j["kind"] = w.kind;
  j["note"] = w.note;
  auto elems = nlohmann::json::array();
  for (int e : w.elements) {
    elems.push_back({{"index", e}, {"cycles", ctx.g().element(e).cycle_string()}});
  }
  j["elements"] = elems;
  if (!w.classes.empty()) j["classes"] = w.classes;
  if (w.char_row >= 0) j["char_row"] = w.char_row;
  return j;
}

namespace {

nlohmann::json check_json(const CheckOutcome& c) {
  nlohmann::json j;
  j["name"] = c.name;
  j["ok"] = c.ok;
  j["detail"] = c.detail;
  if (c.witness) {
    nlohmann::json w;
    w["kind"] = c.witness->kind;
    auto elems = nlohmann::json::array();
    for (size_t i = 0; i < c.witness->elements.size(); ++i) {
      nlohmann::json e;
      e["index"] = c.witness->elements[i];
      if (i < c.witness_cycles.size()) e["cycles"] = c.witness_cycles[i];
      elems.push_back(e);
    }
    w["elements"] = elems;
    if (!c.witness->classes.empty()) w["classes"] = c.witness->classes;
    if (c.witness->char_row >= 0) w["char_row"] = c.witness->char_row;
    w["note"] = c.witness->note;
    j["witness"] = w;
  }
  return j;
}

}  // namespace

nlohmann::json report_json(const PropertyReport& r, bool with_timings) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = r.group_name;
  j["order"] = r.order;
  j["degree"] = r.degree;
  j["class_count"] = r.class_count;
  j["class_sizes"] = r.class_sizes;
  j["character_degrees"] = r.character_degrees;
  auto checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  j["checks"] = checks;
  j["ok"] = r.all_ok();
  if (with_timings) {
    nlohmann::json t;
    for (const auto& [k, v] : r.timings_ms) t[k] = v;
    j["timings_ms"] = t;
  }
  return j;
}

nlohmann::json reports_json(const std::vector<PropertyReport>& reports, bool with_timings) {
  auto arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(report_json(r, with_timings));
  return arr;
}

std::string reports_csv(const std::vector<PropertyReport>& reports) {
  std::ostringstream os;
  os << "group,order,check,ok,detail\n";
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      std::string detail = c.detail;
      std::replace(detail.begin(), detail.end(), ',', ';');
      os << r.group_name << ',' << r.order << ',' << c.name << ',' << (c.ok ? 1 : 0) << ','
         << detail << '\n';
    }
  }
  return os.str();
}

std::string summary_table(const std::vector<PropertyReport>& reports) {
  std::ostringstream os;
  size_t name_w = 5;
  for (const auto& r : reports) name_w = std::max(name_w, r.group_name.size());
  os << std::left << std::setw(static_cast<int>(name_w) + 2) << "group" << std::setw(8) << "order"
     << std::setw(9) << "classes" << std::setw(8) << "checks" << "status\n";
  for (const auto& r : reports) {
    int bad = 0;
    for (const auto& c : r.checks) bad += c.ok ? 0 : 1;
    os << std::left << std::setw(static_cast<int>(name_w) + 2) << r.group_name << std::setw(8)
       << r.order << std::setw(9) << r.class_count << std::setw(8) << r.checks.size()
       << (bad == 0 ? "ok" : "FAIL(" + std::to_string(bad) + ")") << '\n';
  }
  return os.str();
}

nlohmann::json table_json(const GroupContext& ctx) {
  const CharacterTable& tab = ctx.tab();
  const ClassData& cd = ctx.cd();
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = ctx.g().name();
  j["order"] = ctx.g().order();
  j["exponent"] = tab.exponent();
  j["dixon_prime"] = tab.dixon_prime();
  auto classes = nlohmann::json::array();
  for (int c = 0; c < cd.count(); ++c) {
    classes.push_back({{"index", c},
                       {"size", cd.size(c)},
                       {"rep_order", ctx.g().element_order(cd.rep(c))},
                       {"rep", ctx.g().element(cd.rep(c)).cycle_string()}});
  }
  j["classes"] = classes;
  auto rows = nlohmann::json::array();
  for (const auto& row : tab.rows()) {
    nlohmann::json rj;
    rj["degree"] = row.degree;
    rj["linear"] = row.linear;
    rj["kernel_classes"] = row.kernel_classes;
    auto vals = nlohmann::json::array();
    for (const auto& v : row.values) {
      const auto c = v.to_complex();
      vals.push_back({{"coeffs", v.coeffs()}, {"re", c.real()}, {"im", c.imag()}});
    }
    rj["values"] = vals;
    rows.push_back(rj);
  }
  j["rows"] = rows;
  return j;
}

std::string table_text(const GroupContext& ctx) {
  const CharacterTable& tab = ctx.tab();
  const ClassData& cd = ctx.cd();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"class"};
  for (int c = 0; c < cd.count(); ++c) head.push_back(std::to_string(c));
  cells.push_back(head);
  std::vector<std::string> sizes{"size"};
  for (int c = 0; c < cd.count(); ++c) sizes.push_back(std::to_string(cd.size(c)));
  cells.push_back(sizes);
  std::vector<std::string> orders{"order"};
  for (int c = 0; c < cd.count(); ++c)
    orders.push_back(std::to_string(ctx.g().element_order(cd.rep(c))));
  cells.push_back(orders);
  for (int r = 0; r < tab.row_count(); ++r) {
    std::vector<std::string> row{"X" + std::to_string(r)};
    for (int c = 0; c < cd.count(); ++c) row.push_back(fmt_complex(tab.value(r, c).to_complex()));
    cells.push_back(std::move(row));
  }
  std::vector<size_t> widths(cells[0].size(), 0);
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream os;
  os << ctx.g().name() << ": order " << ctx.g().order() << ", " << cd.count() << " classes, e="
     << tab.exponent() << ", p=" << tab.dixon_prime() << "\n";
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c)
      os << std::left << std::setw(static_cast<int>(widths[c]) + 2) << row[c];
    os << '\n';
  }
  return os.str();
}

nlohmann::json classes_json(const GroupContext& ctx) {
  const ClassData& cd = ctx.cd();
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = ctx.g().name();
  j["order"] = ctx.g().order();
  j["class_count"] = cd.count();
  auto arr = nlohmann::json::array();
  for (int c = 0; c < cd.count(); ++c) {
    arr.push_back({{"index", c},
                   {"size", cd.size(c)},
                   {"rep_order", ctx.g().element_order(cd.rep(c))},
                   {"rep", ctx.g().element(cd.rep(c)).cycle_string()},
                   {"inverse_class", cd.inverse_class(c)}});
  }
  j["classes"] = arr;
  return j;
}

nlohmann::json explore_q41(const Corpus& corpus) {
  auto arr = nlohmann::json::array();
  for (size_t i = 0; i < corpus.size(); ++i) {
    const GroupContext ctx = GroupContext::build(corpus.groups[i]);
    if (!thmB_condition(ctx, std::nullopt).holds) continue;
    const Subgroup fit = fitting_subgroup(ctx.g());
    const auto quo = quotient(ctx.g(), fit);
    const auto sp = structure_predicates(quo.group);
    arr.push_back({{"group", corpus.specs[i].name},
                   {"order", ctx.g().order()},
                   {"fitting_order", fit.order()},
                   {"quotient_order", quo.group.order()},
                   {"quotient_metabelian", sp.is_metabelian}});
  }
  return {{"question", "q41"}, {"groups", arr}};
}

nlohmann::json explore_q43(const Corpus& corpus) {
  auto arr = nlohmann::json::array();
  for (size_t i = 0; i < corpus.size(); ++i) {
    const GroupContext ctx = GroupContext::build(corpus.groups[i]);
    if (ctx.structure.is_nilpotent) continue;
    const auto rows = multiplicative_characters(ctx);
    auto row_arr = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json rj;
      rj["row"] = row.row;
      rj["degree"] = ctx.tab().row(row.row).degree;
      rj["faithful"] = row.is_faithful;
      rj["nonlinear"] = !ctx.tab().row(row.row).linear;
      if (row.vanishing_normal_p_subgroup)
        rj["vanishing_normal_p_subgroup_order"] = row.vanishing_normal_p_subgroup->order();
      else
        rj["vanishing_normal_p_subgroup_order"] = nullptr;
      row_arr.push_back(rj);
    }
    bool any_faithful = false;
    for (const auto& row : rows) {
      if (row.is_faithful && !ctx.tab().row(row.row).linear) any_faithful = true;
    }
    arr.push_back({{"group", corpus.specs[i].name},
                   {"order", ctx.g().order()},
                   {"multiplicative_rows", row_arr},
                   {"has_faithful_nonlinear_multiplicative", any_faithful},
                   {"gagola_rows", gagola_rows(ctx)}});
  }
  return {{"question", "q43"}, {"groups", arr}};
}

}  // namespace ck
