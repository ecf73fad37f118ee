#include <doctest.h>

#include <cmath>

#include "ck/character_table.hpp"
#include "test_helpers.hpp"

using namespace ck;

namespace {

// Exact orthogonality checks over the whole table.
bool row_orthogonality(const GroupContext& ctx) {
  const CharacterTable& tab = ctx.tab();
  const ClassData& cd = ctx.cd();
  const int e = static_cast<int>(tab.exponent());
  for (int a = 0; a < tab.row_count(); ++a) {
    for (int b = 0; b < tab.row_count(); ++b) {
      CycValue sum = CycValue::integer(e, 0);
      for (int c = 0; c < cd.count(); ++c) {
        sum = sum + CycValue::integer(e, cd.size(c)) * tab.value(a, c) *
                        tab.value(b, c).conjugate();
      }
      if (!sum.is_integer(a == b ? ctx.g().order() : 0)) return false;
    }
  }
  return true;
}

bool column_orthogonality(const GroupContext& ctx) {
  const CharacterTable& tab = ctx.tab();
  const ClassData& cd = ctx.cd();
  const int e = static_cast<int>(tab.exponent());
  for (int ci = 0; ci < cd.count(); ++ci) {
    for (int cj = 0; cj < cd.count(); ++cj) {
      CycValue sum = CycValue::integer(e, 0);
      for (int r = 0; r < tab.row_count(); ++r)
        sum = sum + tab.value(r, ci) * tab.value(r, cj).conjugate();
      const long long want = ci == cj ? ctx.g().order() / cd.size(ci) : 0;
      if (!sum.is_integer(want)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("exponent") {
  CHECK(exponent(ckt::group_for("S3")) == 6);
  CHECK(exponent(ckt::group_for("Q8")) == 4);
  CHECK(exponent(ckt::group_for("C1")) == 1);
  CHECK(exponent(ckt::group_for("A5")) == 30);
}

TEST_CASE("dixon primes") {
  CHECK(dixon_prime(ckt::group_for("S3")) == 7);
  CHECK(dixon_prime(ckt::group_for("Q8")) == 13);
  CHECK(dixon_prime(ckt::group_for("C2")) == 5);
  // p = 1 mod e and p > 2 ceil(sqrt(|G|)), and p never divides |G|.
  for (const char* name : {"S6", "A5", "ASL2_3", "AGL1_16"}) {
    const Group& g = ckt::group_for(name);
    const long long p = dixon_prime(g);
    CHECK(p % g.exponent() == 1);
    const long long root = isqrt(g.order());
    CHECK(p > 2 * (root * root == g.order() ? root : root + 1));
    CHECK(g.order() % p != 0);
  }
}

TEST_CASE("class matrices") {
  const GroupContext& ctx = ckt::ctx_for("S3");
  const long long p = 7;
  const auto mats = class_matrices(ctx.cd(), p);
  REQUIRE(mats.size() == 3);

  SUBCASE("identity class gives the identity matrix") {
    for (size_t j = 0; j < mats[0].size(); ++j) {
      for (size_t k = 0; k < mats[0].size(); ++k)
        CHECK(mats[0][j][k] == (j == k ? 1 : 0));
    }
  }
  SUBCASE("counting identity: columns of M_i sum to |C_i|") {
    for (int i = 0; i < 3; ++i) {
      for (size_t k = 0; k < mats[i].size(); ++k) {
        long long sum = 0;
        for (size_t j = 0; j < mats[i].size(); ++j) sum += mats[i][j][k];
        CHECK(sum % p == ctx.cd().size(i) % p);
      }
    }
  }
  SUBCASE("matrices commute") {
    for (const auto& a : mats) {
      for (const auto& b : mats) {
        for (size_t i = 0; i < a.size(); ++i) {
          for (size_t j = 0; j < a.size(); ++j) {
            long long ab = 0, ba = 0;
            for (size_t k = 0; k < a.size(); ++k) {
              ab = (ab + a[i][k] * b[k][j]) % p;
              ba = (ba + b[i][k] * a[k][j]) % p;
            }
            CHECK(ab == ba);
          }
        }
      }
    }
  }
}

TEST_CASE("eigensplit produces one space per class") {
  SUBCASE("abelian group: one space per element") {
    const GroupContext& ctx = ckt::ctx_for("C6");
    const long long p = dixon_prime(ctx.g());
    const auto omegas = eigensplit(class_matrices(ctx.cd(), p), p);
    CHECK(omegas.size() == 6);
    for (const auto& w : omegas) CHECK(w[0] == 1);
  }
  SUBCASE("S3 over GF(7)") {
    const GroupContext& ctx = ckt::ctx_for("S3");
    CHECK(eigensplit(class_matrices(ctx.cd(), 7), 7).size() == 3);
  }
  SUBCASE("trivial group") {
    const GroupContext& ctx = ckt::ctx_for("C1");
    const long long p = dixon_prime(ctx.g());
    CHECK(eigensplit(class_matrices(ctx.cd(), p), p).size() == 1);
  }
  SUBCASE("abelian eigenvectors are homomorphisms into GF(p)*") {
    const GroupContext& ctx = ckt::ctx_for("C6");
    const Group& g = ctx.g();
    const long long p = dixon_prime(g);
    for (const auto& omega : eigensplit(class_matrices(ctx.cd(), p), p)) {
      for (int x = 0; x < g.order(); ++x) {
        for (int y = 0; y < g.order(); ++y) {
          const int cx = ctx.cd().class_of(x), cy = ctx.cd().class_of(y);
          const int cxy = ctx.cd().class_of(g.mult(x, y));
          CHECK(omega[cx] * omega[cy] % p == omega[cxy]);
        }
      }
    }
  }
}

TEST_CASE("the trivial character heads every table") {
  for (const auto& spec : ckt::corpus().specs) {
    const GroupContext& ctx = ckt::ctx_for(spec.name);
    const int e = static_cast<int>(ctx.tab().exponent());
    bool found = false;
    for (const auto& row : ctx.tab().rows()) {
      if (row.degree != 1) continue;
      bool all_one = true;
      for (const auto& v : row.values) all_one = all_one && v.is_integer(1);
      found = found || all_one;
    }
    CAPTURE(spec.name);
    CHECK(found);
    (void)e;
  }
}

TEST_CASE("known table: S3") {
  const GroupContext& ctx = ckt::ctx_for("S3");
  const CharacterTable& tab = ctx.tab();
  REQUIRE(tab.row_count() == 3);
  CHECK(tab.row(0).degree == 1);
  CHECK(tab.row(1).degree == 1);
  CHECK(tab.row(2).degree == 2);
  // Class 1 holds the 3-cycles, class 2 the transpositions.
  const int e = static_cast<int>(tab.exponent());
  CHECK(tab.value(2, 0) == CycValue::integer(e, 2));
  CHECK(tab.value(2, 1) == CycValue::integer(e, -1));
  CHECK(tab.value(2, 2) == CycValue::integer(e, 0));
}

TEST_CASE("known table: Q8") {
  const GroupContext& ctx = ckt::ctx_for("Q8");
  const CharacterTable& tab = ctx.tab();
  REQUIRE(tab.row_count() == 5);
  std::vector<long long> degrees;
  for (const auto& row : tab.rows()) degrees.push_back(row.degree);
  CHECK(degrees == std::vector<long long>{1, 1, 1, 1, 2});
  // The central involution is the unique size-1 class with rep order 2.
  const ClassData& cd = ctx.cd();
  int central = -1;
  for (int c = 0; c < cd.count(); ++c) {
    if (cd.size(c) == 1 && ctx.g().element_order(cd.rep(c)) == 2) central = c;
  }
  REQUIRE(central >= 0);
  CHECK(tab.value(4, central) == CycValue::integer(static_cast<int>(tab.exponent()), -2));
}

TEST_CASE("table validity invariants on sample groups") {
  for (const char* name : {"S3", "Q8", "S4", "F21", "G54", "A5", "AGL1_8", "C3xS3"}) {
    const GroupContext& ctx = ckt::ctx_for(name);
    const CharacterTable& tab = ctx.tab();
    CAPTURE(name);

    CHECK(tab.row_count() == ctx.cd().count());
    long long degsum = 0;
    for (const auto& row : tab.rows()) {
      degsum += row.degree * row.degree;
      CHECK(ctx.g().order() % row.degree == 0);
      CHECK(row.values[0].is_integer(row.degree));
    }
    CHECK(degsum == ctx.g().order());
    CHECK(row_orthogonality(ctx));
    CHECK(column_orthogonality(ctx));
  }
}

TEST_CASE("linear character count equals the abelianization order") {
  for (const char* name : {"S3", "S4", "Q8", "A5", "F21", "G54", "ASL2_3"}) {
    const GroupContext& ctx = ckt::ctx_for(name);
    int linear = 0;
    for (const auto& row : ctx.tab().rows()) linear += row.linear ? 1 : 0;
    const auto derived = derived_subgroup(ctx.g());
    CHECK(linear == ctx.g().order() / derived.order());
  }
}

TEST_CASE("kernels are normal subgroups") {
  for (const char* name : {"S4", "Q16", "G54", "AGL1_9"}) {
    const GroupContext& ctx = ckt::ctx_for(name);
    for (const auto& row : ctx.tab().rows()) {
      std::vector<int> members;
      for (int c : row.kernel_classes) {
        members.insert(members.end(), ctx.cd().members(c).begin(), ctx.cd().members(c).end());
      }
      const Subgroup k = Subgroup::generated(ctx.g(), members);
      CHECK(k.order() == static_cast<long long>(members.size()));
      CHECK(k.is_normal());
    }
  }
}

TEST_CASE("tables are deterministic") {
  const GroupContext& ctx = ckt::ctx_for("S4");
  const CharacterTable again = build_character_table(ctx.g(), ctx.cd());
  REQUIRE(again.row_count() == ctx.tab().row_count());
  for (int r = 0; r < again.row_count(); ++r) {
    CHECK(again.row(r).degree == ctx.tab().row(r).degree);
    for (int c = 0; c < ctx.cd().count(); ++c)
      CHECK(again.value(r, c) == ctx.tab().value(r, c));
  }
}

TEST_CASE("evaluate and render") {
  const GroupContext& ctx = ckt::ctx_for("S3");
  const CharacterTable& tab = ctx.tab();
  SUBCASE("identity evaluates to the degree") {
    for (int r = 0; r < tab.row_count(); ++r)
      CHECK(tab.evaluate(r, 0).is_integer(tab.row(r).degree));
  }
  SUBCASE("linear rows take unit values") {
    for (int r = 0; r < tab.row_count(); ++r) {
      if (!tab.row(r).linear) continue;
      for (int x = 0; x < ctx.g().order(); ++x)
        CHECK(std::abs(std::abs(tab.evaluate(r, x).to_complex()) - 1.0) < 1e-9);
    }
  }
  SUBCASE("degree-2 row at a 3-cycle renders to -1") {
    const int x = ctx.g().index_of(Permutation::from_cycles(3, "(0 1 2)"));
    const auto c = render_complex(tab.evaluate(2, x));
    CHECK(std::abs(c.real() + 1.0) < 1e-9);
    CHECK(std::abs(c.imag()) < 1e-9);
  }
  SUBCASE("rounding for display") {
    const auto c = render_complex(CycValue::root_power(12, 1), 4);
    CHECK(c.real() == doctest::Approx(0.866));
    CHECK(c.imag() == doctest::Approx(0.5));
  }
}
