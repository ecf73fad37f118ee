#include <doctest.h>

#include <set>

#include "ck/classes.hpp"
#include "test_helpers.hpp"

using namespace ck;

TEST_CASE("class sizes against the brute conjugation oracle") {
  SUBCASE("S3 has sizes 1, 2, 3 in canonical order") {
    const ClassData& cd = ckt::ctx_for("S3").cd();
    REQUIRE(cd.count() == 3);
    CHECK(cd.size(0) == 1);
    CHECK(cd.size(1) == 2);  // 3-cycles
    CHECK(cd.size(2) == 3);  // transpositions
    CHECK(cd.class_of(0) == 0);

    const Group& g = ckt::group_for("S3");
    std::vector<ckt::Images> gens;
    for (int i : g.generators()) gens.push_back(g.element(i).images());
    const auto everything = ckt::oracle_closure(gens);
    CHECK(ckt::sorted_class_sizes(everything) == std::vector<size_t>{1, 2, 3});
  }
  SUBCASE("Q8 has sizes 1, 1, 2, 2, 2") {
    const ClassData& cd = ckt::ctx_for("Q8").cd();
    std::vector<long long> sizes;
    for (int c = 0; c < cd.count(); ++c) sizes.push_back(cd.size(c));
    CHECK(sizes == std::vector<long long>{1, 1, 2, 2, 2});

    const Group& g = ckt::group_for("Q8");
    std::vector<ckt::Images> gens;
    for (int i : g.generators()) gens.push_back(g.element(i).images());
    CHECK(ckt::sorted_class_sizes(ckt::oracle_closure(gens)) ==
          std::vector<size_t>{1, 1, 2, 2, 2});
  }
  SUBCASE("abelian groups split into singletons") {
    const ClassData& cd = ckt::ctx_for("C12").cd();
    CHECK(cd.count() == 12);
    for (int c = 0; c < cd.count(); ++c) CHECK(cd.size(c) == 1);
  }
}

TEST_CASE("classes partition every corpus group") {
  for (const auto& spec : ckt::corpus().specs) {
    const ClassData& cd = ckt::ctx_for(spec.name).cd();
    const Group& g = ckt::group_for(spec.name);
    long long total = 0;
    for (int c = 0; c < cd.count(); ++c) total += cd.size(c);
    CHECK(total == g.order());
    for (int i = 0; i < g.order(); ++i) {
      const auto& members = cd.members(cd.class_of(i));
      CHECK(std::find(members.begin(), members.end(), i) != members.end());
    }
    // |C_G(x)| |x^G| = |G| for every element.
    for (int i = 0; i < g.order(); ++i)
      CHECK(centralizer(g, i).order() * cd.size(cd.class_of(i)) == g.order());
  }
}

TEST_CASE("class coefficients") {
  const GroupContext& ctx = ckt::ctx_for("S3");
  const ClassData& cd = ctx.cd();

  SUBCASE("identity class collapses products") {
    for (int j = 0; j < cd.count(); ++j) {
      const auto& prod = cd.coefficients(0, j);
      REQUIRE(prod.support.size() == 1);
      CHECK(prod.support.begin()->first == j);
      CHECK(prod.support.begin()->second == 1);
    }
  }
  SUBCASE("transpositions times 3-cycles concentrate on transpositions") {
    const auto& prod = cd.coefficients(2, 1);
    REQUIRE(prod.support.size() == 1);
    CHECK(prod.support.begin()->first == 2);
    CHECK(prod.support.begin()->second == 2);
  }
  SUBCASE("counting identity on every pair of several groups") {
    for (const char* name : {"S3", "S4", "Q16", "G54", "F21", "AGL1_9"}) {
      const ClassData& c = ckt::ctx_for(name).cd();
      for (int i = 0; i < c.count(); ++i) {
        for (int j = 0; j < c.count(); ++j) {
          long long total = 0;
          for (const auto& [k, a] : c.coefficients(i, j).support) total += a * c.size(k);
          CHECK(total == c.size(i) * c.size(j));
        }
      }
    }
  }
}

TEST_CASE("coefficient support equals the brute set product") {
  for (const auto& spec : ckt::corpus().specs) {
    const GroupContext& ctx = ckt::ctx_for(spec.name);
    const ClassData& cd = ctx.cd();
    const Group& g = ctx.g();
    for (int i = 0; i < cd.count(); ++i) {
      for (int j = 0; j < cd.count(); ++j) {
        std::set<int> brute;
        for (int x : cd.members(i)) {
          for (int y : cd.members(j)) brute.insert(cd.class_of(g.mult(x, y)));
        }
        std::set<int> support;
        for (const auto& [k, a] : cd.coefficients(i, j).support) {
          CHECK(a > 0);
          support.insert(k);
        }
        CHECK(brute == support);
      }
    }
  }
}

TEST_CASE("single-class products") {
  SUBCASE("identity times anything collapses to that class") {
    const ClassData& cd = ckt::ctx_for("S4").cd();
    for (int j = 0; j < cd.count(); ++j) {
      CHECK(cd.coefficients(0, j).single_class());
      CHECK(product_single_class(cd, 0, j) == j);
    }
    CHECK_FALSE(product_single_class(ckt::ctx_for("S3").cd(), 2, 2).has_value());
  }
  SUBCASE("A4 involutions times 3-cycles") {
    const ClassData& cd = ckt::ctx_for("A4").cd();
    // class 1 is the involution class (size 3); classes 2, 3 are 3-cycles.
    CHECK(cd.size(1) == 3);
    CHECK(cd.coefficients(1, 2).single_class());
  }
  SUBCASE("S3 transpositions squared split") {
    const ClassData& cd = ckt::ctx_for("S3").cd();
    const auto& prod = cd.coefficients(2, 2);
    CHECK_FALSE(prod.single_class());
    CHECK(prod.support.contains(0));
    CHECK(prod.support.contains(1));
  }
}

TEST_CASE("inverse classes") {
  for (const char* name : {"S4", "F21", "ASL2_3", "C12"}) {
    const ClassData& cd = ckt::ctx_for(name).cd();
    for (int c = 0; c < cd.count(); ++c) {
      CHECK(cd.inverse_class(cd.inverse_class(c)) == c);
      CHECK(cd.size(cd.inverse_class(c)) == cd.size(c));
    }
  }
  // Inversion swaps both the 7-element classes and the 3-element classes
  // of F21 (the acting units 2 and 4 are mutually inverse mod 7).
  const ClassData& cd = ckt::ctx_for("F21").cd();
  int non_self_inverse = 0;
  for (int c = 0; c < cd.count(); ++c) {
    if (cd.inverse_class(c) != c) ++non_self_inverse;
  }
  CHECK(non_self_inverse == 4);
}

TEST_CASE("power classes") {
  const ClassData& cd = ckt::ctx_for("S3").cd();
  for (int c = 0; c < cd.count(); ++c) {
    CHECK(cd.power_class(c, 0) == 0);
    CHECK(cd.power_class(c, 1) == c);
  }
  // A 3-cycle squared is conjugate to itself in S3.
  CHECK(cd.power_class(1, 2) == 1);

  // In F21 the 7-element classes are swapped by inversion but closed under
  // squaring: x -> x^2 is the class map of the acting automorphism.
  const ClassData& f = ckt::ctx_for("F21").cd();
  for (int c = 0; c < f.count(); ++c) {
    if (ckt::group_for("F21").element_order(f.rep(c)) == 7) {
      CHECK(f.power_class(c, 2) == c);
      CHECK(f.power_class(c, 6) == f.inverse_class(c));
    }
  }
}
