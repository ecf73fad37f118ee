#include <doctest.h>

#include <stdexcept>

#include "ck/permutation.hpp"
#include "test_helpers.hpp"

using ck::Permutation;

TEST_CASE("composition follows the left-to-right convention") {
  const auto a = Permutation::from_cycles(3, "(0 1)");
  const auto b = Permutation::from_cycles(3, "(0 1 2)");

  SUBCASE("an involution squared is the identity") {
    CHECK(compose(a, a).is_identity());
  }
  SUBCASE("identity laws") {
    const Permutation id(3);
    CHECK(compose(id, b) == b);
    CHECK(compose(b, id) == b);
  }
  SUBCASE("product agrees with pointwise evaluation") {
    const auto prod = compose(a, b);
    for (int x = 0; x < 3; ++x) CHECK(prod(x) == b(a(x)));
    CHECK(prod == Permutation::from_cycles(3, "(0 2)"));

    const auto other = compose(b, a);
    for (int x = 0; x < 3; ++x) CHECK(other(x) == a(b(x)));
    CHECK_FALSE(prod == other);
  }
  SUBCASE("oracle composition matches") {
    const auto prod = compose(a, b);
    CHECK(prod.images() == ckt::oracle_compose(a.images(), b.images()));
  }
}

TEST_CASE("degree mismatch is rejected") {
  const auto a = Permutation::from_cycles(3, "(0 1)");
  const auto b = Permutation::from_cycles(4, "(0 1)");
  CHECK_THROWS_AS(compose(a, b), std::invalid_argument);
}

TEST_CASE("cycle parsing") {
  SUBCASE("multi-cycle input") {
    const auto p = Permutation::from_cycles(5, "(0 1 2)(3 4)");
    CHECK(p(0) == 1);
    CHECK(p(2) == 0);
    CHECK(p(3) == 4);
    CHECK(p.cycle_string() == "(0 1 2)(3 4)");
  }
  SUBCASE("identity spelling") {
    const auto p = Permutation::from_cycles(4, "()");
    CHECK(p.is_identity());
    CHECK(p.cycle_string() == "()");
  }
  SUBCASE("point out of range") {
    CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 3)"), std::invalid_argument);
  }
  SUBCASE("repeated point") {
    CHECK_THROWS_AS(Permutation::from_cycles(4, "(0 1)(1 2)"), std::invalid_argument);
  }
  SUBCASE("garbage") {
    CHECK_THROWS_AS(Permutation::from_cycles(3, "0 1"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 1"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles(3, ""), std::invalid_argument);
  }
}

TEST_CASE("inverse and cycle round trip") {
  const auto p = Permutation::from_cycles(6, "(0 3 5)(1 2)");
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(compose(p.inverse(), p).is_identity());
  CHECK(Permutation::from_cycles(6, p.cycle_string()) == p);
  CHECK(p.inverse().images() == ckt::oracle_inverse(p.images()));
}

TEST_CASE("non-bijective image lists are rejected") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
}
