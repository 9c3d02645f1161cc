#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "semiprob/enumerate.hpp"
#include "semiprob/errors.hpp"
#include "semiprob/semigroup.hpp"

using namespace semiprob;

TEST_CASE("from_table accepts the canonical fixtures") {
  CHECK(fixtures::lz2().order() == 2);
  CHECK(fixtures::rz2().order() == 2);
  CHECK(fixtures::c2().order() == 2);
  CHECK(fixtures::n2().order() == 2);
  CHECK(fixtures::n3().order() == 3);
}

TEST_CASE("the or-semilattice table passes the full triple scan") {
  // Not obviously associative at a glance; the scan decides.
  const auto s = FiniteSemigroup::from_table(2, {{0, 1}, {1, 1}});
  CHECK(s.product(0, 1) == 1);
}

TEST_CASE("range validation precedes associativity and reports the cell") {
  try {
    FiniteSemigroup::from_table(2, {{0, 3}, {1, 1}});
    FAIL("expected BadEntryError");
  } catch (const BadEntryError& e) {
    CHECK(e.row == 0);
    CHECK(e.col == 1);
    CHECK(e.value == 3);
  }
}

TEST_CASE("associativity witness is the first lexicographic triple") {
  // (0*1)*0 = 1*0 = 0 but 0*(1*0) = 0*1 = 1.
  try {
    FiniteSemigroup::from_table(2, {{0, 1}, {0, 0}});
    FAIL("expected NotAssociativeError");
  } catch (const NotAssociativeError& e) {
    CHECK(e.a == 0);
    CHECK(e.b == 1);
    CHECK(e.c == 0);
  }
}

TEST_CASE("products match the table") {
  CHECK(fixtures::rz2().product(0, 1) == 1);
  CHECK(fixtures::lz2().product(0, 1) == 0);
  CHECK(fixtures::n3().product(2, 2) == 1);
}

TEST_CASE("power sets of the nilpotent fixture shrink to the zero") {
  const auto n3 = fixtures::n3();
  CHECK(power_set(n3, 1) == ElementSet::of(3, {0, 1, 2}));
  CHECK(power_set(n3, 2) == ElementSet::of(3, {0, 1}));
  CHECK(power_set(n3, 3) == ElementSet::of(3, {0}));
  CHECK(power_set(n3, 50) == ElementSet::of(3, {0}));
}

TEST_CASE("idempotent sets") {
  CHECK(idempotents(fixtures::lz2()) == ElementSet::of(2, {0, 1}));
  CHECK(idempotents(fixtures::n3()) == ElementSet::of(3, {0}));
  CHECK(idempotents(fixtures::c2()) == ElementSet::of(2, {0}));
}

TEST_CASE("power_set composes: A^(m+n) = A^m * A^n") {
  for (const auto& s : enumerate_semigroups(3)) {
    for (int m = 1; m <= 3; ++m) {
      for (int n = 1; n <= 3; ++n) {
        const ElementSet lhs = power_set(s, m + n);
        const ElementSet am = power_set(s, m);
        const ElementSet an = power_set(s, n);
        ElementSet rhs(s.order());
        for (int x : am.members()) {
          for (int y : an.members()) {
            rhs.insert(s.product(x, y));
          }
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("every semigroup of order <= 4 has an idempotent") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate_semigroups(n)) {
      CHECK_FALSE(idempotents(s).empty());
    }
  }
}
