#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "semiprob/congruence.hpp"
#include "semiprob/enumerate.hpp"
#include "semiprob/errors.hpp"
#include "semiprob/rightrep.hpp"

using namespace semiprob;

namespace {

Partition blocks(int n, const std::vector<std::vector<int>>& b) {
  return Partition::from_blocks(n, b);
}

}  // namespace

TEST_CASE("congruence test with witness") {
  const auto n3 = fixtures::n3();
  CHECK(is_congruence(n3, blocks(3, {{0, 1}, {2}})));
  CHECK(is_congruence(n3, Partition::identity(3)));
  CHECK(is_congruence(n3, Partition::universal(3)));

  CongruenceWitness w;
  CHECK_FALSE(is_congruence(n3, blocks(3, {{0, 2}, {1}}), &w));
  CHECK(w.a == 0);
  CHECK(w.b == 2);
  CHECK(w.x == 2);
  CHECK(w.left);

  CHECK_THROWS_AS(is_congruence(n3, Partition::identity(4)),
                  SizeMismatchError);
  CHECK_THROWS_AS(Congruence::checked(n3, blocks(3, {{0, 2}, {1}})),
                  NotACongruenceError);
}

TEST_CASE("congruence enumeration on the fixtures") {
  CHECK(enumerate_congruences(fixtures::c2()).size() == 2);
  CHECK(enumerate_congruences(fixtures::n2()).size() == 2);

  const auto found = enumerate_congruences(fixtures::n3());
  REQUIRE(found.size() == 3);
  CHECK(found[0].partition() == Partition::universal(3));
  CHECK(found[1].partition() == blocks(3, {{0, 1}, {2}}));
  CHECK(found[2].partition() == Partition::identity(3));

  const auto big = FiniteSemigroup::from_flat(8, std::vector<int>(64, 0));
  CHECK_THROWS_AS(enumerate_congruences(big), TooLargeError);
}

TEST_CASE("quotients") {
  const auto n3 = fixtures::n3();
  const auto sigma = Congruence::checked(n3, blocks(3, {{0, 1}, {2}}));
  const Quotient q = quotient(n3, sigma);
  CHECK(q.semigroup == fixtures::n2());
  CHECK(q.projection == std::vector<int>{0, 0, 1});

  CHECK(quotient(n3, Congruence::identity(n3)).semigroup == n3);
  CHECK(quotient(n3, Congruence::universal(n3)).semigroup
        == fixtures::trivial());
}

TEST_CASE("ideal validation and enumeration") {
  const auto n3 = fixtures::n3();
  const auto found = ideals(n3);
  REQUIRE(found.size() == 3);
  CHECK(found[0].members() == ElementSet::of(3, {0}));
  CHECK(found[1].members() == ElementSet::of(3, {0, 1}));
  CHECK(found[2].members() == ElementSet::of(3, {0, 1, 2}));

  // In the left zero semigroup no proper subset absorbs right products.
  const auto lz_ideals = ideals(fixtures::lz2());
  REQUIRE(lz_ideals.size() == 1);
  CHECK(lz_ideals[0].members() == ElementSet::of(2, {0, 1}));

  CHECK(ideals(fixtures::trivial()).size() == 1);

  CHECK_THROWS_AS(Ideal::checked(n3, ElementSet::of(3, {2})),
                  NotAnIdealError);
  CHECK_THROWS_AS(Ideal::checked(n3, ElementSet(3)), Error);
}

TEST_CASE("Rees congruences and quotients") {
  const auto n3 = fixtures::n3();
  const auto i01 = Ideal::checked(n3, ElementSet::of(3, {0, 1}));
  CHECK(rees_congruence(n3, i01).partition() == blocks(3, {{0, 1}, {2}}));
  CHECK(rees_quotient(n3, i01) == fixtures::n2());

  const auto i0 = Ideal::checked(n3, ElementSet::of(3, {0}));
  CHECK(rees_congruence(n3, i0).partition() == Partition::identity(3));
  CHECK(rees_quotient(n3, i0) == n3);

  const auto lz2 = fixtures::lz2();
  const auto all = Ideal::checked(lz2, ElementSet::of(2, {0, 1}));
  CHECK(rees_congruence(lz2, all).partition() == Partition::universal(2));
  CHECK(rees_quotient(lz2, all) == fixtures::trivial());
}

TEST_CASE("sigma step on the fixtures") {
  const auto n3 = fixtures::n3();
  CHECK(sigma_step(n3, Congruence::identity(n3)).partition() == theta(n3));
  CHECK(sigma_step(n3, Congruence::checked(n3, blocks(3, {{0, 1}, {2}})))
            .partition()
        == Partition::universal(3));
  const auto rz2 = fixtures::rz2();
  CHECK(sigma_step(rz2, Congruence::identity(rz2)).partition()
        == Partition::identity(2));
}

TEST_CASE("sigma towers stop at the first repeat") {
  const auto n3 = fixtures::n3();
  const auto tower = sigma_tower(n3, Congruence::identity(n3));
  REQUIRE(tower.size() == 3);
  CHECK(tower[0].partition() == Partition::identity(3));
  CHECK(tower[1].partition() == blocks(3, {{0, 1}, {2}}));
  CHECK(tower[2].partition() == Partition::universal(3));

  const auto rz2 = fixtures::rz2();
  CHECK(sigma_tower(rz2, Congruence::identity(rz2)).size() == 1);
  CHECK(sigma_tower(n3, Congruence::universal(n3)).size() == 1);
}

TEST_CASE("towers are ascending chains of congruences, at most n long") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& s : enumerate_semigroups(n)) {
      for (const auto& sigma : enumerate_congruences(s)) {
        const auto tower = sigma_tower(s, sigma);
        CHECK(tower.size() <= static_cast<size_t>(n));
        for (size_t i = 0; i + 1 < tower.size(); ++i) {
          CHECK(tower[i].partition().refines(tower[i + 1].partition()));
          CHECK(tower[i].partition() != tower[i + 1].partition());
        }
      }
    }
  }
}

TEST_CASE("phi maps nested congruences onto the quotient") {
  const auto n3 = fixtures::n3();
  const auto mid = Congruence::checked(n3, blocks(3, {{0, 1}, {2}}));

  CHECK(phi(n3, mid, Congruence::universal(n3)).partition()
        == Partition::universal(2));
  CHECK(phi(n3, Congruence::identity(n3), mid).partition()
        == blocks(3, {{0, 1}, {2}}));
  // sigma_step(n3, mid) = omega maps to theta of the quotient N2.
  const auto stepped = sigma_step(n3, mid);
  CHECK(phi(n3, mid, stepped).partition()
        == theta(quotient(n3, mid).semigroup));

  CHECK_THROWS_AS(phi(n3, mid, Congruence::identity(n3)), NotNestedError);
}

TEST_CASE("phi endpoints on every order-3 semigroup and congruence") {
  for (const auto& s : enumerate_semigroups(3)) {
    for (const auto& sigma : enumerate_congruences(s)) {
      CHECK(phi(s, sigma, sigma).partition().is_identity());
      CHECK(phi(s, sigma, Congruence::universal(s)).partition().is_universal());
    }
  }
}
