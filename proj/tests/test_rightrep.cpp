#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "semiprob/congruence.hpp"
#include "semiprob/enumerate.hpp"
#include "semiprob/errors.hpp"
#include "semiprob/rightrep.hpp"

using namespace semiprob;

TEST_CASE("inner right translations read table columns") {
  CHECK(rho(fixtures::rz2(), 1).images == std::vector<int>{1, 1});
  CHECK(rho(fixtures::lz2(), 1).images == std::vector<int>{0, 1});
  CHECK(rho(fixtures::n3(), 2).images == std::vector<int>{0, 0, 1});
}

TEST_CASE("right matrices are row-monomial and match rho") {
  const RightMatrix r = right_matrix(fixtures::rz2(), 1);
  CHECK(r.dense() == std::vector<std::vector<int>>{{0, 1}, {0, 1}});
  const RightMatrix id = right_matrix(fixtures::lz2(), 0);
  CHECK(id.dense() == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
  CHECK(right_matrix(fixtures::n3(), 2).row_columns()
        == std::vector<int>{0, 0, 1});
}

TEST_CASE("matrix products compose translations") {
  const auto rz2 = fixtures::rz2();
  CHECK(matrix_product(right_matrix(rz2, 0), right_matrix(rz2, 1))
        == right_matrix(rz2, 1));
  const auto n3 = fixtures::n3();
  CHECK(matrix_product(right_matrix(n3, 2), right_matrix(n3, 2))
        == right_matrix(n3, 1));
  const RightMatrix identity = RightMatrix::from_row_columns({0, 1, 2});
  CHECK(matrix_product(right_matrix(n3, 2), identity) == right_matrix(n3, 2));
  CHECK_THROWS_AS(
      matrix_product(right_matrix(rz2, 0), right_matrix(n3, 0)),
      DimensionMismatchError);
}

TEST_CASE("theta groups equal columns") {
  CHECK(theta(fixtures::lz2()) == Partition::universal(2));
  CHECK(theta(fixtures::rz2()) == Partition::identity(2));
  CHECK(theta(fixtures::n3()) == Partition::from_blocks(3, {{0, 1}, {2}}));
}

TEST_CASE("kernel probabilities") {
  CHECK(p_theta(fixtures::lz2()) == Rational::one());
  CHECK(p_theta(fixtures::rz2()) == Rational(1, 2));
  CHECK(p_theta(fixtures::n3()) == Rational(5, 9));
}

TEST_CASE("left reductivity is theta = identity") {
  CHECK(is_left_reductive(fixtures::rz2()));
  CHECK_FALSE(is_left_reductive(fixtures::lz2()));
  CHECK_FALSE(is_left_reductive(fixtures::n3()));
}

TEST_CASE("representation facts hold on every order-3 semigroup") {
  for (const auto& s : enumerate_semigroups(3)) {
    const Partition kernel = theta(s);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        CHECK(matrix_product(right_matrix(s, a), right_matrix(s, b))
              == right_matrix(s, s.product(a, b)));
        CHECK((right_matrix(s, a) == right_matrix(s, b))
              == kernel.same_block(a, b));
      }
    }
  }
}

TEST_CASE("theta is a congruence on every semigroup of order <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate_semigroups(n)) {
      CHECK(is_congruence(s, theta(s)));
    }
  }
}

TEST_CASE("left reductive implies kernel probability 1/n") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate_semigroups(n)) {
      if (is_left_reductive(s)) {
        CHECK(p_theta(s) == Rational(1, n));
      }
    }
  }
}
