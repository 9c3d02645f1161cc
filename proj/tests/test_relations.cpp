#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "semiprob/errors.hpp"
#include "semiprob/partition.hpp"

using namespace semiprob;

TEST_CASE("rationals reduce to lowest terms and compare exactly") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(5, 9).to_string() == "5/9");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(4901, 5000).to_decimal() == "0.9802");
  CHECK(Rational(5, 9).to_decimal() == "0.555556");
  CHECK(Rational::one().to_decimal() == "1");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("partition normalization orders labels by least member") {
  const Partition p = Partition::from_labels({7, 7, 3});
  CHECK(p.labels() == std::vector<int>{0, 0, 1});
  CHECK(p.num_blocks() == 2);
  CHECK(p == Partition::from_blocks(3, {{2}, {0, 1}}));
}

TEST_CASE("probability of a partition follows the class-size formula") {
  CHECK(probability_of_partition(Partition::identity(2)) == Rational(1, 2));
  CHECK(probability_of_partition(Partition::universal(3)) == Rational::one());
  CHECK(probability_of_partition(Partition::from_blocks(3, {{0, 1}, {2}}))
        == Rational(5, 9));
  CHECK_THROWS_AS(probability_of_partition(Partition::from_labels({})),
                  EmptyPartitionError);
}

TEST_CASE("probability of an explicit pair set") {
  CHECK(probability_of_relation(2, {{0, 0}, {1, 1}}) == Rational(1, 2));
  CHECK(probability_of_relation(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})
        == Rational::one());
  const Partition p = Partition::from_blocks(3, {{0, 1}, {2}});
  CHECK(probability_of_relation(3, pairs_of_partition(p)) == Rational(5, 9));
  CHECK_THROWS_AS(probability_of_relation(2, {{0, 2}}), PairOutOfRangeError);
}

TEST_CASE("class sizes are reported by block label") {
  CHECK(class_sizes(Partition::from_blocks(3, {{0, 1}, {2}}))
        == std::vector<int>{2, 1});
  CHECK(class_sizes(Partition::identity(4)) == std::vector<int>{1, 1, 1, 1});
  CHECK(class_sizes(Partition::universal(5)) == std::vector<int>{5});
}

TEST_CASE("commuting probabilities of the fixtures") {
  CHECK(commuting_probability(fixtures::c2()) == Rational::one());
  CHECK(commuting_probability(fixtures::rz2()) == Rational(1, 2));
  CHECK(commuting_probability(fixtures::lz2()) == Rational(1, 2));
}

TEST_CASE("partition formula agrees with the pair-expansion oracle") {
  for (int n = 1; n <= 6; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      CHECK(probability_of_partition(p)
            == probability_of_relation(n, pairs_of_partition(p)));
    });
  }
}

TEST_CASE("the 1/m bound holds with equality exactly at equal class sizes") {
  for (int n = 1; n <= 7; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      const Rational prob = probability_of_partition(p);
      const Rational bound(1, p.num_blocks());
      CHECK(prob >= bound);
      const auto sizes = class_sizes(p);
      const bool equal_sizes =
          std::all_of(sizes.begin(), sizes.end(),
                      [&](int t) { return t == sizes[0]; });
      CHECK((prob == bound) == equal_sizes);
    });
  }
}

TEST_CASE("identity and universal partitions hit the endpoints") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(probability_of_partition(Partition::identity(n)) == Rational(1, n));
    CHECK(probability_of_partition(Partition::universal(n)) == Rational::one());
  }
}

TEST_CASE("partition enumeration counts the Bell numbers") {
  const long long bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 1; n <= 7; ++n) {
    long long count = 0;
    for_each_partition(n, [&](const Partition&) { ++count; });
    CHECK(count == bell[n]);
  }
}
