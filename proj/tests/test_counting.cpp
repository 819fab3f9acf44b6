/**
 * @file tests/test_counting.cpp
 * @copyright Apache License 2.0
 */
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ssst/counting.hpp"

using namespace ssst;

TEST(Counting, Nodes) {
  EXPECT_EQ(count_nodes(2, 3), 15);
  EXPECT_EQ(count_nodes(2, 0), 1);
  EXPECT_EQ(count_nodes(7, 0), 1);
  EXPECT_EQ(count_nodes(3, 4), 121);
  EXPECT_THROW(count_nodes(1, 3), DomainError);
  EXPECT_THROW(count_nodes(2, -1), DomainError);
}

TEST(Counting, TheoremValuesAtTwoThree) {
  EXPECT_EQ(count_schedules(2, 3), 8);
  EXPECT_EQ(count_partial(2, 3), 6);
  EXPECT_EQ(count_essential_formula(2, 3), 6);
  EXPECT_EQ(count_partial(2, 1), 0);
  EXPECT_THROW(count_schedules(2, 0), DomainError);
  EXPECT_THROW(count_partial(1, 4), DomainError);
  EXPECT_THROW(count_essential_formula(2, 0), DomainError);
  EXPECT_THROW(count_essential_exact(0, 2), DomainError);
}

TEST(Counting, EssentialExact) {
  EXPECT_EQ(count_essential_exact(2, 3), 6);
  EXPECT_EQ(count_essential_exact(3, 3), 6);
  EXPECT_EQ(count_essential_exact(3, 2), 0);
  EXPECT_EQ(count_essential_formula(3, 3), 24);
}

TEST(Counting, ArbitraryPrecision) {
  // 2^100 leaves; well beyond 64 bits.
  const BigInt two100 = BigInt(1) << 100;
  EXPECT_EQ(count_schedules(2, 100), two100);
  EXPECT_EQ(count_nodes(2, 100), (two100 << 1) - 1);
}

TEST(CountingProperty, EssentialAgainstEnumeration) {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 1; n <= 8; ++n) {
      const BigInt exact = count_essential_exact(m, n);
      EXPECT_EQ(exact, oracle::surjections(m, n)) << m << "," << n;
      if (m == 2) {
        EXPECT_EQ(exact, count_essential_formula(m, n));
      } else if (n >= 2) {
        EXPECT_LT(exact, count_essential_formula(m, n));
      } else {
        EXPECT_LE(exact, count_essential_formula(m, n));
      }
    }
  }
}

TEST(CountingProperty, NodesAreLevelSums) {
  for (int m = 2; m <= 5; ++m) {
    BigInt level = 1, sum = 0;
    for (int h = 0; h <= 20; ++h) {
      sum += level;
      EXPECT_EQ(count_nodes(m, h), sum);
      if (h >= 1) {
        EXPECT_EQ(count_partial(m, h), sum - 1 - level);
      }
      level *= m;
    }
  }
}
