#include "hilbertkit/partition.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hilbertkit;

TEST(Partition, NormalizesTrailingZerosAndRejectsIncreasing) {
  EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_EQ(Partition({3, 1}).size(), 4u);
  EXPECT_EQ(Partition({3, 1}).length(), 2u);
}

TEST(Partition, TextSyntax) {
  EXPECT_EQ(parse_partition("[3,1]"), Partition({3, 1}));
  EXPECT_EQ(parse_partition(" [ ] "), Partition());
  EXPECT_EQ(Partition({3, 1}).to_string(), "[3,1]");
  EXPECT_EQ(Partition().to_string(), "[]");
  EXPECT_THROW(parse_partition("[1,2]"), ParseError);
  EXPECT_THROW(parse_partition("3,1"), ParseError);
  EXPECT_THROW(parse_partition("[3,]"), ParseError);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate(Partition({3, 1})), Partition({2, 1, 1}));
  EXPECT_EQ(conjugate(Partition::column(5)), Partition({5}));
  EXPECT_EQ(conjugate(Partition()), Partition());
}

TEST(Partition, ConjugationIsAnInvolutionUpToTwelve) {
  for (unsigned k = 0; k <= 12; ++k)
    for (const auto& p : enumerate_partitions(k, k, k)) {
      EXPECT_EQ(conjugate(conjugate(p)), p);
      EXPECT_EQ(conjugate(p).size(), k);
    }
}

TEST(Partition, Containment) {
  EXPECT_TRUE(contains(Partition({2, 1}), Partition({1, 1})));
  EXPECT_FALSE(contains(Partition({2}), Partition({1, 1})));
  EXPECT_TRUE(contains(Partition({4, 2}), Partition()));
}

TEST(Partition, ContainmentIsAPartialOrder) {
  auto all = partitions_up_to(8, 8, 8);
  for (const auto& a : all) {
    EXPECT_TRUE(contains(a, a));
    for (const auto& b : all) {
      if (contains(a, b) && contains(b, a)) EXPECT_EQ(a, b);
    }
  }
  // transitivity on a smaller slice keeps this cubic loop fast
  auto small = partitions_up_to(6, 6, 6);
  for (const auto& a : small)
    for (const auto& b : small) {
      if (!contains(a, b)) continue;
      for (const auto& c : small)
        if (contains(b, c)) EXPECT_TRUE(contains(a, c));
    }
}

TEST(Partition, Admissibility) {
  EXPECT_TRUE(is_admissible(Partition({1}), 2, 1));
  EXPECT_FALSE(is_admissible(Partition({2}), 3, 2));
  EXPECT_TRUE(is_admissible(Partition(), 5, 3));
  EXPECT_FALSE(is_admissible(Partition({1, 1, 1}), 4, 1));
}

TEST(Partition, Jumps) {
  EXPECT_EQ(jumps(Partition({3, 1, 0}), 7, 3).sigma(), (std::vector<unsigned>{1, 4, 6, 7}));
  EXPECT_EQ(jumps(Partition(), 5, 2).sigma(), (std::vector<unsigned>{3, 4, 5}));
  EXPECT_EQ(jumps(Partition({1}), 2, 1).sigma(), (std::vector<unsigned>{0, 2}));
  EXPECT_THROW(jumps(Partition({2}), 3, 2), std::invalid_argument);
}

TEST(Partition, JumpsRoundTripForAllAdmissible) {
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned m = 0; m <= n; ++m)
      for (const auto& lambda : partitions_up_to((m + 1) * (n - m), n - m, m + 1)) {
        auto s = jumps(lambda, n, m);
        EXPECT_EQ(s.to_partition(), lambda);
      }
}

TEST(Partition, Enumeration) {
  EXPECT_EQ(enumerate_partitions(2, 2, 2), (std::vector<Partition>{Partition({2}), Partition({1, 1})}));
  EXPECT_EQ(enumerate_partitions(2, 2, 2, Partition({1, 1})), (std::vector<Partition>{Partition({1, 1})}));
  EXPECT_EQ(enumerate_partitions(3, 1, 3), (std::vector<Partition>{Partition({1, 1, 1})}));
  EXPECT_EQ(enumerate_partitions(0, 0, 0), (std::vector<Partition>{Partition()}));
  EXPECT_TRUE(enumerate_partitions(2, 2, 2, Partition({3})).empty());
}

TEST(Partition, EnumerationCountsMatchPartitionFunction) {
  for (unsigned k = 0; k <= 12; ++k)
    EXPECT_EQ(enumerate_partitions(k, k, k).size(), hilbertkit::oracle::partition_count(k)) << k;
}

TEST(Partition, EnumerationIsLexicographicallyDescending) {
  auto ps = enumerate_partitions(7, 7, 7);
  for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_GT(ps[i - 1], ps[i]);
}
