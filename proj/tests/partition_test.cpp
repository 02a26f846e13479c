#include <gtest/gtest.h>

#include <set>

#include "schurid/errors.hpp"
#include "schurid/partition.hpp"

using namespace schurid;

TEST(Partition, ValidatesAndSerializes) {
  EXPECT_EQ(Partition({7, 6, 2, 2, 1, 1}).to_string(), "[7,6,2,2,1,1]");
  EXPECT_EQ(Partition().to_string(), "[]");
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_EQ(Partition::from_padded({3, 1, 0, 0}), Partition({3, 1}));
  EXPECT_EQ(Partition({3, 1})[5], 0);
  EXPECT_THROW(ExponentVector({1, -1}), std::invalid_argument);
}

TEST(Partition, Containment) {
  EXPECT_TRUE(Partition({3, 2}).contains(Partition({2, 2})));
  EXPECT_FALSE(Partition({3}).contains(Partition({1, 1})));
  EXPECT_TRUE(Partition({1}).contains(Partition()));
}

TEST(HookProduct, Examples) {
  EXPECT_EQ(hook_product(Partition()), 1);
  EXPECT_EQ(hook_product(Partition({2, 1})), 3);
  EXPECT_EQ(hook_product(Partition({2, 2})), 12);
  EXPECT_EQ(hook_product(Partition({3, 1})), 8);
}

TEST(HookProduct, RectangleIsSuperfactorialRatio) {
  for (int k = 1; k <= 6; ++k)
    for (int l = 1; l <= 6; ++l) {
      const Partition rect(std::vector<int>(static_cast<std::size_t>(l), k));
      EXPECT_EQ(hook_product(rect) * superfactorial(static_cast<std::size_t>(k)) *
                    superfactorial(static_cast<std::size_t>(l)),
                superfactorial(static_cast<std::size_t>(k + l)));
    }
}

TEST(HookProduct, AgreesWithShiftedFactorialForm) {
  for (const Partition& lambda : enumerate_partitions(8, 8)) {
    for (std::size_t n = lambda.length(); n <= lambda.length() + 3; ++n) {
      if (n == 0) continue;
      const ExponentVector k = shifted_parts(lambda, n);
      BigInt num = 1;
      for (int ki : k.entries()) num *= factorial(static_cast<unsigned long>(ki));
      EXPECT_EQ(num, hook_product(lambda) * vandermonde(k)) << lambda.to_string() << " n=" << n;
    }
  }
}

TEST(HookProduct, ConjugationInvariant) {
  for (const Partition& lambda : enumerate_partitions(9, 9))
    EXPECT_EQ(hook_product(lambda), hook_product(conjugate(lambda)));
}

TEST(ShiftedParts, Examples) {
  EXPECT_EQ(shifted_parts(Partition(), 3), ExponentVector({2, 1, 0}));
  EXPECT_EQ(shifted_parts(Partition({2, 1}), 2), ExponentVector({3, 1}));
  EXPECT_EQ(shifted_parts(Partition({3, 1}), 2), ExponentVector({4, 1}));
  EXPECT_THROW(shifted_parts(Partition({1, 1, 1}), 2), LengthError);
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(Partition({3, 1})), Partition({2, 1, 1}));
  EXPECT_EQ(conjugate(Partition({2, 2})), Partition({2, 2}));
  EXPECT_EQ(conjugate(Partition()), Partition());
  for (const Partition& lambda : enumerate_partitions(7, 7)) EXPECT_EQ(conjugate(conjugate(lambda)), lambda);
}

TEST(AddRectangle, Examples) {
  EXPECT_EQ(add_rectangle(Partition({2, 1}), 2, 3), Partition({4, 3, 2}));
  EXPECT_EQ(add_rectangle(Partition({2, 2}), -1, 2), Partition({1, 1}));
  EXPECT_THROW(add_rectangle(Partition({1}), -2, 2), ContainmentError);
  EXPECT_THROW(add_rectangle(Partition({1, 1, 1}), 1, 2), LengthError);
  EXPECT_EQ(add_rectangle(Partition(), 0, 4), Partition());
}

TEST(UnionAppend, Examples) {
  EXPECT_EQ(union_append(Partition({3, 2}), Partition({2, 1})), Partition({3, 2, 2, 1}));
  EXPECT_THROW(union_append(Partition({3, 2}), Partition({4})), OrderError);
  EXPECT_EQ(union_append(Partition(), Partition({1})), Partition({1}));
}

TEST(JoinShape, Examples) {
  EXPECT_EQ(join_shape(Partition({2, 1}), Partition({4, 2}), 2, 3, 2), Partition({7, 6, 2, 2, 1, 1}));
  EXPECT_EQ(join_shape(Partition(), Partition(), 2, 3, 0), Partition({3, 3}));
  EXPECT_EQ(join_shape(Partition({1}), Partition({1}), 1, 1, 0), Partition({2, 1}));
  EXPECT_THROW(join_shape(Partition(), Partition({1, 1}), 1, 1, 0), LengthError);
}

TEST(Vandermonde, Examples) {
  EXPECT_EQ(vandermonde(ExponentVector({3, 1, 0})), 6);
  EXPECT_EQ(vandermonde(ExponentVector({1, 1})), 0);
  EXPECT_EQ(vandermonde(ExponentVector({0, 1})), -1);
  EXPECT_EQ(superfactorial(4), 12);
  EXPECT_EQ(superfactorial(0), 1);
}

TEST(Enumeration, Examples) {
  EXPECT_EQ(enumerate_partitions(2, 2),
            (std::vector<Partition>{Partition(), Partition({1}), Partition({2}), Partition({1, 1})}));
  EXPECT_EQ(enumerate_partitions(0, 5), std::vector<Partition>{Partition()});
  EXPECT_EQ(enumerate_partitions(3, 1),
            (std::vector<Partition>{Partition(), Partition({1}), Partition({2}), Partition({3})}));
}

TEST(Enumeration, CountsAndUniqueness) {
  // p(n) for n = 0..10
  const std::vector<std::size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(partitions_of(n, 20).size(), p[static_cast<std::size_t>(n)]);
  const auto all = enumerate_partitions(10, 3);
  EXPECT_EQ(std::set<Partition>(all.begin(), all.end()).size(), all.size());
  for (std::size_t i = 1; i < all.size(); ++i) {
    EXPECT_LE(all[i - 1].size(), all[i].size());
    if (all[i - 1].size() == all[i].size()) EXPECT_GT(all[i - 1].parts(), all[i].parts());
  }
  std::vector<Partition> streamed;
  for_each_partition(10, 3, [&](const Partition& q) { streamed.push_back(q); });
  EXPECT_EQ(streamed, all);
}

TEST(Enumeration, Subpartitions) {
  const auto subs = subpartitions(Partition({2, 1}));
  EXPECT_EQ(subs.size(), 5u);
  for (const Partition& q : subs) EXPECT_TRUE(Partition({2, 1}).contains(q));
}
