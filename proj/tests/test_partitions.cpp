#include <gtest/gtest.h>

#include <algorithm>

#include <qcore/partitions.hpp>
#include <qcore/theta.hpp>

#include "golden_values.hpp"

using namespace qcore;

namespace {

std::uint64_t golden_at(const std::vector<const char*>& v, std::size_t n) { return std::stoull(v.at(n)); }

}  // namespace

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({3, 0}), std::invalid_argument);
  const Partition p({4, 3, 1, 1});
  EXPECT_EQ(p.weight(), 9u);
  std::ostringstream os;
  os << p;
  EXPECT_EQ(os.str(), "(4,3,1,1)");
}

TEST(Partition, Enumeration) {
  EXPECT_EQ(partitions_of(0).size(), 1u);
  EXPECT_TRUE(partitions_of(0)[0].empty());
  EXPECT_EQ(partitions_of(4).size(), 5u);
  const auto nine = partitions_of(9);
  EXPECT_NE(std::find(nine.begin(), nine.end(), Partition({4, 3, 1, 1})), nine.end());
  for (std::size_t n = 0; n <= 30; ++n) EXPECT_EQ(partitions_of(n).size(), golden_at(golden::kPartitions, n)) << n;
  for (const auto& p : nine) EXPECT_EQ(p.weight(), 9u);
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(conjugate(Partition({4, 3, 1, 1})), Partition({4, 2, 2, 1}));
  EXPECT_EQ(conjugate(Partition({6})), Partition({1, 1, 1, 1, 1, 1}));
  for (const auto& p : partitions_of(12)) EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(Hooks, Examples) {
  EXPECT_EQ(hook_numbers(Partition({4, 3, 1, 1})).flattened(), (std::vector<std::size_t>{7, 4, 3, 1, 5, 2, 1, 2, 1}));
  EXPECT_EQ(hook_numbers(Partition({1})).flattened(), std::vector<std::size_t>{1});
  EXPECT_EQ(hook_numbers(Partition({2, 1})).flattened(), (std::vector<std::size_t>{3, 1, 1}));
  EXPECT_TRUE(hook_numbers(Partition()).flattened().empty());
}

TEST(Hooks, TCore) {
  const Partition p({4, 3, 1, 1});
  EXPECT_TRUE(is_t_core(p, 6));
  EXPECT_FALSE(is_t_core(p, 7));
  EXPECT_FALSE(is_t_core(p, 5));
  for (std::size_t t = 8; t < 20; ++t) EXPECT_TRUE(is_t_core(p, t)) << t;
  EXPECT_TRUE(is_t_core(Partition(), 3));
}

TEST(Hooks, ConjugationInvariance) {
  for (std::size_t n = 0; n <= 20; ++n) {
    for (const auto& p : partitions_of(n)) {
      auto h = hook_numbers(p).flattened();
      auto hc = hook_numbers(conjugate(p)).flattened();
      std::sort(h.begin(), h.end());
      std::sort(hc.begin(), hc.end());
      ASSERT_EQ(h, hc);
      for (std::size_t t = 2; t <= 7; ++t) ASSERT_EQ(is_t_core(p, t), is_t_core(conjugate(p), t));
    }
  }
}

TEST(CoreCounts, Examples) {
  EXPECT_EQ(count_t_cores(4, 5), 5u);
  EXPECT_EQ(count_t_cores(0, 5), 1u);
  EXPECT_EQ(count_t_cores(0, 2), 1u);
  EXPECT_EQ(count_t_cores(2, 5), 2u);
  EXPECT_EQ(gen_a5bar(6).at(6), 10 * count_t_cores(2, 5));
  const auto six = t_cores_of(9, 6);
  EXPECT_NE(std::find(six.begin(), six.end(), Partition({4, 3, 1, 1})), six.end());
}

TEST(CoreCounts, MatchGoldenTables) {
  for (std::size_t n = 0; n <= 24; ++n) {
    EXPECT_EQ(count_t_cores(n, 4), golden_at(golden::kCores4, n)) << n;
    EXPECT_EQ(count_t_cores(n, 5), golden_at(golden::kCores5, n)) << n;
    EXPECT_EQ(count_t_cores(n, 6), golden_at(golden::kCores6, n)) << n;
    EXPECT_EQ(count_t_cores(n, 7), golden_at(golden::kCores7, n)) << n;
  }
}

TEST(CoreCounts, AgreeWithSeriesUpTo40) {
  const auto c = gen_c5(40);
  for (std::size_t n = 0; n <= 40; ++n) EXPECT_EQ(c.at(n), static_cast<unsigned long>(count_t_cores(n, 5))) << n;
}

TEST(CoreCounts, LargeTIsEverything) {
  for (std::size_t n = 1; n <= 15; ++n) EXPECT_EQ(count_t_cores(n, n + 1), partitions_of(n).size());
}

TEST(CoreCounts, Positivity) {
  for (std::size_t t : {4u, 5u, 6u}) {
    const auto gen = div(pow(euler_f(t, 40), static_cast<unsigned>(t)), euler_f(1, 40));
    for (std::size_t n = 0; n <= 40; ++n) {
      EXPECT_GT(gen.at(n), 0) << t << " " << n;
    }
    for (std::size_t n = 0; n <= 24; ++n) EXPECT_GE(count_t_cores(n, t), 1u) << t << " " << n;
  }
}

TEST(CoreCounts, Ceiling) {
  EXPECT_THROW(count_t_cores(61, 5), OracleScaleExceeded);
  EXPECT_THROW(count_t_cores(30, 5, 20), OracleScaleExceeded);
  try {
    count_t_cores(70, 5);
  } catch (const OracleScaleExceeded& e) {
    EXPECT_EQ(e.n(), 70u);
    EXPECT_EQ(e.ceiling(), 60u);
  }
}
