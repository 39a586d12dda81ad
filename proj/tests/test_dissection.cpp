#include <gtest/gtest.h>

#include <random>

#include <qcore/dissection.hpp>
#include <qcore/theta.hpp>

#include "golden_values.hpp"
#include "support.hpp"

using namespace qcore;
using testing_support::from_strings;
using testing_support::random_series;

TEST(Dissect, Components) {
  const auto b = gen_b5bar(500);
  const auto d = dissect(b, 10);
  ASSERT_EQ(d.components.size(), 10u);
  EXPECT_TRUE(d.components[6].is_zero());
  EXPECT_TRUE(d.components[8].is_zero());
  const auto a = gen_a5bar(500);
  const auto c = gen_c5(500);
  const auto comp2 = dissect(a, 5).components[2];
  for (std::size_t n = 0; n <= comp2.order(); ++n) EXPECT_EQ(comp2.at(n), 4 * c.at(5 * n + 1)) << n;
}

TEST(Dissect, Trivial) {
  const auto a = from_strings(golden::kA5bar, 40);
  const auto d = dissect(a, 1);
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.components[0], a);
  EXPECT_THROW(dissect(a, 0), std::invalid_argument);
}

TEST(Dissect, ReassemblyOnRandomSeries) {
  std::mt19937_64 rng(20240501);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_series(rng, 1000);
    for (std::size_t m : {2u, 3u, 4u, 5u, 10u, 20u}) {
      const auto d = dissect(a, m);
      EXPECT_EQ(reassemble(d), a) << "m=" << m;
      // shift keeps the order, so the primitive route loses at most m-1 top terms
      TruncatedSeries sum(a.order());
      for (std::size_t r = 0; r < m; ++r) sum = add(sum, shift(inflate(extract_ap(a, m, r), m, a.order()), r));
      EXPECT_GE(sum.order() + m - 1, a.order()) << "m=" << m;
      EXPECT_EQ(sum, a.truncated(sum.order())) << "m=" << m;
    }
  }
}

TEST(Dissect, Orthogonality) {
  const auto a = gen_b5bar(300);
  const auto d = dissect(a, 4);
  for (std::size_t r = 0; r < 4; ++r) {
    const auto back = shift(inflate(d.components[r], 4, a.order()), r);
    for (std::size_t n = 0; n <= back.order(); ++n) EXPECT_EQ(back.at(n), n % 4 == r ? a.at(n) : 0) << r << " " << n;
  }
}

TEST(Lemma2, FourFormulas) {
  for (std::size_t n : {0u, 4u, 50u, 1000u}) {
    EXPECT_TRUE(verify_f1_5dissection(n).ok()) << n;
    EXPECT_TRUE(verify_inv_f1_5dissection(n).ok()) << n;
    EXPECT_TRUE(verify_phi_5dissection(n, false).ok()) << n;
    EXPECT_TRUE(verify_psi_5dissection(n, false).ok()) << n;
    EXPECT_TRUE(verify_phi_5dissection(n, true).ok()) << n;
    EXPECT_TRUE(verify_psi_5dissection(n, true).ok()) << n;
  }
}

TEST(Lemma2, FaultInjection) {
  const auto r = verify_f1_5dissection(50, TruncatedSeries::monomial(3, 1, 50));
  ASSERT_FALSE(r.ok());
  ASSERT_TRUE(r.mismatch);
  EXPECT_EQ(r.mismatch->index, 3);
  const auto r2 = verify_inv_f1_5dissection(200, TruncatedSeries::monomial(117, -1, 200));
  ASSERT_TRUE(r2.mismatch);
  EXPECT_EQ(r2.mismatch->index, 117);
}

TEST(Lemma2, InverseEulerPieces) {
  const auto p = invert(euler_f(1, 4));
  EXPECT_EQ(inverse_euler_5dissection_rhs(4), p);
  // sum p(5n+4) q^n = 5 f5^5/f1^6
  const auto inv = invert(euler_f(1, 1000));
  const auto comp = dissect(inv, 5).components[4];
  const auto want = scale(div(pow(euler_f(5, comp.order()), 5u), pow(euler_f(1, comp.order()), 6u)), 5);
  EXPECT_EQ(comp, want);
  for (std::size_t n = 0; n <= comp.order(); ++n) EXPECT_EQ(comp.at(n) % 5, 0);
}

TEST(Lemma2, PsiIndexThree) {
  const auto psi_q = psi(Sign::plus, 1, 100);
  EXPECT_EQ(psi_q.at(3), 1);
  EXPECT_TRUE(verify_psi_5dissection(100, false).ok());
}
