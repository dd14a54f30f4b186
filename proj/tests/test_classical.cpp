#include "qsuff/classical.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace qsuff::classical;

namespace {

Joint3 random_joint(std::mt19937_64& rng, std::size_t da, std::size_t db, std::size_t dc) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  Joint3 j{da, db, dc, Vec(da * db * dc)};
  double total = 0.0;
  for (double& x : j.p) total += (x = u(rng));
  for (double& x : j.p) x /= total;
  return j;
}

// p(c) p(a|c) p(b|c) from random conditionals.
Joint3 markov_joint(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  Joint3 j{2, 3, 2, Vec(12)};
  const double pc[] = {0.35, 0.65};
  for (std::size_t c = 0; c < 2; ++c) {
    double a[2], b[3], sa = 0, sb = 0;
    for (double& x : a) sa += (x = u(rng));
    for (double& x : b) sb += (x = u(rng));
    for (std::size_t ai = 0; ai < 2; ++ai)
      for (std::size_t bi = 0; bi < 3; ++bi) j.p[(ai * 3 + bi) * 2 + c] = pc[c] * a[ai] / sa * b[bi] / sb;
  }
  return j;
}

}  // namespace

TEST(Classical, DivergenceExamples) {
  const Vec p{0.5, 0.5}, q{0.25, 0.75};
  EXPECT_NEAR(kl(p, q), 0.5 + 0.5 * std::log2(2.0 / 3.0), 1e-15);
  EXPECT_NEAR(renyi(p, q, 2.0), std::log2(4.0 / 3.0), 1e-15);
  EXPECT_NEAR(sandwiched(p, q, 2.0), std::log2(4.0 / 3.0), 1e-15);
  EXPECT_NEAR(d_max(p, q), 1.0, 1e-15);
  EXPECT_NEAR(d_min(p, q), -2.0 * std::log2(std::sqrt(0.125) + std::sqrt(0.375)), 1e-15);
  EXPECT_NEAR(entropy({0.25, 0.25, 0.5}), 1.5, 1e-15);
  EXPECT_EQ(kl({1.0, 0.0}, {0.0, 1.0}), std::numeric_limits<double>::infinity());
}

TEST(Classical, PushForwardAndBayes) {
  const Transition t{{0.9, 0.4, 0.25}, {0.1, 0.6, 0.75}};
  const Vec q{0.2, 0.5, 0.3};
  const Vec tq = push_forward(t, q);
  EXPECT_NEAR(tq[0], 0.9 * 0.2 + 0.4 * 0.5 + 0.25 * 0.3, 1e-15);
  EXPECT_NEAR(tq[0] + tq[1], 1.0, 1e-15);
  const Vec back = bayes_recover(t, q, q);
  for (std::size_t x = 0; x < 3; ++x) EXPECT_NEAR(back[x], q[x], 1e-15);
}

TEST(Classical, CmiExamples) {
  // 1/2 (|00> + |11>) on AB with C fixed.
  Joint3 corr{2, 2, 2, Vec(8, 0.0)};
  corr.p[0] = corr.p[6] = 0.5;
  EXPECT_NEAR(cmi(corr), 1.0, 1e-15);
  for (double a : {0.25, 0.5, 0.75}) EXPECT_NEAR(renyi_cmi(corr, a), 1.0, 1e-14);
  // GHZ-diagonal: Markov through C.
  Joint3 ghz{2, 2, 2, Vec(8, 0.0)};
  ghz.p[0] = ghz.p[7] = 0.5;
  EXPECT_NEAR(cmi(ghz), 0.0, 1e-15);
}

TEST(Classical, MarkovChainsVanish) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const Joint3 j = markov_joint(rng);
    EXPECT_NEAR(cmi(j), 0.0, 1e-14);
    for (double a : {0.25, 0.75, 1.5, 3.0}) {
      EXPECT_NEAR(renyi_cmi(j, a), 0.0, 1e-13);
      EXPECT_NEAR(sandwiched_cmi(j, a), 0.0, 1e-13);
    }
    EXPECT_NEAR(i_max(j), 0.0, 1e-13);
    EXPECT_NEAR(i_min(j), 0.0, 1e-13);
  }
}

TEST(Classical, CmiEntropyIdentity) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const Joint3 j = random_joint(rng, 2, 3, 2);
    Vec ac(4, 0.0), bc(6, 0.0), c(2, 0.0);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t k = 0; k < 2; ++k) {
          ac[a * 2 + k] += j.at(a, b, k);
          bc[b * 2 + k] += j.at(a, b, k);
          c[k] += j.at(a, b, k);
        }
    EXPECT_NEAR(cmi(j), entropy(ac) + entropy(bc) - entropy(c) - entropy(j.p), 1e-13);
    EXPECT_GE(cmi(j), 0.0);
    EXPECT_GE(i_max(j), cmi(j) - 1e-12);
    EXPECT_LE(i_min(j), cmi(j) + 1e-12);
  }
}

TEST(Classical, DeltaFamily) {
  const Transition t{{0.7, 0.2, 0.5}, {0.3, 0.8, 0.5}};
  const Vec p{0.5, 0.3, 0.2}, q{0.2, 0.2, 0.6};
  EXPECT_NEAR(rel_ent_diff(p, q, t), kl(p, q) - kl(push_forward(t, p), push_forward(t, q)), 1e-15);
  EXPECT_GE(rel_ent_diff(p, q, t), 0.0);
  for (double a : {0.25, 0.75, 1.5}) EXPECT_GE(delta_alpha(p, q, t, a), 0.0);
  for (double a : {0.6, 2.0, 5.0}) EXPECT_GE(delta_tilde_alpha(p, q, t, a), 0.0);
  EXPECT_GE(delta_min(p, q, t), 0.0);
  EXPECT_GE(delta_max(p, q, t), 0.0);
  // A permutation loses nothing.
  const Transition perm{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  EXPECT_NEAR(rel_ent_diff(p, q, perm), 0.0, 1e-15);
  EXPECT_NEAR(delta_alpha(p, q, perm, 1.5), 0.0, 1e-14);
  EXPECT_NEAR(delta_tilde_alpha(p, q, perm, 2.0), 0.0, 1e-14);
  EXPECT_NEAR(delta_min(p, q, perm), 0.0, 1e-14);
  EXPECT_NEAR(delta_max(p, q, perm), 0.0, 1e-14);
}

TEST(Classical, LimitsAtOne) {
  const Vec p{0.1, 0.6, 0.3}, q{0.3, 0.3, 0.4};
  EXPECT_NEAR(renyi(p, q, 1.0 + 1e-6), kl(p, q), 1e-5);
  EXPECT_NEAR(sandwiched(p, q, 1.0 - 1e-6), kl(p, q), 1e-5);
}
