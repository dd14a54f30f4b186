#include "qsuff/divergence.hpp"
#include "qsuff/error.hpp"
#include "support.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>

using namespace qsuff;
using namespace qsuff::testing;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

double min_eig(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  return es.eigenvalues().minCoeff();
}

Matrix half_half() { return diag({0.5, 0.5}); }
Matrix quarter() { return diag({0.25, 0.75}); }

}  // namespace

TEST(AlphaParameter, ValidationAndRanges) {
  for (double bad : {1.0, 1.0 + 1e-7, 1.0 - 1e-7, 0.0, -0.5, kInf, std::nan("")})
    EXPECT_THROW((void)AlphaParameter(bad), Error) << bad;
  const AlphaParameter a(2.0);
  EXPECT_DOUBLE_EQ(a.gamma(), 1.5);
  EXPECT_FALSE(a.petz_certified());
  EXPECT_TRUE(a.sandwiched_certified());
  EXPECT_TRUE(AlphaParameter(0.25).petz_certified());
  EXPECT_FALSE(AlphaParameter(0.25).sandwiched_certified());
  EXPECT_TRUE(AlphaParameter(0.5).sandwiched_certified());
  EXPECT_TRUE(AlphaParameter(1.9).petz_certified());
  EXPECT_DOUBLE_EQ(AlphaParameter(0.5).gamma(), 0.0);
}

TEST(RelEntropy, Examples) {
  const Matrix rho = random_density({3}, 3, 1).matrix();
  EXPECT_NEAR(rel_entropy(rho, rho), 0.0, 1e-12);
  EXPECT_NEAR(rel_entropy(half_half(), quarter()), 0.5 + 0.5 * std::log2(2.0 / 3.0), 1e-12);
  EXPECT_NEAR(rel_entropy(half_half(), quarter()), 0.20752, 1e-5);
  EXPECT_EQ(rel_entropy(diag({1.0, 0.0}), diag({0.0, 1.0})), kInf);
  EXPECT_THROW(rel_entropy(half_half(), identity(3) / 3.0), Error);
}

TEST(RelEntropy, ClassicalOracle) {
  Rng rng(3);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    double p[4], q[4], sp = 0, sq = 0;
    for (int i = 0; i < 4; ++i) sp += (p[i] = u(rng)), sq += (q[i] = u(rng));
    double kl = 0.0;
    for (int i = 0; i < 4; ++i) kl += p[i] / sp * std::log2((p[i] / sp) / (q[i] / sq));
    const Matrix rho = diag({p[0] / sp, p[1] / sp, p[2] / sp, p[3] / sp});
    const Matrix sigma = diag({q[0] / sq, q[1] / sq, q[2] / sq, q[3] / sq});
    // Rotating both by the same unitary leaves the value unchanged.
    const Matrix w = random_unitary(4, rng);
    EXPECT_NEAR(rel_entropy(w * rho * w.adjoint(), w * sigma * w.adjoint()), kl, 1e-10);
  }
}

TEST(RenyiDiv, Examples) {
  const Matrix rho = random_density({3}, 3, 2).matrix();
  for (double a : {0.3, 0.5, 1.5, 3.0}) EXPECT_NEAR(renyi_div(rho, rho, AlphaParameter(a)), 0.0, 1e-12);
  EXPECT_NEAR(renyi_div(half_half(), quarter(), AlphaParameter(2.0)), std::log2(4.0 / 3.0), 1e-12);
  EXPECT_NEAR(renyi_div(half_half(), quarter(), AlphaParameter(2.0)), 0.41504, 1e-5);
  const Matrix sigma = random_density({3}, 3, 4).matrix();
  const double d = rel_entropy(rho, sigma);
  EXPECT_NEAR(renyi_div(rho, sigma, AlphaParameter(1.0 + 1e-4)), d, 1e-3);
  EXPECT_NEAR(renyi_div(rho, sigma, AlphaParameter(1.0 - 1e-4)), d, 1e-3);
}

TEST(RenyiDiv, SupportConventions) {
  // alpha > 1 with a leak is infinite; alpha < 1 stays finite.
  EXPECT_EQ(renyi_div(half_half(), diag({1.0, 0.0}), AlphaParameter(1.5)), kInf);
  EXPECT_NEAR(renyi_div(half_half(), diag({1.0, 0.0}), AlphaParameter(0.5)),
              std::log2(std::sqrt(0.5)) / -0.5, 1e-12);
  EXPECT_EQ(renyi_div(diag({1.0, 0.0}), diag({0.0, 1.0}), AlphaParameter(0.5)), kInf);
}

TEST(SandwichedDiv, Examples) {
  const Matrix rho = random_density({3}, 3, 5).matrix();
  for (double a : {0.5, 0.75, 2.0, 5.0})
    EXPECT_NEAR(sandwiched_div(rho, rho, AlphaParameter(a)), 0.0, 1e-12);
  for (double a : {0.6, 0.75, 1.5, 2.0, 3.0})
    EXPECT_NEAR(sandwiched_div(half_half(), quarter(), AlphaParameter(a)),
                renyi_div(half_half(), quarter(), AlphaParameter(a)), 1e-12);
  Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix r = random_density({3}, 2, rng).matrix();
    const Matrix s = random_density({3}, 3, rng).matrix();
    EXPECT_NEAR(sandwiched_div(r, s, AlphaParameter(0.5)), d_min(r, s), 1e-9);
    // Sandwiched never exceeds Petz.
    for (double a : {0.6, 1.5, 2.0})
      EXPECT_LE(sandwiched_div(r, s, AlphaParameter(a)), renyi_div(r, s, AlphaParameter(a)) + 1e-9);
  }
}

TEST(DMin, Examples) {
  const Matrix rho = random_density({2}, 2, 7).matrix();
  EXPECT_NEAR(d_min(rho, rho), 0.0, 1e-12);
  EXPECT_NEAR(d_min(diag({1.0, 0.0}), plus_state()), 1.0, 1e-12);
  EXPECT_EQ(d_min(diag({1.0, 0.0}), diag({0.0, 1.0})), kInf);
}

TEST(DMax, Examples) {
  const Matrix rho = random_density({3}, 3, 8).matrix();
  EXPECT_NEAR(d_max(rho, rho), 0.0, 1e-12);
  EXPECT_NEAR(d_max(half_half(), quarter()), 1.0, 1e-12);
  EXPECT_EQ(d_max(half_half(), diag({1.0, 0.0})), kInf);
}

TEST(DMax, SemidefiniteCheck) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix r = random_density({3}, 1 + static_cast<std::size_t>(trial % 3), rng).matrix();
    const Matrix s = random_density({3}, 3, rng).matrix();
    const double d = d_max(r, s);
    ASSERT_TRUE(std::isfinite(d));
    EXPECT_GE(min_eig(std::exp2(d) * s - r), -1e-10);
    EXPECT_LT(min_eig(std::exp2(d - 0.01) * s - r), 0.0);
  }
}

TEST(FDivergence, Examples) {
  const auto xlogx = [](double x) { return x > 0 ? x * std::log2(x) : 0.0; };
  EXPECT_NEAR(f_divergence(half_half(), quarter(), xlogx), 0.20752, 1e-5);
  EXPECT_NEAR(f_divergence(half_half(), quarter(), xlogx), rel_entropy(half_half(), quarter()),
              1e-12);
  EXPECT_NEAR(f_divergence(half_half(), quarter(), [](double x) { return x * x; }), 4.0 / 3.0,
              1e-12);
  Rng rng(10);
  const Matrix a = random_density({3}, 3, rng).matrix() * 2.5;
  const Matrix b = random_density({3}, 3, rng).matrix();
  EXPECT_NEAR(f_divergence(a, b, [](double x) { return x; }), 2.5, 1e-12);
  EXPECT_THROW(f_divergence(a, diag({1.0, 0.0, 0.5}), [](double x) { return x; }), Error);
  EXPECT_THROW(f_divergence(a, b, [](double) { return std::nan(""); }), Error);
}

TEST(FDivergence, MatchesRenyiTrace) {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix r = random_density({3}, 3, rng).matrix();
    const Matrix s = random_density({3}, 3, rng).matrix();
    for (double a : {0.3, 0.7, 1.5, 2.0}) {
      const double expect = std::exp2((a - 1.0) * renyi_div(r, s, AlphaParameter(a)));
      const double got = f_divergence(r, s, [a](double x) { return std::pow(x, a); });
      EXPECT_NEAR(got / expect, 1.0, 1e-9);
    }
    const auto xlogx = [](double x) { return x > 0 ? x * std::log2(x) : 0.0; };
    EXPECT_NEAR(f_divergence(r, s, xlogx), rel_entropy(r, s), 1e-10);
  }
}

TEST(MinMaxLemma, NonNegativeAndFaithful) {
  Rng rng(12);
  const AlphaParameter petz(1.5), sand(2.0);
  int far_pairs = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix w = random_density({3}, 3, rng).matrix();
    const Matrix t = random_density({3}, 3, rng).matrix() * 0.9;  // Tr w >= Tr t
    const double values[] = {d_min(w, t), d_max(w, t), renyi_div(w, t, petz),
                             sandwiched_div(w, t, sand)};
    for (double v : values) EXPECT_GE(v, -1e-10);
    if (trace_norm(w - t) / 2.0 >= 0.1) {
      ++far_pairs;
      for (double v : values) EXPECT_GT(v, 1e-6);
    }
    const double equal[] = {d_min(w, w), d_max(w, w), renyi_div(w, w, petz),
                            sandwiched_div(w, w, sand)};
    for (double v : equal) EXPECT_LE(std::abs(v), 1e-8);
  }
  EXPECT_GT(far_pairs, 0);
}

TEST(DataProcessing, RandomChannels) {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Channel n = random_channel(4, 3, 3, rng);
    const Matrix r = random_density({4}, 4, rng).matrix();
    const Matrix s = random_density({4}, 4, rng).matrix();
    const Matrix nr = apply_channel(n, r), ns = apply_channel(n, s);
    EXPECT_LE(rel_entropy(nr, ns), rel_entropy(r, s) + 1e-9);
    for (double a : {0.25, 0.5, 0.75, 1.25, 1.5, 1.75, 2.0})
      EXPECT_LE(renyi_div(nr, ns, AlphaParameter(a)), renyi_div(r, s, AlphaParameter(a)) + 1e-9);
    for (double a : {0.5, 0.6, 0.75, 0.9, 1.5, 2.0, 3.0, 5.0})
      EXPECT_LE(sandwiched_div(nr, ns, AlphaParameter(a)),
                sandwiched_div(r, s, AlphaParameter(a)) + 1e-9);
  }
}

TEST(TypedOverloads, MatchMatrixForms) {
  const DensityOperator r = random_density({2}, 2, 14);
  const PositiveOperator s = validate_positive(diag({0.3, 1.2}));
  EXPECT_EQ(rel_entropy(r, s), rel_entropy(r.matrix(), s.matrix()));
  EXPECT_EQ(d_max(r, s), d_max(r.matrix(), s.matrix()));
  EXPECT_EQ(d_min(r, s), d_min(r.matrix(), s.matrix()));
  EXPECT_EQ(renyi_div(r, s, AlphaParameter(1.5)), renyi_div(r.matrix(), s.matrix(), AlphaParameter(1.5)));
  EXPECT_EQ(sandwiched_div(r, s, AlphaParameter(2.0)),
            sandwiched_div(r.matrix(), s.matrix(), AlphaParameter(2.0)));
  EXPECT_NEAR(support_leak(half_half(), diag({1.0, 0.0})), 0.5, 1e-15);
}
