// divergence.hpp - relative entropy, Petz and sandwiched Renyi divergences,
// min/max relative entropies and f-divergences. Results are in bits; +inf is
// returned as std::numeric_limits<double>::infinity().

#pragma once

#include "qsuff/linalg.hpp"
#include "qsuff/quantum.hpp"

namespace qsuff {

/// Support leak Tr{P_ker(sigma) rho} above which supp(rho) is not contained in
/// supp(sigma).
inline constexpr double kSupportLeakTol = 1e-10;

class AlphaParameter {
 public:
  /// Throws InvalidArgument unless alpha is finite, positive and farther than
  /// 1e-6 from 1.
  explicit AlphaParameter(double alpha);

  double value() const noexcept { return alpha_; }
  /// (2 alpha - 1) / alpha.
  double gamma() const noexcept { return gamma_; }
  /// alpha in (0,1) or (1,2).
  bool petz_certified() const noexcept;
  /// alpha in [1/2,1) or (1,inf).
  bool sandwiched_certified() const noexcept;

 private:
  double alpha_;
  double gamma_;
};

/// Tr{P_ker(sigma) rho} for the kernel of sigma under `conv`.
double support_leak(const Matrix& rho, const Matrix& sigma, const SupportConvention& conv = {});

double rel_entropy(const Matrix& rho, const Matrix& sigma, const SupportConvention& conv = {});
double rel_entropy(const DensityOperator& rho, const PositiveOperator& sigma,
                   const SupportConvention& conv = {});

/// 1/(alpha-1) log2 Tr{rho^alpha sigma^(1-alpha)}.
double renyi_div(const Matrix& rho, const Matrix& sigma, const AlphaParameter& a,
                 const SupportConvention& conv = {});
double renyi_div(const DensityOperator& rho, const PositiveOperator& sigma,
                 const AlphaParameter& a, const SupportConvention& conv = {});

/// 1/(alpha-1) log2 Tr{(sigma^s rho sigma^s)^alpha}, s = (1-alpha)/(2 alpha).
double sandwiched_div(const Matrix& rho, const Matrix& sigma, const AlphaParameter& a,
                      const SupportConvention& conv = {});
double sandwiched_div(const DensityOperator& rho, const PositiveOperator& sigma,
                      const AlphaParameter& a, const SupportConvention& conv = {});

/// -log2 F(rho, sigma).
double d_min(const Matrix& rho, const Matrix& sigma);
double d_min(const DensityOperator& rho, const PositiveOperator& sigma);

/// log2 lambda_max(sigma^-1/2 rho sigma^-1/2), +inf on a support leak.
double d_max(const Matrix& rho, const Matrix& sigma, const SupportConvention& conv = {});
double d_max(const DensityOperator& rho, const PositiveOperator& sigma,
             const SupportConvention& conv = {});

/// <Gamma| (sqrt(B) x I) f(B^-1 x A^T) (sqrt(B) x I) |Gamma>, evaluated as
/// sum_{j,k} f(a_k / b_j) b_j |<b_j|a_k>|^2 over the nonzero a_k. f is used
/// with its sign as given. Throws SingularB unless B is positive definite.
double f_divergence(const Matrix& a, const Matrix& b, const ScalarFunction& f,
                    const SupportConvention& conv = {});

}  // namespace qsuff
