#include "qsuff/divergence.hpp"

#include "qsuff/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qsuff {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same_dim(const Matrix& rho, const Matrix& sigma, const char* where) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(where) + ": operand dimensions differ");
  }
}

// sum of lambda log2 lambda over the positive spectrum.
double trace_x_log2_x(const SpectralDecomposition& dec, const SupportConvention& conv) {
  const double threshold = dec.zero_threshold(conv);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i) {
    const double l = dec.eigenvalues(i);
    if (l > threshold) sum += l * std::log2(l);
  }
  return sum;
}

}  // namespace

AlphaParameter::AlphaParameter(double alpha) : alpha_(alpha), gamma_((2.0 * alpha - 1.0) / alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw Error(ErrorKind::InvalidArgument, "alpha must be finite and positive");
  }
  if (std::abs(alpha - 1.0) <= 1e-6) {
    throw Error(ErrorKind::InvalidArgument, "alpha within 1e-6 of 1; use the von Neumann quantity");
  }
}

bool AlphaParameter::petz_certified() const noexcept {
  return (alpha_ > 0.0 && alpha_ < 1.0) || (alpha_ > 1.0 && alpha_ < 2.0);
}

bool AlphaParameter::sandwiched_certified() const noexcept {
  return (alpha_ >= 0.5 && alpha_ < 1.0) || alpha_ > 1.0;
}

double support_leak(const Matrix& rho, const Matrix& sigma, const SupportConvention& conv) {
  require_same_dim(rho, sigma, "support_leak");
  const Matrix p = kernel_projector(hermitian_eig(sigma), conv);
  return (p * rho).trace().real();
}

double rel_entropy(const Matrix& rho, const Matrix& sigma, const SupportConvention& conv) {
  require_same_dim(rho, sigma, "rel_entropy");
  const SpectralDecomposition sigma_dec = hermitian_eig(sigma);
  if ((kernel_projector(sigma_dec, conv) * rho).trace().real() > kSupportLeakTol) return kInf;
  const double neg_entropy = trace_x_log2_x(hermitian_eig(rho), conv);
  const Matrix log_sigma = matrix_function(sigma_dec, [](double x) { return std::log2(x); }, conv);
  return neg_entropy - (rho * log_sigma).trace().real();
}

double rel_entropy(const DensityOperator& rho, const PositiveOperator& sigma,
                   const SupportConvention& conv) {
  return rel_entropy(rho.matrix(), sigma.matrix(), conv);
}

double renyi_div(const Matrix& rho, const Matrix& sigma, const AlphaParameter& a,
                 const SupportConvention& conv) {
  require_same_dim(rho, sigma, "renyi_div");
  const double alpha = a.value();
  const SpectralDecomposition sigma_dec = hermitian_eig(sigma);
  if (alpha > 1.0 && (kernel_projector(sigma_dec, conv) * rho).trace().real() > kSupportLeakTol) {
    return kInf;
  }
  // sum_{j,k} a_k^alpha b_j^(1-alpha) |<b_j|a_k>|^2 keeps every term
  // nonnegative, so ill-conditioned sigma does not cancel catastrophically.
  const SpectralDecomposition rho_dec = hermitian_eig(rho);
  const Matrix overlap = (sigma_dec.eigenvectors.adjoint() * rho_dec.eigenvectors).cwiseAbs2();
  const double rho_zero = rho_dec.zero_threshold(conv);
  const double sigma_zero = sigma_dec.zero_threshold(conv);
  double q = 0.0;
  for (Eigen::Index k = 0; k < overlap.cols(); ++k) {
    const double a_k = rho_dec.eigenvalues(k);
    if (a_k <= rho_zero) continue;
    for (Eigen::Index j = 0; j < overlap.rows(); ++j) {
      const double b_j = sigma_dec.eigenvalues(j);
      if (b_j <= sigma_zero) continue;
      q += std::pow(a_k, alpha) * std::pow(b_j, 1.0 - alpha) * overlap(j, k).real();
    }
  }
  if (q <= 0.0) return kInf;
  return std::log2(q) / (alpha - 1.0);
}

double renyi_div(const DensityOperator& rho, const PositiveOperator& sigma,
                 const AlphaParameter& a, const SupportConvention& conv) {
  return renyi_div(rho.matrix(), sigma.matrix(), a, conv);
}

double sandwiched_div(const Matrix& rho, const Matrix& sigma, const AlphaParameter& a,
                      const SupportConvention& conv) {
  require_same_dim(rho, sigma, "sandwiched_div");
  const double alpha = a.value();
  const SpectralDecomposition sigma_dec = hermitian_eig(sigma);
  if (alpha > 1.0 && (kernel_projector(sigma_dec, conv) * rho).trace().real() > kSupportLeakTol) {
    return kInf;
  }
  const double s = (1.0 - alpha) / (2.0 * alpha);
  const Matrix sigma_s = matrix_power(sigma_dec, s, conv);
  const SpectralDecomposition inner = hermitian_eig(sigma_s * rho * sigma_s);
  const double threshold = inner.zero_threshold(conv);
  double q = 0.0;
  for (Eigen::Index i = 0; i < inner.eigenvalues.size(); ++i) {
    const double l = inner.eigenvalues(i);
    if (l > threshold) q += std::pow(l, alpha);
  }
  if (q <= 0.0) return kInf;
  return std::log2(q) / (alpha - 1.0);
}

double sandwiched_div(const DensityOperator& rho, const PositiveOperator& sigma,
                      const AlphaParameter& a, const SupportConvention& conv) {
  return sandwiched_div(rho.matrix(), sigma.matrix(), a, conv);
}

double d_min(const Matrix& rho, const Matrix& sigma) {
  require_same_dim(rho, sigma, "d_min");
  const double f = fidelity(rho, sigma);
  if (f <= 0.0) return kInf;
  return -std::log2(f);
}

double d_min(const DensityOperator& rho, const PositiveOperator& sigma) {
  return d_min(rho.matrix(), sigma.matrix());
}

double d_max(const Matrix& rho, const Matrix& sigma, const SupportConvention& conv) {
  require_same_dim(rho, sigma, "d_max");
  const SpectralDecomposition sigma_dec = hermitian_eig(sigma);
  if ((kernel_projector(sigma_dec, conv) * rho).trace().real() > kSupportLeakTol) return kInf;
  const Matrix inv_half = matrix_power(sigma_dec, -0.5, conv);
  const SpectralDecomposition ratio = hermitian_eig(inv_half * rho * inv_half);
  const double top = ratio.eigenvalues(0);
  if (top <= 0.0) return -kInf;
  return std::log2(top);
}

double d_max(const DensityOperator& rho, const PositiveOperator& sigma,
             const SupportConvention& conv) {
  return d_max(rho.matrix(), sigma.matrix(), conv);
}

double f_divergence(const Matrix& a, const Matrix& b, const ScalarFunction& f,
                    const SupportConvention& conv) {
  require_same_dim(a, b, "f_divergence");
  const SpectralDecomposition b_dec = hermitian_eig(b);
  const Eigen::Index n = b_dec.eigenvalues.size();
  if (n == 0 || b_dec.eigenvalues(n - 1) <= b_dec.zero_threshold(conv) ||
      b_dec.eigenvalues(n - 1) <= 0.0) {
    throw Error(ErrorKind::SingularB, "f_divergence: B is not positive definite");
  }
  const SpectralDecomposition a_dec = hermitian_eig(a);
  const double a_threshold = a_dec.zero_threshold(conv);
  // |<b_j|a_k>|^2 for every pair of eigenvectors.
  const Eigen::MatrixXd overlap = (b_dec.eigenvectors.adjoint() * a_dec.eigenvectors).cwiseAbs2();
  double sum = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double ak = a_dec.eigenvalues(k);
    if (std::abs(ak) <= a_threshold) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double bj = b_dec.eigenvalues(j);
      const double fx = f(ak / bj);
      if (!std::isfinite(fx)) {
        throw Error(ErrorKind::DomainError, "f_divergence: f is not finite on the spectrum");
      }
      sum += fx * bj * overlap(j, k);
    }
  }
  return sum;
}

}  // namespace qsuff
