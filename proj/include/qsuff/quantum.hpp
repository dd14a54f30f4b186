// quantum.hpp - states, positive operators, channels in Kraus form, the Petz
// recovery channel, Stinespring dilations and Heisenberg-Weyl unitaries.

#pragma once

#include "qsuff/linalg.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qsuff {

using Rng = std::mt19937_64;

inline constexpr double kStateTol = 1e-10;

/// Hermitian positive semidefinite operator with declared subsystem dims.
/// Only constructible through validate_positive / validate_density.
class PositiveOperator {
 public:
  const Matrix& matrix() const noexcept { return matrix_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }
  double max_eigenvalue() const noexcept { return max_eigenvalue_; }
  /// All eigenvalues exceed the validation tolerance.
  bool positive_definite() const noexcept { return positive_definite_; }
  double trace() const { return real_trace(matrix_); }

 protected:
  PositiveOperator(Matrix m, Dims dims, double min_eig, double max_eig, bool pd)
      : matrix_(std::move(m)), dims_(std::move(dims)), min_eigenvalue_(min_eig),
        max_eigenvalue_(max_eig), positive_definite_(pd) {}

  friend PositiveOperator validate_positive(const Matrix&, const Dims&, double);

 private:
  Matrix matrix_;
  Dims dims_;
  double min_eigenvalue_;
  double max_eigenvalue_;
  bool positive_definite_;
};

/// Unit-trace PositiveOperator.
class DensityOperator : public PositiveOperator {
 public:
  bool rank_deficient() const noexcept { return !positive_definite(); }

 private:
  explicit DensityOperator(PositiveOperator p) : PositiveOperator(std::move(p)) {}
  friend DensityOperator validate_density(const Matrix&, const Dims&, double);
};

/// Throws NonSquare/NonHermitian, NotPositive (an eigenvalue below -tol) or
/// DimensionMismatch (dims do not multiply to the matrix dimension). An
/// empty `dims` is read as a single system.
PositiveOperator validate_positive(const Matrix& m, const Dims& dims = {},
                                   double tol = kStateTol);

/// As validate_positive, plus NotNormalized when |Tr - 1| > tol.
DensityOperator validate_density(const Matrix& m, const Dims& dims = {},
                                 double tol = kStateTol);

/// G G^dagger / Tr(G G^dagger) with G a complex Gaussian dim x rank matrix.
DensityOperator random_density(const Dims& dims, std::size_t rank, Rng& rng);
DensityOperator random_density(const Dims& dims, std::size_t rank, std::uint64_t seed);

/// (1 - eps) rho + eps I / d.
DensityOperator perturb_positive(const DensityOperator& rho, double eps);

/// ||sqrt(rho) sqrt(sigma)||_1^2.
double fidelity(const DensityOperator& rho, const DensityOperator& sigma);
double fidelity(const Matrix& rho, const Matrix& sigma);

/// Completely positive map in Kraus form, A -> sum_i K_i A K_i^dagger.
class Channel {
 public:
  /// Checks sum K_i^dagger K_i = I within tp_tol.
  static Channel from_kraus(std::vector<Matrix> kraus, double tp_tol = kStateTol);
  /// Skips the trace-preservation check; used for maps that are trace
  /// preserving only on a subspace (e.g. Petz recovery with singular N(sigma)).
  static Channel from_kraus_unchecked(std::vector<Matrix> kraus);

  const std::vector<Matrix>& kraus() const noexcept { return kraus_; }
  std::size_t dim_in() const noexcept { return dim_in_; }
  std::size_t dim_out() const noexcept { return dim_out_; }

  /// max |sum K^dagger K - I|.
  double trace_preservation_error() const;

 private:
  Channel(std::vector<Matrix> kraus, std::size_t din, std::size_t dout)
      : kraus_(std::move(kraus)), dim_in_(din), dim_out_(dout) {}

  std::vector<Matrix> kraus_;
  std::size_t dim_in_;
  std::size_t dim_out_;
};

Matrix apply_channel(const Channel& n, const Matrix& a);
/// sum_i K_i^dagger B K_i.
Matrix adjoint_apply(const Channel& n, const Matrix& b);
Channel compose(const Channel& second, const Channel& first);

/// lambda_min(N(I)) > tol.
bool is_strict_cptp(const Channel& n, double tol = kStateTol);

/// omega -> sigma^{1/2} N^dagger(N(sigma)^{-1/2} omega N(sigma)^{-1/2}) sigma^{1/2},
/// with Kraus operators sigma^{1/2} K_i^dagger N(sigma)^{-1/2}. Trace
/// preserving on supp N(sigma). Throws DegenerateSigma for sigma = 0.
Channel petz_recovery(const PositiveOperator& sigma, const Channel& n,
                      const SupportConvention& conv = {});
Channel petz_recovery(const Matrix& sigma, const Channel& n, const SupportConvention& conv = {});

struct Dilation {
  Matrix isometry;  // (dim_out * env_dim) x dim_in, output factor first
  std::size_t env_dim = 0;
};

/// V = sum_i K_i (x) |i>_E, so that Tr_E{V A V^dagger} = N(A). Uses at most
/// dim_in * dim_out environment levels.
Dilation stinespring(const Channel& n);

/// Minimal Kraus family from the eigendecomposition of the Choi matrix.
Channel canonical_kraus(const Channel& n);

/// X^a Z^b for a, b in [0, d), ordered by a + d * b; Z = diag(omega^k),
/// omega = exp(2 pi i / d), X|k> = |k+1 mod d>.
std::vector<Matrix> heisenberg_weyl(std::size_t d);

Channel identity_channel(std::size_t d);
Channel unitary_channel(const Matrix& u);
/// Traces out the listed subsystems of a system with the given dims.
Channel partial_trace_channel(const Dims& dims, std::span<const std::size_t> traced_out);
Channel partial_trace_channel(const Dims& dims, std::initializer_list<std::size_t> traced_out);
/// (1 - p) A + p Tr{A} I / d, built from the Heisenberg-Weyl twirl.
Channel depolarizing_channel(std::size_t d, double p = 1.0);
/// Classical channel from a column-stochastic matrix T(y, x) = P(y | x);
/// Kraus operators sqrt(T(y, x)) |y><x|.
Channel stochastic_channel(const Eigen::MatrixXd& transition);

Matrix random_unitary(std::size_t d, Rng& rng);
/// rows x cols matrix with orthonormal columns, Haar distributed.
Matrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng);
/// Channel from a Haar-random Stinespring isometry.
Channel random_channel(std::size_t dim_in, std::size_t dim_out, std::size_t n_kraus, Rng& rng);
/// random_channel, redrawn until it is strict.
Channel random_strict_channel(std::size_t dim_in, std::size_t dim_out, std::size_t n_kraus,
                              Rng& rng);

}  // namespace qsuff
