// linalg.hpp - dense Hermitian linear algebra: spectral decompositions,
// support-restricted matrix functions, tensor products, partial traces and
// Schatten functionals.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qsuff {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Dims = std::vector<std::size_t>;
using ScalarFunction = std::function<double(double)>;

inline constexpr double kDefaultHermitianTol = 1e-10;

/// Eigenvalues with |lambda| <= relative_cutoff * max|lambda| are treated as
/// zero; functions are applied on the remaining spectrum only.
class SupportConvention {
 public:
  SupportConvention() = default;
  explicit SupportConvention(double relative_cutoff);

  double relative_cutoff() const noexcept { return cutoff_; }

 private:
  double cutoff_ = 1e-12;
};

struct SpectralDecomposition {
  RealVector eigenvalues;  // descending
  Matrix eigenvectors;     // columns, unitary
  double hermiticity_residual = 0.0;

  std::size_t dim() const { return static_cast<std::size_t>(eigenvalues.size()); }
  double max_abs_eigenvalue() const;
  /// Threshold below which an eigenvalue counts as zero under `conv`.
  double zero_threshold(const SupportConvention& conv) const;
  Matrix reconstruct() const;
};

Matrix identity(std::size_t d);

/// (M + M^dagger) / 2.
Matrix hermitian_part(const Matrix& m);

/// Largest entry modulus of M - M^dagger.
double hermiticity_residual(const Matrix& m);

/// Symmetrizes M and decomposes it. Throws NonSquare, or NonHermitian when
/// max|M - M^dagger| exceeds tol * max|M|.
SpectralDecomposition hermitian_eig(const Matrix& m, double tol = kDefaultHermitianTol);

/// sum over retained eigenvalues of f(lambda_i) |i><i|. Throws DomainError
/// if f is not finite on a retained eigenvalue.
Matrix matrix_function(const SpectralDecomposition& dec, const ScalarFunction& f,
                       const SupportConvention& conv = {});
Matrix matrix_function(const Matrix& m, const ScalarFunction& f,
                       const SupportConvention& conv = {});

/// f applied to every eigenvalue, including zeros (used for exp).
Matrix matrix_function_all(const SpectralDecomposition& dec, const ScalarFunction& f);

Matrix matrix_power(const SpectralDecomposition& dec, double p,
                    const SupportConvention& conv = {});
Matrix matrix_power(const Matrix& m, double p, const SupportConvention& conv = {});
Matrix matrix_log(const Matrix& m, const SupportConvention& conv = {});
Matrix matrix_log2(const Matrix& m, const SupportConvention& conv = {});
Matrix matrix_exp(const Matrix& m);

/// Orthogonal projector onto the eigenvectors treated as zero.
Matrix kernel_projector(const SpectralDecomposition& dec, const SupportConvention& conv = {});

Matrix kron(const Matrix& a, const Matrix& b);

std::size_t product(const Dims& dims);

/// Traces out the subsystems listed in `traced_out`; subsystem 0 is the most
/// significant tensor factor (kron ordering).
Matrix partial_trace(const Matrix& m, const Dims& dims,
                     std::span<const std::size_t> traced_out);
Matrix partial_trace(const Matrix& m, const Dims& dims,
                     std::initializer_list<std::size_t> traced_out);

/// Places `x`, an operator on the subsystems `targets` (in the listed order),
/// into the full space, tensored with the identity on every other subsystem.
Matrix embed(const Matrix& x, const Dims& dims, std::span<const std::size_t> targets);
Matrix embed(const Matrix& x, const Dims& dims, std::initializer_list<std::size_t> targets);

/// Block-diagonal direct sum.
Matrix direct_sum(std::span<const Matrix> blocks);

RealVector singular_values(const Matrix& x);

/// [Tr |X|^alpha]^(1/alpha); a quasi-norm for alpha < 1. alpha may be +inf.
double alpha_norm(const Matrix& x, double alpha);
double trace_norm(const Matrix& x);
double operator_norm(const Matrix& x);

/// Tr{C^dagger D}.
cplx hs_inner(const Matrix& c, const Matrix& d);

double real_trace(const Matrix& m);

}  // namespace qsuff
