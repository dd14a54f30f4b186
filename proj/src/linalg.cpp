#include "qsuff/linalg.hpp"

#include "qsuff/error.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace qsuff {

namespace {

double max_abs_entry(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

void require_square(const Matrix& m, const char* where) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::NonSquare, std::string(where) + ": matrix is " +
                                          std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  }
}

// Splits every full index into (selected, rest) indices, where "selected"
// composes the digits of `selected` subsystems in the given order.
struct IndexSplit {
  std::vector<std::size_t> selected;
  std::vector<std::size_t> rest;
};

IndexSplit split_indices(const Dims& dims, std::span<const std::size_t> selected) {
  const std::size_t n = dims.size();
  std::vector<bool> is_selected(n, false);
  for (std::size_t s : selected) {
    if (s >= n) {
      throw Error(ErrorKind::DimensionMismatch,
                  "subsystem index " + std::to_string(s) + " out of range");
    }
    if (is_selected[s]) {
      throw Error(ErrorKind::DimensionMismatch,
                  "subsystem index " + std::to_string(s) + " listed twice");
    }
    is_selected[s] = true;
  }

  const std::size_t total = product(dims);
  IndexSplit out;
  out.selected.resize(total);
  out.rest.resize(total);
  std::vector<std::size_t> digits(n);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t r = i;
    for (std::size_t s = n; s-- > 0;) {
      digits[s] = r % dims[s];
      r /= dims[s];
    }
    std::size_t sel = 0;
    for (std::size_t s : selected) sel = sel * dims[s] + digits[s];
    std::size_t rest = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (!is_selected[s]) rest = rest * dims[s] + digits[s];
    }
    out.selected[i] = sel;
    out.rest[i] = rest;
  }
  return out;
}

}  // namespace

SupportConvention::SupportConvention(double relative_cutoff) : cutoff_(relative_cutoff) {
  if (!(relative_cutoff >= 0.0 && relative_cutoff < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "relative_cutoff must lie in [0, 1)");
  }
}

double SpectralDecomposition::max_abs_eigenvalue() const {
  return eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff();
}

double SpectralDecomposition::zero_threshold(const SupportConvention& conv) const {
  return conv.relative_cutoff() * max_abs_eigenvalue();
}

Matrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<cplx>().asDiagonal() * eigenvectors.adjoint();
}

Matrix identity(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return Matrix::Identity(n, n);
}

Matrix hermitian_part(const Matrix& m) {
  require_square(m, "hermitian_part");
  return (m + m.adjoint()) / 2.0;
}

double hermiticity_residual(const Matrix& m) {
  require_square(m, "hermiticity_residual");
  return max_abs_entry(m - m.adjoint());
}

SpectralDecomposition hermitian_eig(const Matrix& m, double tol) {
  require_square(m, "hermitian_eig");
  const double residual = hermiticity_residual(m);
  if (residual > tol * max_abs_entry(m)) {
    throw Error(ErrorKind::NonHermitian,
                "anti-Hermitian residual " + std::to_string(residual));
  }
  SpectralDecomposition dec;
  dec.hermiticity_residual = residual;
  if (m.rows() == 0) return dec;

  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(m));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::DomainError, "eigensolver did not converge");
  }
  // Eigen returns ascending order.
  dec.eigenvalues = solver.eigenvalues().reverse();
  dec.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return dec;
}

Matrix matrix_function(const SpectralDecomposition& dec, const ScalarFunction& f,
                       const SupportConvention& conv) {
  const Eigen::Index n = dec.eigenvalues.size();
  const double threshold = dec.zero_threshold(conv);
  RealVector values = RealVector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = dec.eigenvalues(i);
    if (std::abs(lambda) <= threshold) continue;
    const double v = f(lambda);
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::DomainError,
                  "function undefined at eigenvalue " + std::to_string(lambda));
    }
    values(i) = v;
  }
  Matrix out = dec.eigenvectors * values.cast<cplx>().asDiagonal() * dec.eigenvectors.adjoint();
  return hermitian_part(out);
}

Matrix matrix_function(const Matrix& m, const ScalarFunction& f, const SupportConvention& conv) {
  return matrix_function(hermitian_eig(m), f, conv);
}

Matrix matrix_function_all(const SpectralDecomposition& dec, const ScalarFunction& f) {
  const Eigen::Index n = dec.eigenvalues.size();
  RealVector values(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    values(i) = f(dec.eigenvalues(i));
    if (!std::isfinite(values(i))) {
      throw Error(ErrorKind::DomainError,
                  "function undefined at eigenvalue " + std::to_string(dec.eigenvalues(i)));
    }
  }
  Matrix out = dec.eigenvectors * values.cast<cplx>().asDiagonal() * dec.eigenvectors.adjoint();
  return hermitian_part(out);
}

Matrix matrix_power(const SpectralDecomposition& dec, double p, const SupportConvention& conv) {
  return matrix_function(dec, [p](double x) { return std::pow(x, p); }, conv);
}

Matrix matrix_power(const Matrix& m, double p, const SupportConvention& conv) {
  return matrix_power(hermitian_eig(m), p, conv);
}

Matrix matrix_log(const Matrix& m, const SupportConvention& conv) {
  return matrix_function(m, [](double x) { return std::log(x); }, conv);
}

Matrix matrix_log2(const Matrix& m, const SupportConvention& conv) {
  return matrix_function(m, [](double x) { return std::log2(x); }, conv);
}

Matrix matrix_exp(const Matrix& m) {
  return matrix_function_all(hermitian_eig(m), [](double x) { return std::exp(x); });
}

Matrix kernel_projector(const SpectralDecomposition& dec, const SupportConvention& conv) {
  const double threshold = dec.zero_threshold(conv);
  const Eigen::Index n = dec.eigenvalues.size();
  Matrix p = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(dec.eigenvalues(i)) <= threshold) {
      p += dec.eigenvectors.col(i) * dec.eigenvectors.col(i).adjoint();
    }
  }
  return p;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

std::size_t product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

Matrix partial_trace(const Matrix& m, const Dims& dims, std::span<const std::size_t> traced_out) {
  require_square(m, "partial_trace");
  const std::size_t total = product(dims);
  if (static_cast<std::size_t>(m.rows()) != total) {
    throw Error(ErrorKind::DimensionMismatch,
                "partial_trace: dims multiply to " + std::to_string(total) +
                    " but matrix has dimension " + std::to_string(m.rows()));
  }
  // Index split with the traced systems as "selected" and the kept ones as rest.
  const IndexSplit split = split_indices(dims, traced_out);
  std::size_t kept = total;
  for (std::size_t s : traced_out) kept /= dims[s];

  const auto k = static_cast<Eigen::Index>(kept);
  Matrix out = Matrix::Zero(k, k);
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      if (split.selected[i] != split.selected[j]) continue;
      out(static_cast<Eigen::Index>(split.rest[i]), static_cast<Eigen::Index>(split.rest[j])) +=
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& m, const Dims& dims,
                     std::initializer_list<std::size_t> traced_out) {
  return partial_trace(m, dims, std::span<const std::size_t>(traced_out.begin(), traced_out.size()));
}

Matrix embed(const Matrix& x, const Dims& dims, std::span<const std::size_t> targets) {
  require_square(x, "embed");
  std::size_t target_dim = 1;
  for (std::size_t s : targets) {
    if (s >= dims.size()) {
      throw Error(ErrorKind::DimensionMismatch, "embed: subsystem index out of range");
    }
    target_dim *= dims[s];
  }
  if (static_cast<std::size_t>(x.rows()) != target_dim) {
    throw Error(ErrorKind::DimensionMismatch,
                "embed: operator dimension " + std::to_string(x.rows()) +
                    " does not match target subsystems (" + std::to_string(target_dim) + ")");
  }
  const IndexSplit split = split_indices(dims, targets);
  const std::size_t total = product(dims);
  const auto n = static_cast<Eigen::Index>(total);
  Matrix out = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      if (split.rest[i] != split.rest[j]) continue;
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          x(static_cast<Eigen::Index>(split.selected[i]),
            static_cast<Eigen::Index>(split.selected[j]));
    }
  }
  return out;
}

Matrix embed(const Matrix& x, const Dims& dims, std::initializer_list<std::size_t> targets) {
  return embed(x, dims, std::span<const std::size_t>(targets.begin(), targets.size()));
}

Matrix direct_sum(std::span<const Matrix> blocks) {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  for (const Matrix& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out = Matrix::Zero(rows, cols);
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  for (const Matrix& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

RealVector singular_values(const Matrix& x) {
  if (x.size() == 0) return RealVector();
  Eigen::JacobiSVD<Matrix> svd(x);
  return svd.singularValues();
}

double alpha_norm(const Matrix& x, double alpha) {
  if (!(alpha > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "alpha_norm: alpha must be positive");
  }
  const RealVector s = singular_values(x);
  if (s.size() == 0) return 0.0;
  if (std::isinf(alpha)) return s.maxCoeff();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > 0.0) sum += std::pow(s(i), alpha);
  }
  return std::pow(sum, 1.0 / alpha);
}

double trace_norm(const Matrix& x) {
  return alpha_norm(x, 1.0);
}

double operator_norm(const Matrix& x) {
  return alpha_norm(x, std::numeric_limits<double>::infinity());
}

cplx hs_inner(const Matrix& c, const Matrix& d) {
  if (c.rows() != d.rows() || c.cols() != d.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "hs_inner: operand shapes differ");
  }
  return (c.adjoint() * d).trace();
}

double real_trace(const Matrix& m) {
  return m.trace().real();
}

}  // namespace qsuff
