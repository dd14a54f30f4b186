#include "qsuff/quantum.hpp"

#include "qsuff/error.hpp"

#include <Eigen/QR>

#include <cmath>
#include <numbers>
#include <string>

namespace qsuff {

namespace {

Matrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  const double scale = 1.0 / std::sqrt(2.0);
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = cplx(re * scale, im * scale);
    }
  }
  return g;
}

Dims effective_dims(const Dims& dims, std::size_t d) {
  return dims.empty() ? Dims{d} : dims;
}

}  // namespace

PositiveOperator validate_positive(const Matrix& m, const Dims& dims, double tol) {
  const SpectralDecomposition dec = hermitian_eig(m, tol);
  const std::size_t d = static_cast<std::size_t>(m.rows());
  Dims full_dims = effective_dims(dims, d);
  if (product(full_dims) != d) {
    throw Error(ErrorKind::DimensionMismatch, "subsystem dims do not multiply to " +
                                                  std::to_string(d));
  }
  if (d == 0) throw Error(ErrorKind::DimensionMismatch, "empty operator");
  const double min_eig = dec.eigenvalues(dec.eigenvalues.size() - 1);
  const double max_eig = dec.eigenvalues(0);
  if (min_eig < -tol) {
    throw Error(ErrorKind::NotPositive, "minimum eigenvalue " + std::to_string(min_eig));
  }
  return PositiveOperator(hermitian_part(m), std::move(full_dims), min_eig, max_eig,
                          min_eig > tol);
}

DensityOperator validate_density(const Matrix& m, const Dims& dims, double tol) {
  PositiveOperator p = validate_positive(m, dims, tol);
  const double tr = p.trace();
  if (std::abs(tr - 1.0) > tol) {
    throw Error(ErrorKind::NotNormalized, "trace " + std::to_string(tr));
  }
  return DensityOperator(std::move(p));
}

DensityOperator random_density(const Dims& dims, std::size_t rank, Rng& rng) {
  const std::size_t d = product(dims);
  if (rank < 1 || rank > d) {
    throw Error(ErrorKind::BadRank, "rank " + std::to_string(rank) + " outside [1, " +
                                        std::to_string(d) + "]");
  }
  const Matrix g = gaussian_matrix(d, rank, rng);
  Matrix rho = g * g.adjoint();
  rho /= real_trace(rho);
  return validate_density(rho, dims);
}

DensityOperator random_density(const Dims& dims, std::size_t rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dims, rank, rng);
}

DensityOperator perturb_positive(const DensityOperator& rho, double eps) {
  if (!(eps >= 0.0 && eps < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "perturb_positive: eps must lie in [0, 1)");
  }
  const std::size_t d = rho.dim();
  Matrix out = (1.0 - eps) * rho.matrix() + (eps / static_cast<double>(d)) * identity(d);
  return validate_density(out, rho.dims());
}

double fidelity(const Matrix& rho, const Matrix& sigma) {
  if (rho.rows() != sigma.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "fidelity: operand dimensions differ");
  }
  const double root_fid = trace_norm(matrix_power(rho, 0.5) * matrix_power(sigma, 0.5));
  return root_fid * root_fid;
}

double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  return fidelity(rho.matrix(), sigma.matrix());
}

// --- Channel ---------------------------------------------------------------

Channel Channel::from_kraus_unchecked(std::vector<Matrix> kraus) {
  if (kraus.empty()) throw Error(ErrorKind::InvalidArgument, "channel needs a Kraus operator");
  const auto dout = static_cast<std::size_t>(kraus.front().rows());
  const auto din = static_cast<std::size_t>(kraus.front().cols());
  for (const Matrix& k : kraus) {
    if (static_cast<std::size_t>(k.rows()) != dout || static_cast<std::size_t>(k.cols()) != din) {
      throw Error(ErrorKind::DimensionMismatch, "Kraus operators have inconsistent shapes");
    }
  }
  return Channel(std::move(kraus), din, dout);
}

Channel Channel::from_kraus(std::vector<Matrix> kraus, double tp_tol) {
  Channel ch = from_kraus_unchecked(std::move(kraus));
  const double err = ch.trace_preservation_error();
  if (err > tp_tol) {
    throw Error(ErrorKind::InvalidArgument,
                "Kraus operators are not trace preserving (error " + std::to_string(err) + ")");
  }
  return ch;
}

double Channel::trace_preservation_error() const {
  Matrix sum = Matrix::Zero(static_cast<Eigen::Index>(dim_in_), static_cast<Eigen::Index>(dim_in_));
  for (const Matrix& k : kraus_) sum += k.adjoint() * k;
  return (sum - identity(dim_in_)).cwiseAbs().maxCoeff();
}

Matrix apply_channel(const Channel& n, const Matrix& a) {
  if (static_cast<std::size_t>(a.rows()) != n.dim_in() ||
      static_cast<std::size_t>(a.cols()) != n.dim_in()) {
    throw Error(ErrorKind::DimensionMismatch, "apply_channel: input is not dim_in x dim_in");
  }
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(n.dim_out()),
                            static_cast<Eigen::Index>(n.dim_out()));
  for (const Matrix& k : n.kraus()) out += k * a * k.adjoint();
  return out;
}

Matrix adjoint_apply(const Channel& n, const Matrix& b) {
  if (static_cast<std::size_t>(b.rows()) != n.dim_out() ||
      static_cast<std::size_t>(b.cols()) != n.dim_out()) {
    throw Error(ErrorKind::DimensionMismatch, "adjoint_apply: input is not dim_out x dim_out");
  }
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(n.dim_in()),
                            static_cast<Eigen::Index>(n.dim_in()));
  for (const Matrix& k : n.kraus()) out += k.adjoint() * b * k;
  return out;
}

Channel compose(const Channel& second, const Channel& first) {
  if (first.dim_out() != second.dim_in()) {
    throw Error(ErrorKind::DimensionMismatch, "compose: dimensions do not chain");
  }
  std::vector<Matrix> kraus;
  kraus.reserve(first.kraus().size() * second.kraus().size());
  for (const Matrix& b : second.kraus()) {
    for (const Matrix& a : first.kraus()) kraus.push_back(b * a);
  }
  return Channel::from_kraus_unchecked(std::move(kraus));
}

bool is_strict_cptp(const Channel& n, double tol) {
  const SpectralDecomposition dec = hermitian_eig(apply_channel(n, identity(n.dim_in())));
  return dec.eigenvalues(dec.eigenvalues.size() - 1) > tol;
}

Channel petz_recovery(const Matrix& sigma, const Channel& n, const SupportConvention& conv) {
  if (static_cast<std::size_t>(sigma.rows()) != n.dim_in()) {
    throw Error(ErrorKind::DimensionMismatch, "petz_recovery: sigma does not match dim_in");
  }
  const SpectralDecomposition sigma_dec = hermitian_eig(sigma);
  if (sigma_dec.max_abs_eigenvalue() == 0.0) {
    throw Error(ErrorKind::DegenerateSigma, "petz_recovery: sigma is zero");
  }
  const Matrix sigma_half = matrix_power(sigma_dec, 0.5, conv);
  const Matrix out_inv_half = matrix_power(apply_channel(n, sigma), -0.5, conv);
  std::vector<Matrix> kraus;
  kraus.reserve(n.kraus().size());
  for (const Matrix& k : n.kraus()) kraus.push_back(sigma_half * k.adjoint() * out_inv_half);
  return Channel::from_kraus_unchecked(std::move(kraus));
}

Channel petz_recovery(const PositiveOperator& sigma, const Channel& n,
                      const SupportConvention& conv) {
  return petz_recovery(sigma.matrix(), n, conv);
}

Channel canonical_kraus(const Channel& n) {
  const std::size_t din = n.dim_in();
  const std::size_t dout = n.dim_out();
  // Choi matrix J = sum_{ij} |i><j| (x) N(|i><j|), input factor first.
  Matrix choi = Matrix::Zero(static_cast<Eigen::Index>(din * dout),
                             static_cast<Eigen::Index>(din * dout));
  for (std::size_t i = 0; i < din; ++i) {
    for (std::size_t j = 0; j < din; ++j) {
      Matrix e = Matrix::Zero(static_cast<Eigen::Index>(din), static_cast<Eigen::Index>(din));
      e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
      choi.block(static_cast<Eigen::Index>(i * dout), static_cast<Eigen::Index>(j * dout),
                 static_cast<Eigen::Index>(dout), static_cast<Eigen::Index>(dout)) =
          apply_channel(n, e);
    }
  }
  const SpectralDecomposition dec = hermitian_eig(choi);
  const double threshold = dec.zero_threshold(SupportConvention{});
  std::vector<Matrix> kraus;
  for (Eigen::Index k = 0; k < dec.eigenvalues.size(); ++k) {
    const double lambda = dec.eigenvalues(k);
    if (lambda <= threshold) continue;
    Matrix op(static_cast<Eigen::Index>(dout), static_cast<Eigen::Index>(din));
    for (std::size_t i = 0; i < din; ++i) {
      for (std::size_t y = 0; y < dout; ++y) {
        op(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(i)) =
            std::sqrt(lambda) * dec.eigenvectors(static_cast<Eigen::Index>(i * dout + y), k);
      }
    }
    kraus.push_back(std::move(op));
  }
  return Channel::from_kraus_unchecked(std::move(kraus));
}

Dilation stinespring(const Channel& n) {
  const std::vector<Matrix>& original = n.kraus();
  const std::vector<Matrix> kraus = original.size() > n.dim_in() * n.dim_out()
                                        ? canonical_kraus(n).kraus()
                                        : original;
  Dilation out;
  out.env_dim = kraus.size();
  const auto r = static_cast<Eigen::Index>(out.env_dim);
  out.isometry = Matrix::Zero(static_cast<Eigen::Index>(n.dim_out()) * r,
                              static_cast<Eigen::Index>(n.dim_in()));
  for (Eigen::Index i = 0; i < r; ++i) {
    Matrix e = Matrix::Zero(r, 1);
    e(i, 0) = 1.0;
    out.isometry += kron(kraus[static_cast<std::size_t>(i)], e);
  }
  return out;
}

std::vector<Matrix> heisenberg_weyl(std::size_t d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "heisenberg_weyl: d must be >= 1");
  const auto n = static_cast<Eigen::Index>(d);
  const cplx omega = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(d));
  Matrix shift = Matrix::Zero(n, n);
  Matrix clock = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    shift((k + 1) % n, k) = 1.0;
    clock(k, k) = std::pow(omega, static_cast<double>(k));
  }
  std::vector<Matrix> out(d * d);
  Matrix shift_pow = identity(d);
  for (std::size_t a = 0; a < d; ++a) {
    Matrix clock_pow = identity(d);
    for (std::size_t b = 0; b < d; ++b) {
      out[a + d * b] = shift_pow * clock_pow;
      clock_pow = clock_pow * clock;
    }
    shift_pow = shift_pow * shift;
  }
  return out;
}

Channel identity_channel(std::size_t d) {
  return Channel::from_kraus({identity(d)});
}

Channel unitary_channel(const Matrix& u) {
  return Channel::from_kraus({u});
}

Channel partial_trace_channel(const Dims& dims, std::span<const std::size_t> traced_out) {
  const std::size_t total = product(dims);
  std::vector<bool> traced(dims.size(), false);
  std::size_t traced_dim = 1;
  for (std::size_t s : traced_out) {
    if (s >= dims.size() || traced[s]) {
      throw Error(ErrorKind::DimensionMismatch, "partial_trace_channel: bad subsystem list");
    }
    traced[s] = true;
    traced_dim *= dims[s];
  }
  const std::size_t kept_dim = total / traced_dim;
  std::vector<Matrix> kraus(traced_dim, Matrix::Zero(static_cast<Eigen::Index>(kept_dim),
                                                     static_cast<Eigen::Index>(total)));
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t r = i;
    for (std::size_t s = dims.size(); s-- > 0;) {
      digits[s] = r % dims[s];
      r /= dims[s];
    }
    std::size_t t = 0;
    for (std::size_t s : traced_out) t = t * dims[s] + digits[s];
    std::size_t k = 0;
    for (std::size_t s = 0; s < dims.size(); ++s) {
      if (!traced[s]) k = k * dims[s] + digits[s];
    }
    kraus[t](static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) = 1.0;
  }
  return Channel::from_kraus(std::move(kraus));
}

Channel partial_trace_channel(const Dims& dims, std::initializer_list<std::size_t> traced_out) {
  return partial_trace_channel(dims,
                               std::span<const std::size_t>(traced_out.begin(), traced_out.size()));
}

Channel depolarizing_channel(std::size_t d, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "depolarizing_channel: p must lie in [0, 1]");
  }
  const std::vector<Matrix> units = heisenberg_weyl(d);
  const double dd = static_cast<double>(d * d);
  std::vector<Matrix> kraus;
  kraus.reserve(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    const double weight = i == 0 ? 1.0 - p + p / dd : p / dd;
    if (weight > 0.0) kraus.push_back(std::sqrt(weight) * units[i]);
  }
  return Channel::from_kraus(std::move(kraus));
}

Channel stochastic_channel(const Eigen::MatrixXd& transition) {
  const Eigen::Index dout = transition.rows();
  const Eigen::Index din = transition.cols();
  std::vector<Matrix> kraus;
  for (Eigen::Index x = 0; x < din; ++x) {
    for (Eigen::Index y = 0; y < dout; ++y) {
      if (transition(y, x) < 0.0) {
        throw Error(ErrorKind::InvalidArgument, "stochastic_channel: negative probability");
      }
      if (transition(y, x) == 0.0) continue;
      Matrix k = Matrix::Zero(dout, din);
      k(y, x) = std::sqrt(transition(y, x));
      kraus.push_back(std::move(k));
    }
  }
  return Channel::from_kraus(std::move(kraus));
}

Matrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  if (cols > rows) throw Error(ErrorKind::InvalidArgument, "random_isometry: cols > rows");
  const Matrix g = gaussian_matrix(rows, cols, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(g.rows(), g.cols());
  const Matrix r = qr.matrixQR();
  // Fixing the phases of diag(R) makes the distribution Haar.
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const cplx rkk = r(k, k);
    if (std::abs(rkk) > 0.0) q.col(k) *= rkk / std::abs(rkk);
  }
  return q;
}

Matrix random_unitary(std::size_t d, Rng& rng) {
  return random_isometry(d, d, rng);
}

Channel random_channel(std::size_t dim_in, std::size_t dim_out, std::size_t n_kraus, Rng& rng) {
  if (n_kraus < 1 || dim_out * n_kraus < dim_in) {
    throw Error(ErrorKind::InvalidArgument,
                "random_channel: need dim_out * n_kraus >= dim_in and n_kraus >= 1");
  }
  const Matrix v = random_isometry(dim_out * n_kraus, dim_in, rng);
  std::vector<Matrix> kraus;
  kraus.reserve(n_kraus);
  for (std::size_t i = 0; i < n_kraus; ++i) {
    kraus.push_back(v.block(static_cast<Eigen::Index>(i * dim_out), 0,
                            static_cast<Eigen::Index>(dim_out),
                            static_cast<Eigen::Index>(dim_in)));
  }
  return Channel::from_kraus(std::move(kraus));
}

Channel random_strict_channel(std::size_t dim_in, std::size_t dim_out, std::size_t n_kraus,
                              Rng& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Channel ch = random_channel(dim_in, dim_out, n_kraus, rng);
    if (is_strict_cptp(ch, 1e-6)) return ch;
  }
  throw Error(ErrorKind::NotStrict, "random_strict_channel: no strict channel drawn");
}

}  // namespace qsuff
