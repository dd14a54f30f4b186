#include "qsuff/measures.hpp"

#include "qsuff/error.hpp"

#include <cmath>
#include <limits>

namespace qsuff {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_pd_state(const TripartiteState& s, double alpha, const char* where) {
  if (alpha > 1.0 && !s.rho().positive_definite()) {
    throw Error(ErrorKind::RankDeficient,
                std::string(where) + ": alpha > 1 needs a positive definite state");
  }
}

void require_pd_triple(const ChannelTriple& t, double alpha, const char* where) {
  if (alpha <= 1.0) return;
  if (!t.rho().positive_definite() || !t.sigma().positive_definite() ||
      !is_positive_definite(t.n_rho()) || !is_positive_definite(t.n_sigma())) {
    throw Error(ErrorKind::RankDeficient,
                std::string(where) +
                    ": alpha > 1 needs rho, sigma, N(rho), N(sigma) positive definite");
  }
}

}  // namespace

TripartiteState::TripartiteState(DensityOperator rho) : rho_(std::move(rho)) {
  if (rho_.dims().size() != 3) {
    throw Error(ErrorKind::DimensionMismatch, "tripartite state needs dims (d_A, d_B, d_C)");
  }
  const Matrix& m = rho_.matrix();
  rho_ac_ = hermitian_part(partial_trace(m, dims(), {1}));
  rho_bc_ = hermitian_part(partial_trace(m, dims(), {0}));
  rho_c_ = hermitian_part(partial_trace(m, dims(), {0, 1}));
}

Matrix TripartiteState::lift_ac(const Matrix& x) const { return embed(x, dims(), {0, 2}); }
Matrix TripartiteState::lift_bc(const Matrix& x) const { return embed(x, dims(), {1, 2}); }
Matrix TripartiteState::lift_c(const Matrix& x) const { return embed(x, dims(), {2}); }

ChannelTriple::ChannelTriple(DensityOperator rho, PositiveOperator sigma, Channel channel)
    : rho_(std::move(rho)), sigma_(std::move(sigma)), channel_(std::move(channel)) {
  if (rho_.dim() != sigma_.dim() || rho_.dim() != channel_.dim_in()) {
    throw Error(ErrorKind::DimensionMismatch,
                "channel triple: rho, sigma and the channel input must share a dimension");
  }
  n_rho_ = hermitian_part(apply_channel(channel_, rho_.matrix()));
  n_sigma_ = hermitian_part(apply_channel(channel_, sigma_.matrix()));
}

bool is_positive_definite(const Matrix& m) {
  const SpectralDecomposition dec = hermitian_eig(m);
  return dec.eigenvalues(dec.eigenvalues.size() - 1) > kStateTol;
}

double von_neumann_entropy(const Matrix& rho) {
  const SpectralDecomposition dec = hermitian_eig(rho);
  const double threshold = dec.zero_threshold(SupportConvention{});
  double h = 0.0;
  for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i) {
    const double l = dec.eigenvalues(i);
    if (l > threshold) h -= l * std::log2(l);
  }
  return h;
}

double von_neumann_cmi(const TripartiteState& s) {
  return von_neumann_entropy(s.rho_ac()) + von_neumann_entropy(s.rho_bc()) -
         von_neumann_entropy(s.rho_c()) - von_neumann_entropy(s.rho().matrix());
}

Matrix cmi_petz_bracket(const TripartiteState& s, double alpha) {
  const Matrix ac = s.lift_ac(matrix_power(s.rho_ac(), (1.0 - alpha) / 2.0));
  const Matrix c = s.lift_c(matrix_power(s.rho_c(), (alpha - 1.0) / 2.0));
  const Matrix bc = s.lift_bc(matrix_power(s.rho_bc(), 1.0 - alpha));
  return hermitian_part(ac * c * bc * c * ac);
}

Matrix cmi_sandwiched_bracket(const TripartiteState& s, double alpha) {
  const double e = (1.0 - alpha) / (2.0 * alpha);
  const Matrix ac = s.lift_ac(matrix_power(s.rho_ac(), e));
  const Matrix c = s.lift_c(matrix_power(s.rho_c(), -e));
  const Matrix bc = s.lift_bc(matrix_power(s.rho_bc(), 2.0 * e));
  return hermitian_part(ac * c * bc * c * ac);
}

double renyi_cmi(const TripartiteState& s, const AlphaParameter& a) {
  const double alpha = a.value();
  require_pd_state(s, alpha, "renyi_cmi");
  const double q =
      (matrix_power(s.rho().matrix(), alpha) * cmi_petz_bracket(s, alpha)).trace().real();
  if (q <= 0.0) return kInf;
  return std::log2(q) / (alpha - 1.0);
}

double sandwiched_cmi(const TripartiteState& s, const AlphaParameter& a) {
  const double alpha = a.value();
  require_pd_state(s, alpha, "sandwiched_cmi");
  const double e = (1.0 - alpha) / (2.0 * alpha);
  const Matrix m = matrix_power(s.rho().matrix(), 0.5) *
                   s.lift_ac(matrix_power(s.rho_ac(), e)) *
                   s.lift_c(matrix_power(s.rho_c(), -e)) *
                   s.lift_bc(matrix_power(s.rho_bc(), e));
  const double norm = alpha_norm(m, 2.0 * alpha);
  if (norm <= 0.0) return kInf;
  return 2.0 * alpha / (alpha - 1.0) * std::log2(norm);
}

double rel_ent_diff(const ChannelTriple& t) {
  const double before = rel_entropy(t.rho().matrix(), t.sigma().matrix());
  if (!std::isfinite(before)) {
    throw Error(ErrorKind::InfiniteTerm, "rel_ent_diff: D(rho||sigma) is infinite");
  }
  return before - rel_entropy(t.n_rho(), t.n_sigma());
}

Matrix petz_bracket(const ChannelTriple& t, double alpha) {
  const Matrix out_s = matrix_power(t.n_sigma(), (alpha - 1.0) / 2.0);
  const Matrix inner = out_s * matrix_power(t.n_rho(), 1.0 - alpha) * out_s;
  const Matrix in_s = matrix_power(t.sigma().matrix(), (1.0 - alpha) / 2.0);
  return hermitian_part(in_s * adjoint_apply(t.channel(), hermitian_part(inner)) * in_s);
}

Matrix sandwiched_bracket(const ChannelTriple& t, double alpha) {
  const double e = (1.0 - alpha) / (2.0 * alpha);
  const Matrix out_s = matrix_power(t.n_sigma(), -e);
  const Matrix inner = out_s * matrix_power(t.n_rho(), 2.0 * e) * out_s;
  const Matrix in_s = matrix_power(t.sigma().matrix(), e);
  return hermitian_part(in_s * adjoint_apply(t.channel(), hermitian_part(inner)) * in_s);
}

double delta_alpha(const ChannelTriple& t, const AlphaParameter& a) {
  const double alpha = a.value();
  require_pd_triple(t, alpha, "delta_alpha");
  const double q = (matrix_power(t.rho().matrix(), alpha) * petz_bracket(t, alpha)).trace().real();
  if (q <= 0.0) return kInf;
  return std::log2(q) / (alpha - 1.0);
}

double delta_tilde_alpha(const ChannelTriple& t, const AlphaParameter& a) {
  const double alpha = a.value();
  require_pd_triple(t, alpha, "delta_tilde_alpha");
  const Matrix root = matrix_power(t.rho().matrix(), 0.5);
  const double norm = alpha_norm(hermitian_part(root * sandwiched_bracket(t, alpha) * root), alpha);
  if (norm <= 0.0) return kInf;
  return alpha / (alpha - 1.0) * std::log2(norm);
}

Matrix petz_fixed_point(const ChannelTriple& t, double alpha) {
  return matrix_power(petz_bracket(t, alpha), 1.0 / (1.0 - alpha));
}

Matrix sandwiched_fixed_point(const ChannelTriple& t, double alpha) {
  return matrix_power(sandwiched_bracket(t, alpha), alpha / (1.0 - alpha));
}

Matrix output_fixed_point(const ChannelTriple& t, double alpha) {
  const Matrix in_s = matrix_power(t.sigma().matrix(), (1.0 - alpha) / 2.0);
  const Matrix inner = in_s * matrix_power(t.rho().matrix(), alpha) * in_s;
  const Matrix out_s = matrix_power(t.n_sigma(), (alpha - 1.0) / 2.0);
  const Matrix m = out_s * apply_channel(t.channel(), hermitian_part(inner)) * out_s;
  return matrix_power(hermitian_part(m), 1.0 / alpha);
}

Matrix markov_recovered(const TripartiteState& s) {
  const Matrix ac = s.lift_ac(matrix_power(s.rho_ac(), 0.5));
  const Matrix c = s.lift_c(matrix_power(s.rho_c(), -0.5));
  const Matrix bc = s.lift_bc(s.rho_bc());
  return hermitian_part(ac * c * bc * c * ac);
}

double minmax_cmi(const TripartiteState& s, Extremum kind) {
  if (!s.rho().positive_definite()) {
    throw Error(ErrorKind::RankDeficient, "minmax_cmi: state is not positive definite");
  }
  const Matrix recovered = markov_recovered(s);
  return kind == Extremum::max ? d_max(s.rho().matrix(), recovered)
                               : d_min(s.rho().matrix(), recovered);
}

double minmax_delta(const ChannelTriple& t, Extremum kind) {
  if (!t.rho().positive_definite() || !t.sigma().positive_definite()) {
    throw Error(ErrorKind::RankDeficient, "minmax_delta: rho and sigma must be positive definite");
  }
  if (!is_strict_cptp(t.channel())) {
    throw Error(ErrorKind::NotStrict, "minmax_delta: channel is not strict");
  }
  const Channel recovery = petz_recovery(t.sigma(), t.channel());
  const Matrix recovered = hermitian_part(apply_channel(recovery, t.n_rho()));
  return kind == Extremum::max ? d_max(t.rho().matrix(), recovered)
                               : d_min(t.rho().matrix(), recovered);
}

ChannelTriple reduction_triple(const TripartiteState& s) {
  const Matrix sigma = s.lift_ac(s.rho_ac());
  return ChannelTriple(s.rho(), validate_positive(sigma, s.dims()),
                       partial_trace_channel(s.dims(), {0}));
}

}  // namespace qsuff
