// measures.hpp - conditional mutual information and relative-entropy
// differences: von Neumann, Petz-Renyi, sandwiched and min/max flavors.
// All values are in bits.

#pragma once

#include "qsuff/divergence.hpp"
#include "qsuff/quantum.hpp"

namespace qsuff {

/// rho_ABC with subsystem order (A, B, C) and its marginals, computed once.
class TripartiteState {
 public:
  /// Throws DimensionMismatch unless rho has exactly three subsystems.
  explicit TripartiteState(DensityOperator rho);

  const DensityOperator& rho() const noexcept { return rho_; }
  const Dims& dims() const noexcept { return rho_.dims(); }
  std::size_t d_a() const noexcept { return rho_.dims()[0]; }
  std::size_t d_b() const noexcept { return rho_.dims()[1]; }
  std::size_t d_c() const noexcept { return rho_.dims()[2]; }

  /// Marginals, on (A, C), (B, C) and C.
  const Matrix& rho_ac() const noexcept { return rho_ac_; }
  const Matrix& rho_bc() const noexcept { return rho_bc_; }
  const Matrix& rho_c() const noexcept { return rho_c_; }

  /// Operators on AC, BC or C tensored with identities on ABC.
  Matrix lift_ac(const Matrix& x) const;
  Matrix lift_bc(const Matrix& x) const;
  Matrix lift_c(const Matrix& x) const;

 private:
  DensityOperator rho_;
  Matrix rho_ac_;
  Matrix rho_bc_;
  Matrix rho_c_;
};

/// (rho, sigma, N) with N.dim_in equal to the dimension of rho and sigma.
class ChannelTriple {
 public:
  ChannelTriple(DensityOperator rho, PositiveOperator sigma, Channel channel);

  const DensityOperator& rho() const noexcept { return rho_; }
  const PositiveOperator& sigma() const noexcept { return sigma_; }
  const Channel& channel() const noexcept { return channel_; }
  const Matrix& n_rho() const noexcept { return n_rho_; }
  const Matrix& n_sigma() const noexcept { return n_sigma_; }

 private:
  DensityOperator rho_;
  PositiveOperator sigma_;
  Channel channel_;
  Matrix n_rho_;
  Matrix n_sigma_;
};

enum class Extremum { min, max };

double von_neumann_entropy(const Matrix& rho);

double von_neumann_cmi(const TripartiteState& s);

/// 1/(alpha-1) log2 Tr{rho_ABC^alpha X}, X the bracket of cmi_petz_bracket.
/// Throws RankDeficient for alpha > 1 when rho_ABC is not positive definite.
double renyi_cmi(const TripartiteState& s, const AlphaParameter& a);

/// 2 alpha/(alpha-1) log2 ||rho_ABC^1/2 rho_AC^s rho_C^-s rho_BC^s||_{2 alpha},
/// s = (1-alpha)/(2 alpha).
double sandwiched_cmi(const TripartiteState& s, const AlphaParameter& a);

/// D(rho||sigma) - D(N(rho)||N(sigma)). Throws InfiniteTerm when
/// D(rho||sigma) is infinite.
double rel_ent_diff(const ChannelTriple& t);

/// Throws RankDeficient for alpha > 1 unless rho, sigma, N(rho), N(sigma) are
/// all positive definite.
double delta_alpha(const ChannelTriple& t, const AlphaParameter& a);
double delta_tilde_alpha(const ChannelTriple& t, const AlphaParameter& a);

/// I_max = D_max(rho_ABC || R(rho_BC)) and I_min = D_min(rho_ABC || R(rho_BC))
/// with R the Petz map of markov_recovered. Throws RankDeficient unless
/// rho_ABC is positive definite.
double minmax_cmi(const TripartiteState& s, Extremum kind);

/// D_max or D_min between rho and R_{sigma,N}(N(rho)). Throws RankDeficient
/// unless rho and sigma are positive definite, NotStrict unless N is strict.
double minmax_delta(const ChannelTriple& t, Extremum kind);

/// rho_AC^1/2 rho_C^-1/2 rho_BC rho_C^-1/2 rho_AC^1/2 on ABC.
Matrix markov_recovered(const TripartiteState& s);

/// (rho_ABC, rho_AC x I_B, Tr_A).
ChannelTriple reduction_triple(const TripartiteState& s);

/// rho_AC^((1-a)/2) rho_C^((a-1)/2) rho_BC^(1-a) rho_C^((a-1)/2) rho_AC^((1-a)/2).
Matrix cmi_petz_bracket(const TripartiteState& s, double alpha);
/// rho_AC^s rho_C^-s rho_BC^2s rho_C^-s rho_AC^s, s = (1-a)/(2a).
Matrix cmi_sandwiched_bracket(const TripartiteState& s, double alpha);

/// sigma^((1-a)/2) N^dagger(N(sigma)^((a-1)/2) N(rho)^(1-a) N(sigma)^((a-1)/2)) sigma^((1-a)/2).
Matrix petz_bracket(const ChannelTriple& t, double alpha);
/// sigma^s N^dagger(N(sigma)^-s N(rho)^2s N(sigma)^-s) sigma^s, s = (1-a)/(2a).
Matrix sandwiched_bracket(const ChannelTriple& t, double alpha);

/// petz_bracket^(1/(1-a)); equals rho exactly when Delta_alpha vanishes.
Matrix petz_fixed_point(const ChannelTriple& t, double alpha);
/// sandwiched_bracket^(a/(1-a)); equals rho exactly when the sandwiched
/// difference vanishes.
Matrix sandwiched_fixed_point(const ChannelTriple& t, double alpha);
/// [N(sigma)^((a-1)/2) N(sigma^((1-a)/2) rho^a sigma^((1-a)/2)) N(sigma)^((a-1)/2)]^(1/a);
/// equals N(rho) exactly when Delta_alpha vanishes (alpha in (1,2)).
Matrix output_fixed_point(const ChannelTriple& t, double alpha);

/// lambda_min > kStateTol.
bool is_positive_definite(const Matrix& m);

}  // namespace qsuff
