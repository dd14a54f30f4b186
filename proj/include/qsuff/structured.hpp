// structured.hpp - direct-sum constructors for short Markov chains A-C-B and
// for triples (rho, sigma, N) where N is sufficient, plus Petz-based
// certifiers.

#pragma once

#include "qsuff/measures.hpp"

#include <vector>

namespace qsuff {

struct MarkovBlock {
  double weight = 0.0;
  Matrix rho_a_cl;  // state on A (x) C_L, dims (d_A, d_CL)
  Matrix rho_cr_b;  // state on C_R (x) B, dims (d_CR, d_B)
  std::size_t d_cl = 1;
  std::size_t d_cr = 1;
};

struct MarkovBlockSpec {
  std::size_t d_a = 1;
  std::size_t d_b = 1;
  std::vector<MarkovBlock> blocks;
};

/// rho_ABC = (+)_j q(j) rho_{A C_Lj} (x) rho_{C_Rj B}, with C = (+)_j C_Lj (x) C_Rj.
/// Block j occupies C indices offset_j + cl * d_CR + cr, blocks in spec order.
/// Throws InconsistentDims for mismatched block shapes or weights that do not
/// sum to 1 within 1e-12.
TripartiteState build_markov_chain(const MarkovBlockSpec& spec);

struct SufficiencyBlock {
  double p = 0.0;      // weight in rho
  double q = 0.0;      // weight in sigma, any positive value
  Matrix rho_l;        // state on L_j
  Matrix sigma_l;      // positive definite on L_j
  Matrix tau_r;        // state on R_j
  Matrix unitary;      // L_j -> L'_j
  std::vector<Matrix> channel_r;  // Kraus operators R_j -> R'_j
};

struct SufficiencyBlockSpec {
  std::vector<SufficiencyBlock> blocks;
};

/// rho = (+) p(j) rho_L (x) tau_R, sigma = (+) q(j) sigma_L (x) tau_R and
/// N = (+) U_j (x) N_j^R, with the Kraus operators of block j zero-padded at the
/// block offsets of input and output.
ChannelTriple build_sufficiency_triple(const SufficiencyBlockSpec& spec);

struct MarkovCheck {
  bool passed = false;
  double distance = 0.0;  // ||R(rho_BC) - rho_ABC||_1
};

MarkovCheck is_markov_petz(const TripartiteState& s, double tol);

struct SufficiencyCheck {
  bool passed = false;
  double rho_distance = 0.0;    // ||R(N(rho)) - rho||_1
  double sigma_distance = 0.0;  // ||R(N(sigma)) - sigma||_1
};

SufficiencyCheck is_sufficient_petz(const ChannelTriple& t, double tol);

struct LogIdentityCheck {
  bool passed = false;
  double residual = 0.0;
};

/// ||N^dagger[log2 N(rho) - log2 N(sigma)] - (log2 rho - log2 sigma)||_inf.
/// Throws RankDeficient unless rho, sigma, N(rho), N(sigma) are positive definite.
LogIdentityCheck log_identity_check(const ChannelTriple& t, double tol);

/// Two blocks; d_CL, d_CR in {1, 2}; every block state has full rank, so the
/// chain is positive definite.
MarkovBlockSpec random_markov_spec(std::size_t d_a, std::size_t d_b, Rng& rng);

/// Two blocks; d_L, d_Rin, d_Rout in {1, 2}; two Kraus operators per block
/// channel, redrawn until strict; q(j) uniform in [0.5, 2].
SufficiencyBlockSpec random_sufficiency_spec(Rng& rng);

}  // namespace qsuff
