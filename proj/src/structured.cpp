#include "qsuff/structured.hpp"

#include "qsuff/error.hpp"

#include <cmath>
#include <string>

namespace qsuff {

namespace {

constexpr double kWeightSumTol = 1e-12;

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_square(const Matrix& m, std::size_t d, const std::string& what) {
  if (static_cast<std::size_t>(m.rows()) != d || static_cast<std::size_t>(m.cols()) != d) {
    throw Error(ErrorKind::InconsistentDims,
                what + " should be " + std::to_string(d) + "x" + std::to_string(d));
  }
}

std::vector<double> random_weights(std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.2, 1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = unit(rng);
    total += x;
  }
  for (double& x : w) x /= total;
  return w;
}

}  // namespace

TripartiteState build_markov_chain(const MarkovBlockSpec& spec) {
  if (spec.blocks.empty()) throw Error(ErrorKind::InconsistentDims, "markov spec has no blocks");
  if (spec.d_a == 0 || spec.d_b == 0) {
    throw Error(ErrorKind::InconsistentDims, "markov spec has a zero dimension");
  }
  double weight_sum = 0.0;
  std::size_t d_c = 0;
  for (std::size_t j = 0; j < spec.blocks.size(); ++j) {
    const MarkovBlock& b = spec.blocks[j];
    const std::string name = "markov block " + std::to_string(j);
    if (!(b.weight > 0.0 && b.weight <= 1.0)) {
      throw Error(ErrorKind::InconsistentDims, name + ": weight outside (0, 1]");
    }
    if (b.d_cl == 0 || b.d_cr == 0) throw Error(ErrorKind::InconsistentDims, name + ": zero dim");
    require_square(b.rho_a_cl, spec.d_a * b.d_cl, name + " rho_ACL");
    require_square(b.rho_cr_b, b.d_cr * spec.d_b, name + " rho_CRB");
    validate_density(b.rho_a_cl, {spec.d_a, b.d_cl});
    validate_density(b.rho_cr_b, {b.d_cr, spec.d_b});
    weight_sum += b.weight;
    d_c += b.d_cl * b.d_cr;
  }
  if (std::abs(weight_sum - 1.0) > kWeightSumTol) {
    throw Error(ErrorKind::InconsistentDims, "markov block weights do not sum to 1");
  }

  const std::size_t d_a = spec.d_a;
  const std::size_t d_b = spec.d_b;
  const std::size_t total = d_a * d_b * d_c;
  Matrix rho = Matrix::Zero(idx(total), idx(total));
  const auto full = [&](std::size_t a, std::size_t b, std::size_t c) {
    return idx((a * d_b + b) * d_c + c);
  };
  std::size_t offset = 0;
  for (const MarkovBlock& blk : spec.blocks) {
    const std::size_t dl = blk.d_cl;
    const std::size_t dr = blk.d_cr;
    for (std::size_t a = 0; a < d_a; ++a)
      for (std::size_t cl = 0; cl < dl; ++cl)
        for (std::size_t a2 = 0; a2 < d_a; ++a2)
          for (std::size_t cl2 = 0; cl2 < dl; ++cl2) {
            const cplx left = blk.rho_a_cl(idx(a * dl + cl), idx(a2 * dl + cl2));
            if (left == cplx(0.0)) continue;
            for (std::size_t cr = 0; cr < dr; ++cr)
              for (std::size_t b = 0; b < d_b; ++b)
                for (std::size_t cr2 = 0; cr2 < dr; ++cr2)
                  for (std::size_t b2 = 0; b2 < d_b; ++b2) {
                    const cplx right = blk.rho_cr_b(idx(cr * d_b + b), idx(cr2 * d_b + b2));
                    rho(full(a, b, offset + cl * dr + cr), full(a2, b2, offset + cl2 * dr + cr2)) =
                        blk.weight * left * right;
                  }
          }
    offset += dl * dr;
  }
  return TripartiteState(validate_density(hermitian_part(rho), {d_a, d_b, d_c}));
}

ChannelTriple build_sufficiency_triple(const SufficiencyBlockSpec& spec) {
  if (spec.blocks.empty()) {
    throw Error(ErrorKind::InconsistentDims, "sufficiency spec has no blocks");
  }
  double p_sum = 0.0;
  std::size_t din = 0;
  std::size_t dout = 0;
  std::vector<Matrix> rho_blocks;
  std::vector<Matrix> sigma_blocks;
  for (std::size_t j = 0; j < spec.blocks.size(); ++j) {
    const SufficiencyBlock& b = spec.blocks[j];
    const std::string name = "sufficiency block " + std::to_string(j);
    if (!(b.p > 0.0 && b.p <= 1.0)) throw Error(ErrorKind::InconsistentDims, name + ": p outside (0, 1]");
    if (!(b.q > 0.0) || !std::isfinite(b.q)) {
      throw Error(ErrorKind::InconsistentDims, name + ": q must be positive");
    }
    const auto dl = static_cast<std::size_t>(b.rho_l.rows());
    const auto dr = static_cast<std::size_t>(b.tau_r.rows());
    require_square(b.rho_l, dl, name + " rho_L");
    require_square(b.sigma_l, dl, name + " sigma_L");
    require_square(b.tau_r, dr, name + " tau_R");
    require_square(b.unitary, dl, name + " unitary");
    if ((b.unitary.adjoint() * b.unitary - identity(dl)).cwiseAbs().maxCoeff() > 1e-10) {
      throw Error(ErrorKind::InconsistentDims, name + ": U is not unitary");
    }
    validate_density(b.rho_l);
    validate_density(b.tau_r);
    if (!validate_positive(b.sigma_l).positive_definite()) {
      throw Error(ErrorKind::InconsistentDims, name + ": sigma_L is not positive definite");
    }
    if (b.channel_r.empty() || static_cast<std::size_t>(b.channel_r.front().cols()) != dr) {
      throw Error(ErrorKind::InconsistentDims, name + ": channel input does not match tau_R");
    }
    const Channel nr = Channel::from_kraus(b.channel_r);
    p_sum += b.p;
    din += dl * dr;
    dout += dl * nr.dim_out();
    rho_blocks.push_back(b.p * kron(b.rho_l, b.tau_r));
    sigma_blocks.push_back(b.q * kron(b.sigma_l, b.tau_r));
  }
  if (std::abs(p_sum - 1.0) > kWeightSumTol) {
    throw Error(ErrorKind::InconsistentDims, "sufficiency weights p do not sum to 1");
  }

  std::vector<Matrix> kraus;
  std::size_t in_off = 0;
  std::size_t out_off = 0;
  for (const SufficiencyBlock& b : spec.blocks) {
    const auto dl = static_cast<std::size_t>(b.rho_l.rows());
    const auto dr_in = static_cast<std::size_t>(b.tau_r.rows());
    const auto dr_out = static_cast<std::size_t>(b.channel_r.front().rows());
    for (const Matrix& f : b.channel_r) {
      Matrix k = Matrix::Zero(idx(dout), idx(din));
      k.block(idx(out_off), idx(in_off), idx(dl * dr_out), idx(dl * dr_in)) = kron(b.unitary, f);
      kraus.push_back(std::move(k));
    }
    in_off += dl * dr_in;
    out_off += dl * dr_out;
  }

  DensityOperator rho = validate_density(direct_sum(rho_blocks));
  PositiveOperator sigma = validate_positive(direct_sum(sigma_blocks));
  return ChannelTriple(std::move(rho), std::move(sigma), Channel::from_kraus(std::move(kraus)));
}

MarkovCheck is_markov_petz(const TripartiteState& s, double tol) {
  MarkovCheck out;
  out.distance = trace_norm(markov_recovered(s) - s.rho().matrix());
  out.passed = out.distance <= tol;
  return out;
}

SufficiencyCheck is_sufficient_petz(const ChannelTriple& t, double tol) {
  const Channel recovery = petz_recovery(t.sigma(), t.channel());
  SufficiencyCheck out;
  out.rho_distance = trace_norm(apply_channel(recovery, t.n_rho()) - t.rho().matrix());
  out.sigma_distance = trace_norm(apply_channel(recovery, t.n_sigma()) - t.sigma().matrix());
  out.passed = out.rho_distance <= tol && out.sigma_distance <= tol;
  return out;
}

LogIdentityCheck log_identity_check(const ChannelTriple& t, double tol) {
  if (!t.rho().positive_definite() || !t.sigma().positive_definite() ||
      !is_positive_definite(t.n_rho()) || !is_positive_definite(t.n_sigma())) {
    throw Error(ErrorKind::RankDeficient,
                "log_identity_check: rho, sigma, N(rho), N(sigma) must be positive definite");
  }
  const Matrix out_diff = matrix_log2(t.n_rho()) - matrix_log2(t.n_sigma());
  const Matrix in_diff = matrix_log2(t.rho().matrix()) - matrix_log2(t.sigma().matrix());
  LogIdentityCheck out;
  out.residual = operator_norm(adjoint_apply(t.channel(), out_diff) - in_diff);
  out.passed = out.residual <= tol;
  return out;
}

MarkovBlockSpec random_markov_spec(std::size_t d_a, std::size_t d_b, Rng& rng) {
  std::uniform_int_distribution<std::size_t> small(1, 2);
  MarkovBlockSpec spec;
  spec.d_a = d_a;
  spec.d_b = d_b;
  const std::vector<double> w = random_weights(2, rng);
  for (double weight : w) {
    MarkovBlock b;
    b.weight = weight;
    b.d_cl = small(rng);
    b.d_cr = small(rng);
    b.rho_a_cl = random_density({d_a, b.d_cl}, d_a * b.d_cl, rng).matrix();
    b.rho_cr_b = random_density({b.d_cr, d_b}, b.d_cr * d_b, rng).matrix();
    spec.blocks.push_back(std::move(b));
  }
  // Weights are renormalized so that they sum to 1 as exactly as doubles allow.
  spec.blocks.back().weight = 1.0 - spec.blocks.front().weight;
  return spec;
}

SufficiencyBlockSpec random_sufficiency_spec(Rng& rng) {
  std::uniform_int_distribution<std::size_t> small(1, 2);
  std::uniform_real_distribution<double> q_dist(0.5, 2.0);
  SufficiencyBlockSpec spec;
  const std::vector<double> w = random_weights(2, rng);
  for (double p : w) {
    SufficiencyBlock b;
    const std::size_t dl = small(rng);
    const std::size_t dr_in = small(rng);
    const std::size_t dr_out = small(rng);
    b.p = p;
    b.q = q_dist(rng);
    b.rho_l = random_density({dl}, dl, rng).matrix();
    b.sigma_l = random_density({dl}, dl, rng).matrix();
    b.tau_r = random_density({dr_in}, dr_in, rng).matrix();
    b.unitary = random_unitary(dl, rng);
    b.channel_r = random_strict_channel(dr_in, dr_out, 2, rng).kraus();
    spec.blocks.push_back(std::move(b));
  }
  spec.blocks.back().p = 1.0 - spec.blocks.front().p;
  return spec;
}

}  // namespace qsuff
