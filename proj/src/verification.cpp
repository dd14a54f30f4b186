#include "qsuff/verification.hpp"

#include "qsuff/classical.hpp"
#include "qsuff/error.hpp"
#include "qsuff/structured.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

namespace qsuff {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double trace_power(const Matrix& m, double p) { return real_trace(matrix_power(m, p)); }

DensityOperator full_rank_state(const Dims& dims, Rng& rng) {
  return random_density(dims, product(dims), rng);
}

DensityOperator product_state(const Dims& dims, Rng& rng) {
  Matrix m = identity(1);
  for (std::size_t d : dims) m = kron(m, random_density({d}, d, rng).matrix());
  return validate_density(m, dims);
}

ChannelTriple random_triple(const SuiteConfig& cfg, Rng& rng) {
  const std::size_t d = cfg.channel_in;
  DensityOperator rho = full_rank_state({d}, rng);
  const DensityOperator sigma_state = full_rank_state({d}, rng);
  const double scale = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
  PositiveOperator sigma = validate_positive(scale * sigma_state.matrix(), {d});
  Channel n = random_strict_channel(d, cfg.channel_out, cfg.channel_kraus, rng);
  return ChannelTriple(std::move(rho), std::move(sigma), std::move(n));
}

std::vector<double> merged_grid(const SuiteConfig& cfg) {
  std::vector<double> g = cfg.petz_grid;
  g.insert(g.end(), cfg.sandwiched_grid.begin(), cfg.sandwiched_grid.end());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  void add(std::string check, std::uint64_t seed, std::optional<double> alpha, double value,
           double bound, Relation rel, double tol) {
    report_.records.push_back(make_record(std::move(check), seed, alpha, value, bound, rel, tol));
  }

  VerificationReport take() { return std::move(report_); }

 private:
  VerificationReport report_;
};

void cmi_trace_checks(Recorder& rec, const TripartiteState& s, const SuiteConfig& cfg,
                      std::uint64_t seed, const std::string& prefix, bool equality) {
  const Relation rel = equality ? Relation::near : Relation::at_most;
  const double tol = equality ? cfg.tol.structural : cfg.tol.inequality;
  const bool pd = s.rho().positive_definite();
  for (double a : cfg.petz_grid) {
    if (a > 1.0 && !pd) continue;
    rec.add(prefix + "cmi-trace-petz", seed, a,
            trace_power(cmi_petz_bracket(s, a), 1.0 / (1.0 - a)), 1.0, rel, tol);
  }
  for (double a : cfg.sandwiched_grid) {
    if (a > 1.0 && !pd) continue;
    rec.add(prefix + "cmi-trace-sandwiched", seed, a,
            trace_power(cmi_sandwiched_bracket(s, a), a / (1.0 - a)), 1.0, rel, tol);
  }
  if (pd) rec.add(prefix + "exp-trace-cmi", seed, std::nullopt, exp_trace_cmi(s), 1.0, rel, tol);
}

void channel_trace_checks(Recorder& rec, const ChannelTriple& t, const SuiteConfig& cfg,
                          std::uint64_t seed, const std::string& prefix, bool equality) {
  const Relation rel = equality ? Relation::near : Relation::at_most;
  const double tol = equality ? cfg.tol.structural : cfg.tol.inequality;
  for (double a : cfg.petz_grid) {
    rec.add(prefix + "channel-trace-petz", seed, a,
            trace_power(petz_bracket(t, a), 1.0 / (1.0 - a)), 1.0, rel, tol);
  }
  for (double a : cfg.sandwiched_grid) {
    rec.add(prefix + "channel-trace-sandwiched", seed, a,
            trace_power(sandwiched_bracket(t, a), a / (1.0 - a)), 1.0, rel, tol);
  }
  rec.add(prefix + "exp-trace-channel", seed, std::nullopt, exp_trace_channel(t), 1.0, rel, tol);
}

}  // namespace

void validate_config(const SuiteConfig& cfg) {
  if (cfg.trials == 0) throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
  const Tolerances& t = cfg.tol;
  if (!(t.structural > 0.0 && t.inequality > 0.0 && t.limit > 0.0 && t.oracle > 0.0 &&
        t.converse > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "tolerances must be positive");
  }
  if (cfg.dims.size() != 3 || product(cfg.dims) == 0) {
    throw Error(ErrorKind::InvalidArgument, "dims must list three positive dimensions");
  }
  for (double a : cfg.petz_grid) (void)AlphaParameter(a);
  for (double a : cfg.sandwiched_grid) (void)AlphaParameter(a);
  if (cfg.channel_in == 0 || cfg.channel_out == 0 ||
      cfg.channel_out * cfg.channel_kraus < cfg.channel_in) {
    throw Error(ErrorKind::InvalidArgument, "channel dimensions cannot form a channel");
  }
}

std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::at_most: return "at_most";
    case Relation::at_least: return "at_least";
    case Relation::near: return "near";
  }
  return "unknown";
}

CheckRecord make_record(std::string check, std::uint64_t seed, std::optional<double> alpha,
                        double value, double bound, Relation relation, double tolerance) {
  CheckRecord r;
  r.check = std::move(check);
  r.seed = seed;
  r.alpha = alpha;
  r.value = value;
  r.bound = bound;
  r.relation = relation;
  r.tolerance = tolerance;
  switch (relation) {
    case Relation::at_most: r.slack = bound - value; break;
    case Relation::at_least: r.slack = value - bound; break;
    case Relation::near: r.slack = -std::abs(value - bound); break;
  }
  if (std::isnan(r.slack)) r.slack = -kInf;
  r.pass = r.slack >= -tolerance;
  return r;
}

double VerificationReport::worst_slack() const {
  double w = kInf;
  for (const CheckRecord& r : records) w = std::min(w, r.slack);
  return w;
}

const CheckRecord* VerificationReport::worst() const {
  const CheckRecord* w = nullptr;
  for (const CheckRecord& r : records) {
    if (w == nullptr || r.slack < w->slack) w = &r;
  }
  return w;
}

bool VerificationReport::all_pass() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

void VerificationReport::append(const VerificationReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

std::vector<CheckSummary> summarize(const VerificationReport& report) {
  std::vector<CheckSummary> out;
  std::map<std::string, std::size_t> index;
  for (const CheckRecord& r : report.records) {
    auto [it, inserted] = index.emplace(r.check, out.size());
    if (inserted) out.push_back({r.check, 0, 0, kInf});
    CheckSummary& s = out[it->second];
    ++s.count;
    if (r.pass) ++s.passed;
    s.worst_slack = std::min(s.worst_slack, r.slack);
  }
  return out;
}

std::string format_table(const VerificationReport& report) {
  const std::vector<CheckSummary> rows = summarize(report);
  std::size_t width = 5;
  for (const CheckSummary& s : rows) width = std::max(width, s.check.size());
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-*s %8s %8s %14s\n", static_cast<int>(width), "check",
                "count", "passed", "worst_slack");
  out += line;
  std::size_t failed = 0;
  for (const CheckSummary& s : rows) {
    std::snprintf(line, sizeof line, "%-*s %8zu %8zu %14.6e\n", static_cast<int>(width),
                  s.check.c_str(), s.count, s.passed, s.worst_slack);
    out += line;
    failed += s.count - s.passed;
  }
  std::snprintf(line, sizeof line, "suite %s: %zu records, %zu failed, worst slack %.6e: %s\n",
                report.suite.c_str(), report.records.size(), failed, report.worst_slack(),
                report.all_pass() ? "PASS" : "FAIL");
  out += line;
  return out;
}

double concavity_functional(const Matrix& a, const Matrix& b, double p) {
  const Matrix inner = hermitian_part(a * matrix_power(b, p) * a.adjoint());
  return trace_power(inner, 1.0 / p);
}

double exp_trace_cmi(const TripartiteState& s) {
  const Matrix l = s.lift_ac(matrix_log(s.rho_ac())) + s.lift_bc(matrix_log(s.rho_bc())) -
                   s.lift_c(matrix_log(s.rho_c()));
  return real_trace(matrix_exp(hermitian_part(l)));
}

double exp_trace_channel(const ChannelTriple& t) {
  const Matrix out = matrix_log(t.n_rho()) - matrix_log(t.n_sigma());
  const Matrix l = matrix_log(t.sigma().matrix()) + adjoint_apply(t.channel(), out);
  return real_trace(matrix_exp(hermitian_part(l)));
}

double lie_trotter_deviation(const TripartiteState& s, double alpha) {
  const Matrix l = s.lift_ac(matrix_log(s.rho_ac())) + s.lift_bc(matrix_log(s.rho_bc())) -
                   s.lift_c(matrix_log(s.rho_c()));
  const Matrix approx = matrix_power(cmi_petz_bracket(s, alpha), 1.0 / (1.0 - alpha));
  return operator_norm(approx - matrix_exp(hermitian_part(l)));
}

VerificationReport trace_inequality_suite(const SuiteConfig& cfg) {
  validate_config(cfg);
  Recorder rec("trace");
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    Rng rng(seed);
    const TripartiteState s(full_rank_state(cfg.dims, rng));
    cmi_trace_checks(rec, s, cfg, seed, "", false);
    const ChannelTriple t = random_triple(cfg, rng);
    channel_trace_checks(rec, t, cfg, seed, "", false);
  }
  // Equality cases: product states, Markov chains and sufficient triples.
  for (std::size_t i = 0; i < cfg.structured_trials; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    Rng rng(seed);
    cmi_trace_checks(rec, TripartiteState(product_state(cfg.dims, rng)), cfg, seed, "product-",
                     true);
    const MarkovBlockSpec mspec = random_markov_spec(cfg.dims[0], cfg.dims[1], rng);
    cmi_trace_checks(rec, build_markov_chain(mspec), cfg, seed, "markov-", true);
    const SufficiencyBlockSpec sspec = random_sufficiency_spec(rng);
    channel_trace_checks(rec, build_sufficiency_triple(sspec), cfg, seed, "sufficient-", true);
  }
  return rec.take();
}

VerificationReport characterization_suite(const SuiteConfig& cfg) {
  validate_config(cfg);
  Recorder rec("characterization");
  const double tol = cfg.tol.structural;
  for (std::size_t i = 0; i < cfg.structured_trials; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    Rng rng(seed);
    const ChannelTriple t = build_sufficiency_triple(random_sufficiency_spec(rng));
    for (double a : cfg.petz_grid) {
      rec.add("sufficient-delta-alpha", seed, a, delta_alpha(t, AlphaParameter(a)), 0.0,
              Relation::near, tol);
    }
    for (double a : cfg.sandwiched_grid) {
      rec.add("sufficient-delta-tilde", seed, a, delta_tilde_alpha(t, AlphaParameter(a)), 0.0,
              Relation::near, tol);
    }
    rec.add("sufficient-delta-min", seed, std::nullopt, minmax_delta(t, Extremum::min), 0.0,
            Relation::near, tol);
    rec.add("sufficient-delta-max", seed, std::nullopt, minmax_delta(t, Extremum::max), 0.0,
            Relation::near, tol);
    const SufficiencyCheck sc = is_sufficient_petz(t, tol);
    rec.add("sufficient-petz-roundtrip", seed, std::nullopt,
            std::max(sc.rho_distance, sc.sigma_distance), 0.0, Relation::near, tol);
    rec.add("sufficient-log-identity", seed, std::nullopt, log_identity_check(t, tol).residual,
            0.0, Relation::near, tol);
    for (double a : cfg.petz_grid) {
      rec.add("fixed-point-petz", seed, a, trace_norm(petz_fixed_point(t, a) - t.rho().matrix()),
              0.0, Relation::near, tol);
      rec.add("fixed-point-output", seed, a, trace_norm(output_fixed_point(t, a) - t.n_rho()),
              0.0, Relation::near, tol);
    }
    for (double a : cfg.sandwiched_grid) {
      rec.add("fixed-point-sandwiched", seed, a,
              trace_norm(sandwiched_fixed_point(t, a) - t.rho().matrix()), 0.0, Relation::near,
              tol);
    }

    // The identity channel is sufficient for every pair.
    const ChannelTriple id(full_rank_state({cfg.channel_in}, rng),
                           validate_positive(full_rank_state({cfg.channel_in}, rng).matrix()),
                           identity_channel(cfg.channel_in));
    for (double a : cfg.petz_grid) {
      rec.add("identity-delta-alpha", seed, a, delta_alpha(id, AlphaParameter(a)), 0.0,
              Relation::near, tol);
    }
    for (double a : cfg.sandwiched_grid) {
      rec.add("identity-delta-tilde", seed, a, delta_tilde_alpha(id, AlphaParameter(a)), 0.0,
              Relation::near, tol);
    }
  }

  for (std::size_t i = 0; i < cfg.converse_trials; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    Rng rng(seed);
    std::optional<ChannelTriple> t;
    double distance = 0.0;
    for (int attempt = 0; attempt < 100 && !t; ++attempt) {
      ChannelTriple cand = random_triple(cfg, rng);
      distance = is_sufficient_petz(cand, 0.0).rho_distance;
      if (distance >= cfg.non_sufficient_distance) t.emplace(std::move(cand));
    }
    rec.add("converse-screen", seed, std::nullopt, distance, cfg.non_sufficient_distance,
            Relation::at_least, 0.0);
    if (!t) continue;
    double best_petz = -kInf;
    double best_fixed = -kInf;
    for (double a : cfg.petz_grid) {
      best_petz = std::max(best_petz, delta_alpha(*t, AlphaParameter(a)));
      best_fixed = std::max(best_fixed, trace_norm(petz_fixed_point(*t, a) - t->rho().matrix()));
    }
    double best_sand = -kInf;
    for (double a : cfg.sandwiched_grid) {
      best_sand = std::max(best_sand, delta_tilde_alpha(*t, AlphaParameter(a)));
    }
    rec.add("converse-delta-alpha", seed, std::nullopt, best_petz, cfg.tol.converse,
            Relation::at_least, 0.0);
    rec.add("converse-delta-tilde", seed, std::nullopt, best_sand, cfg.tol.converse,
            Relation::at_least, 0.0);
    rec.add("converse-fixed-point", seed, std::nullopt, best_fixed, cfg.tol.converse,
            Relation::at_least, 0.0);
  }
  return rec.take();
}

VerificationReport limit_suite(const SuiteConfig& cfg) {
  validate_config(cfg);
  Recorder rec("limits");
  const double tol = cfg.tol.limit;
  const double offsets[] = {-1e-4, 1e-4};
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    Rng rng(seed);
    const TripartiteState s(full_rank_state(cfg.dims, rng));
    const double cmi = von_neumann_cmi(s);
    const ChannelTriple t = random_triple(cfg, rng);
    const double diff = rel_ent_diff(t);
    for (double off : offsets) {
      const AlphaParameter a(1.0 + off);
      rec.add("limit-renyi-cmi", seed, a.value(), renyi_cmi(s, a), cmi, Relation::near, tol);
      rec.add("limit-sandwiched-cmi", seed, a.value(), sandwiched_cmi(s, a), cmi, Relation::near,
              tol);
      rec.add("limit-delta-alpha", seed, a.value(), delta_alpha(t, a), diff, Relation::near, tol);
      rec.add("limit-delta-tilde", seed, a.value(), delta_tilde_alpha(t, a), diff,
              Relation::near, tol);
    }
    for (double sign : {-1.0, 1.0}) {
      double previous = kInf;
      for (int k = 1; k <= 4; ++k) {
        const double a = 1.0 + sign * std::pow(10.0, -k);
        const double dev = lie_trotter_deviation(s, a);
        if (k > 1) {
          rec.add("lie-trotter-monotone", seed, a, dev, previous, Relation::at_most, 0.0);
        }
        previous = dev;
      }
      rec.add("lie-trotter-limit", seed, 1.0 + sign * 1e-4, previous, 0.0, Relation::near, tol);
    }
    const Matrix sigma = t.sigma().matrix() / t.sigma().trace();
    rec.add("sandwiched-half-vs-dmin", seed, 0.5,
            sandwiched_div(t.rho().matrix(), sigma, AlphaParameter(0.5)),
            d_min(t.rho().matrix(), sigma), Relation::near, cfg.tol.inequality);
  }
  return rec.take();
}

VerificationReport inequality_suite(const SuiteConfig& cfg) {
  validate_config(cfg);
  Recorder rec("inequalities");
  const double tol = cfg.tol.inequality;
  std::vector<double> dpi_petz = cfg.petz_grid;
  dpi_petz.push_back(2.0);
  std::vector<double> dpi_sand = cfg.sandwiched_grid;
  dpi_sand.insert(dpi_sand.begin(), 0.5);
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    Rng rng(seed);
    const ChannelTriple t = random_triple(cfg, rng);
    const Matrix& rho = t.rho().matrix();
    const Matrix sigma = t.sigma().matrix() / t.sigma().trace();
    const Matrix n_sigma = apply_channel(t.channel(), sigma);
    for (double a : dpi_petz) {
      const AlphaParameter ap(a);
      rec.add("dpi-petz", seed, a, renyi_div(t.n_rho(), n_sigma, ap), renyi_div(rho, sigma, ap),
              Relation::at_most, tol);
    }
    for (double a : dpi_sand) {
      const AlphaParameter ap(a);
      rec.add("dpi-sandwiched", seed, a, sandwiched_div(t.n_rho(), n_sigma, ap),
              sandwiched_div(rho, sigma, ap), Relation::at_most, tol);
    }
    rec.add("dpi-relative-entropy", seed, std::nullopt, rel_entropy(t.n_rho(), n_sigma),
            rel_entropy(rho, sigma), Relation::at_most, tol);

    // Concavity of B -> Tr{(A B^p A^dagger)^(1/p)} along a random chord.
    const std::size_t d = cfg.channel_in;
    const Matrix a_op = random_isometry(d, d, rng) *
                        full_rank_state({d}, rng).matrix() * static_cast<double>(d);
    const double s1 = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
    const double s2 = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
    const Matrix b1 = s1 * full_rank_state({d}, rng).matrix();
    const Matrix b2 = s2 * full_rank_state({d}, rng).matrix();
    const double lambda = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    for (double p : {0.3, 0.7, -0.3, -0.7}) {
      const double lhs = concavity_functional(a_op, lambda * b1 + (1.0 - lambda) * b2, p);
      const double rhs =
          lambda * concavity_functional(a_op, b1, p) + (1.0 - lambda) * concavity_functional(a_op, b2, p);
      const double scale = std::max(1.0, std::abs(rhs));
      rec.add("concavity", seed, p, lhs / scale, rhs / scale, Relation::at_least, tol);
    }

    for (double a : {1.5, 2.0, 3.0}) {
      const AlphaParameter ap(a);
      rec.add("appendix-bound", seed, a, delta_tilde_alpha(t, ap),
              delta_alpha(t, AlphaParameter(ap.gamma())), Relation::at_least, tol);
    }

    const TripartiteState s(full_rank_state(cfg.dims, rng));
    rec.add("nonneg-cmi", seed, std::nullopt, von_neumann_cmi(s), 0.0, Relation::at_least, tol);
    rec.add("nonneg-rel-ent-diff", seed, std::nullopt, rel_ent_diff(t), 0.0, Relation::at_least,
            tol);
    for (double a : cfg.petz_grid) {
      const AlphaParameter ap(a);
      rec.add("nonneg-renyi-cmi", seed, a, renyi_cmi(s, ap), 0.0, Relation::at_least, tol);
      rec.add("nonneg-delta-alpha", seed, a, delta_alpha(t, ap), 0.0, Relation::at_least, tol);
    }
    for (double a : cfg.sandwiched_grid) {
      const AlphaParameter ap(a);
      rec.add("nonneg-sandwiched-cmi", seed, a, sandwiched_cmi(s, ap), 0.0, Relation::at_least,
              tol);
      rec.add("nonneg-delta-tilde", seed, a, delta_tilde_alpha(t, ap), 0.0, Relation::at_least,
              tol);
    }
    rec.add("nonneg-imax", seed, std::nullopt, minmax_cmi(s, Extremum::max), 0.0,
            Relation::at_least, tol);
    rec.add("nonneg-imin", seed, std::nullopt, minmax_cmi(s, Extremum::min), 0.0,
            Relation::at_least, tol);
    rec.add("nonneg-delta-max", seed, std::nullopt, minmax_delta(t, Extremum::max), 0.0,
            Relation::at_least, tol);
    rec.add("nonneg-delta-min", seed, std::nullopt, minmax_delta(t, Extremum::min), 0.0,
            Relation::at_least, tol);
  }
  return rec.take();
}

VerificationReport classical_suite(const SuiteConfig& cfg) {
  validate_config(cfg);
  Recorder rec("classical");
  const double tol = cfg.tol.oracle;
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  const auto draw = [&](std::size_t n, Rng& rng) {
    classical::Vec v(n);
    double total = 0.0;
    for (double& x : v) total += (x = weight(rng));
    for (double& x : v) x /= total;
    return v;
  };
  const auto diag = [](const classical::Vec& v) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
    for (std::size_t k = 0; k < v.size(); ++k) m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = v[k];
    return m;
  };
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    Rng rng(seed);
    classical::Joint3 j{cfg.dims[0], cfg.dims[1], cfg.dims[2], draw(product(cfg.dims), rng)};
    const TripartiteState s(validate_density(diag(j.p), cfg.dims));
    rec.add("classical-cmi", seed, std::nullopt, von_neumann_cmi(s), classical::cmi(j),
            Relation::near, tol);
    for (double a : cfg.petz_grid) {
      rec.add("classical-renyi-cmi", seed, a, renyi_cmi(s, AlphaParameter(a)),
              classical::renyi_cmi(j, a), Relation::near, tol);
    }
    for (double a : cfg.sandwiched_grid) {
      rec.add("classical-sandwiched-cmi", seed, a, sandwiched_cmi(s, AlphaParameter(a)),
              classical::sandwiched_cmi(j, a), Relation::near, tol);
    }
    rec.add("classical-imax", seed, std::nullopt, minmax_cmi(s, Extremum::max), classical::i_max(j),
            Relation::near, tol);
    rec.add("classical-imin", seed, std::nullopt, minmax_cmi(s, Extremum::min), classical::i_min(j),
            Relation::near, tol);

    const std::size_t din = cfg.channel_in;
    const std::size_t dout = cfg.channel_out;
    const classical::Vec p = draw(din, rng);
    classical::Vec q = draw(din, rng);
    const double scale = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
    for (double& x : q) x *= scale;
    classical::Transition tr(dout, classical::Vec(din));
    Eigen::MatrixXd tm(static_cast<Eigen::Index>(dout), static_cast<Eigen::Index>(din));
    for (std::size_t x = 0; x < din; ++x) {
      const classical::Vec col = draw(dout, rng);
      for (std::size_t y = 0; y < dout; ++y) {
        tr[y][x] = col[y];
        tm(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = col[y];
      }
    }
    const ChannelTriple t(validate_density(diag(p)), validate_positive(diag(q)),
                          stochastic_channel(tm));
    classical::Vec qn = q;
    for (double& x : qn) x /= scale;
    const Matrix sigma_n = diag(qn);
    rec.add("classical-rel-entropy", seed, std::nullopt, rel_entropy(t.rho().matrix(), sigma_n),
            classical::kl(p, qn), Relation::near, tol);
    rec.add("classical-dmin", seed, std::nullopt, d_min(t.rho().matrix(), sigma_n),
            classical::d_min(p, qn), Relation::near, tol);
    rec.add("classical-dmax", seed, std::nullopt, d_max(t.rho().matrix(), sigma_n),
            classical::d_max(p, qn), Relation::near, tol);
    rec.add("classical-rel-ent-diff", seed, std::nullopt, rel_ent_diff(t),
            classical::rel_ent_diff(p, q, tr), Relation::near, tol);
    rec.add("classical-delta-min", seed, std::nullopt, minmax_delta(t, Extremum::min),
            classical::delta_min(p, q, tr), Relation::near, tol);
    rec.add("classical-delta-max", seed, std::nullopt, minmax_delta(t, Extremum::max),
            classical::delta_max(p, q, tr), Relation::near, tol);
    for (double a : merged_grid(cfg)) {
      const AlphaParameter ap(a);
      rec.add("classical-renyi", seed, a, renyi_div(t.rho().matrix(), sigma_n, ap),
              classical::renyi(p, qn, a), Relation::near, tol);
      rec.add("classical-sandwiched", seed, a, sandwiched_div(t.rho().matrix(), sigma_n, ap),
              classical::sandwiched(p, qn, a), Relation::near, tol);
    }
    for (double a : cfg.petz_grid) {
      rec.add("classical-delta-alpha", seed, a, delta_alpha(t, AlphaParameter(a)),
              classical::delta_alpha(p, q, tr, a), Relation::near, tol);
    }
    for (double a : cfg.sandwiched_grid) {
      rec.add("classical-delta-tilde", seed, a, delta_tilde_alpha(t, AlphaParameter(a)),
              classical::delta_tilde_alpha(p, q, tr, a), Relation::near, tol);
    }
  }
  return rec.take();
}

VerificationReport all_suites(const SuiteConfig& cfg) {
  VerificationReport out;
  out.suite = "all";
  out.append(trace_inequality_suite(cfg));
  out.append(characterization_suite(cfg));
  out.append(limit_suite(cfg));
  out.append(inequality_suite(cfg));
  out.append(classical_suite(cfg));
  return out;
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "trace") return trace_inequality_suite(cfg);
  if (name == "characterization") return characterization_suite(cfg);
  if (name == "limits") return limit_suite(cfg);
  if (name == "inequalities") return inequality_suite(cfg);
  if (name == "classical") return classical_suite(cfg);
  if (name == "all") return all_suites(cfg);
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

VerificationReport state_suite(const TripartiteState& s, const SuiteConfig& cfg) {
  Recorder rec("state");
  const double tol = cfg.tol.inequality;
  const bool pd = s.rho().positive_definite();
  rec.add("nonneg-cmi", 0, std::nullopt, von_neumann_cmi(s), 0.0, Relation::at_least, tol);
  for (double a : cfg.petz_grid) {
    if (a > 1.0 && !pd) continue;
    rec.add("nonneg-renyi-cmi", 0, a, renyi_cmi(s, AlphaParameter(a)), 0.0, Relation::at_least, tol);
  }
  for (double a : cfg.sandwiched_grid) {
    if (a > 1.0 && !pd) continue;
    rec.add("nonneg-sandwiched-cmi", 0, a, sandwiched_cmi(s, AlphaParameter(a)), 0.0,
            Relation::at_least, tol);
  }
  if (pd) {
    rec.add("nonneg-imax", 0, std::nullopt, minmax_cmi(s, Extremum::max), 0.0, Relation::at_least,
            tol);
    rec.add("nonneg-imin", 0, std::nullopt, minmax_cmi(s, Extremum::min), 0.0, Relation::at_least,
            tol);
  }
  cmi_trace_checks(rec, s, cfg, 0, "", false);
  return rec.take();
}

}  // namespace qsuff
