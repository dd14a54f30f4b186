// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Expressions are assembled here from matrix primitives
// where the library also offers a packaged version, so that the packaged
// version is not checked against itself.

#include "qsuff/classical.hpp"
#include "qsuff/error.hpp"
#include "qsuff/io.hpp"
#include "qsuff/measures.hpp"
#include "qsuff/structured.hpp"
#include "qsuff/verification.hpp"

#include <Eigen/Eigenvalues>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <string>
#include <vector>

using namespace qsuff;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr double kInf = std::numeric_limits<double>::infinity();
const std::vector<double> kPetz{0.25, 0.5, 0.75, 1.25, 1.5, 1.75};
const std::vector<double> kSand{0.6, 0.75, 0.9, 1.5, 2.0, 3.0, 5.0};
const Dims kAbc{2, 2, 2};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Tracks the worst value of a quantity that must stay on one side of a bound.
struct Worst {
  double value = -kInf;
  void at_most(double x) { value = std::max(value, std::isnan(x) ? kInf : x); }
};

struct Floor {
  double value = kInf;
  void at_least(double x) { value = std::min(value, std::isnan(x) ? -kInf : x); }
};

int failures = 0;

void report(int n, bool pass, const char* name, const std::string& detail) {
  std::printf("criterion %2d %s  %s: %s\n", n, pass ? "PASS" : "FAIL", name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

void run(int n, const char* name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(n, false, name, std::string("exception: ") + e.what());
  }
}

Matrix pw(const Matrix& m, double p) { return matrix_power(hermitian_part(m), p); }
double tr_pw(const Matrix& m, double p) { return real_trace(pw(m, p)); }

DensityOperator full_rank(const Dims& dims, Rng& rng) { return random_density(dims, product(dims), rng); }

struct Marginals {
  Dims dims;
  Matrix ac, bc, c;
  Matrix on_ac(const Matrix& x) const { return embed(x, dims, {0, 2}); }
  Matrix on_bc(const Matrix& x) const { return embed(x, dims, {1, 2}); }
  Matrix on_c(const Matrix& x) const { return embed(x, dims, {2}); }
};

Marginals marginals(const Matrix& rho, const Dims& dims = kAbc) {
  return {dims, partial_trace(rho, dims, {1}), partial_trace(rho, dims, {0}), partial_trace(rho, dims, {0, 1})};
}

// rho_AC^e rho_C^-e rho_BC^f rho_C^-e rho_AC^e.
Matrix cmi_chain(const Marginals& m, double e, double f) {
  const Matrix ac = m.on_ac(pw(m.ac, e)), c = m.on_c(pw(m.c, -e));
  return ac * c * m.on_bc(pw(m.bc, f)) * c * ac;
}

double petz_cmi_trace(const Marginals& m, double a) {
  return tr_pw(cmi_chain(m, (1.0 - a) / 2.0, 1.0 - a), 1.0 / (1.0 - a));
}

double sand_cmi_trace(const Marginals& m, double a) {
  const double s = (1.0 - a) / (2.0 * a);
  return tr_pw(cmi_chain(m, s, 2.0 * s), a / (1.0 - a));
}

Matrix cmi_log_sum(const Marginals& m) {
  return hermitian_part(m.on_ac(matrix_log(m.ac)) + m.on_bc(matrix_log(m.bc)) - m.on_c(matrix_log(m.c)));
}

struct Triple {
  Matrix rho, sigma;
  Channel n;
  Matrix n_rho, n_sigma;
};

Triple random_triple(Rng& rng) {
  Matrix rho = full_rank({4}, rng).matrix();
  const Matrix sigma_state = full_rank({4}, rng).matrix();
  const double scale = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
  Channel n = random_strict_channel(4, 3, 3, rng);
  const Matrix sigma = scale * sigma_state;
  Matrix nr = apply_channel(n, rho), ns = apply_channel(n, sigma);
  return {std::move(rho), sigma, std::move(n), std::move(nr), std::move(ns)};
}

// sigma^e N^dagger(N(sigma)^-e N(rho)^f N(sigma)^-e) sigma^e.
Matrix channel_chain(const Triple& t, double e, double f) {
  const Matrix ns = pw(t.n_sigma, -e);
  const Matrix s = pw(t.sigma, e);
  return s * adjoint_apply(t.n, ns * pw(t.n_rho, f) * ns) * s;
}

double petz_channel_trace(const Triple& t, double a) {
  return tr_pw(channel_chain(t, (1.0 - a) / 2.0, 1.0 - a), 1.0 / (1.0 - a));
}

double sand_channel_trace(const Triple& t, double a) {
  const double s = (1.0 - a) / (2.0 * a);
  return tr_pw(channel_chain(t, s, 2.0 * s), a / (1.0 - a));
}

ChannelTriple as_triple(const Triple& t) {
  return ChannelTriple(validate_density(t.rho), validate_positive(t.sigma), t.n);
}

double min_eig(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// (Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2 through Eigen's own operatorSqrt.
double fidelity_oracle(const Matrix& rho, const Matrix& sigma) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(sigma);
  const Matrix rs = es.operatorSqrt();
  const Matrix inner = rs * rho * rs;
  Eigen::SelfAdjointEigenSolver<Matrix> ei((inner + inner.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  double t = 0.0;
  for (Eigen::Index i = 0; i < ei.eigenvalues().size(); ++i) t += std::sqrt(std::max(0.0, ei.eigenvalues()(i)));
  return t * t;
}

void criterion_1() {
  const auto t0 = Clock::now();
  Worst cmi, chan;
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(kSeed + i);
    const Marginals m = marginals(full_rank(kAbc, rng).matrix());
    for (double a : kPetz) cmi.at_most(petz_cmi_trace(m, a));
    for (double a : kSand) cmi.at_most(sand_cmi_trace(m, a));
    const Triple t = random_triple(rng);
    for (double a : kPetz) chan.at_most(petz_channel_trace(t, a));
    for (double a : kSand) chan.at_most(sand_channel_trace(t, a));
  }
  const double secs = seconds_since(t0);
  const bool ok = cmi.value <= 1.0 + 1e-9 && chan.value <= 1.0 + 1e-9 && secs <= 60.0;
  report(1, ok, "trace inequalities",
         fmt("max tripartite %.12f, max channel %.12f, %.2f s", cmi.value, chan.value, secs));
}

void criterion_2() {
  Worst cmi, chan;
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(kSeed + i);
    const Marginals m = marginals(full_rank(kAbc, rng).matrix());
    cmi.at_most(real_trace(matrix_exp(cmi_log_sum(m))));
    const Triple t = random_triple(rng);
    const Matrix l = matrix_log(t.sigma) + adjoint_apply(t.n, matrix_log(t.n_rho) - matrix_log(t.n_sigma));
    chan.at_most(real_trace(matrix_exp(hermitian_part(l))));
  }
  report(2, cmi.value <= 1.0 + 1e-9 && chan.value <= 1.0 + 1e-9, "exp-trace corollaries",
         fmt("max tripartite %.12f, max channel %.12f", cmi.value, chan.value));
}

void criterion_3() {
  Worst measure, roundtrip;
  for (std::size_t i = 0; i < 20; ++i) {
    Rng rng(kSeed + i);
    const TripartiteState s = build_markov_chain(random_markov_spec(2, 2, rng));
    measure.at_most(std::abs(von_neumann_cmi(s)));
    for (double a : kPetz) measure.at_most(std::abs(renyi_cmi(s, AlphaParameter(a))));
    for (double a : kSand) measure.at_most(std::abs(sandwiched_cmi(s, AlphaParameter(a))));
    measure.at_most(std::abs(minmax_cmi(s, Extremum::min)));
    measure.at_most(std::abs(minmax_cmi(s, Extremum::max)));
    const Marginals m = marginals(s.rho().matrix(), s.dims());
    const Matrix ac = m.on_ac(pw(m.ac, 0.5)), c = m.on_c(pw(m.c, -0.5));
    const Matrix recovered = ac * c * m.on_bc(m.bc) * c * ac;
    roundtrip.at_most(trace_norm(recovered - s.rho().matrix()));
  }
  report(3, measure.value <= 1e-8 && roundtrip.value <= 1e-9, "Markov-chain zeroing",
         fmt("max |measure| %.3e, max Petz round trip %.3e", measure.value, roundtrip.value));
}

void criterion_4() {
  Worst measure, fixed;
  for (std::size_t i = 0; i < 20; ++i) {
    Rng rng(kSeed + i);
    const ChannelTriple t = build_sufficiency_triple(random_sufficiency_spec(rng));
    const Matrix& rho = t.rho().matrix();
    for (double a : kPetz) {
      measure.at_most(std::abs(delta_alpha(t, AlphaParameter(a))));
      fixed.at_most(trace_norm(petz_fixed_point(t, a) - rho));
      fixed.at_most(trace_norm(output_fixed_point(t, a) - t.n_rho()));
    }
    for (double a : kSand) {
      measure.at_most(std::abs(delta_tilde_alpha(t, AlphaParameter(a))));
      fixed.at_most(trace_norm(sandwiched_fixed_point(t, a) - rho));
    }
    measure.at_most(std::abs(minmax_delta(t, Extremum::min)));
    measure.at_most(std::abs(minmax_delta(t, Extremum::max)));
  }
  report(4, measure.value <= 1e-8 && fixed.value <= 1e-8, "sufficiency zeroing",
         fmt("max |measure| %.3e, max fixed-point residual %.3e", measure.value, fixed.value));
}

void criterion_5() {
  Floor petz, sand;
  std::size_t screened = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    Rng rng(kSeed + i);
    for (int attempt = 0; attempt < 100; ++attempt) {
      const ChannelTriple t = as_triple(random_triple(rng));
      if (is_sufficient_petz(t, 0.0).rho_distance < 0.05) continue;
      ++screened;
      double bp = -kInf, bs = -kInf;
      for (double a : kPetz) bp = std::max(bp, delta_alpha(t, AlphaParameter(a)));
      for (double a : kSand) bs = std::max(bs, delta_tilde_alpha(t, AlphaParameter(a)));
      petz.at_least(bp);
      sand.at_least(bs);
      break;
    }
  }
  const bool ok = screened == 50 && petz.value >= 1e-6 && sand.value >= 1e-6;
  report(5, ok, "converse consistency",
         fmt("%.0f triples, min max-Delta %.3e, min max-Delta~ %.3e", static_cast<double>(screened),
             petz.value, sand.value));
}

void criterion_6() {
  Worst gap;
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(kSeed + i);
    const TripartiteState s(full_rank(kAbc, rng));
    const Matrix sigma = embed(s.rho_ac(), kAbc, {0, 2});
    const ChannelTriple t(s.rho(), validate_positive(sigma, kAbc), partial_trace_channel(kAbc, {0}));
    for (double a : kPetz) {
      const AlphaParameter ap(a);
      gap.at_most(std::abs(renyi_cmi(s, ap) - delta_alpha(t, ap)));
    }
    for (double a : kSand) {
      const AlphaParameter ap(a);
      gap.at_most(std::abs(sandwiched_cmi(s, ap) - delta_tilde_alpha(t, ap)));
    }
  }
  report(6, gap.value <= 1e-9, "reduction identity", fmt("max gap %.3e", gap.value));
}

void criterion_7() {
  Worst gap, rise;
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(kSeed + i);
    const TripartiteState s(full_rank(kAbc, rng));
    const ChannelTriple t = as_triple(random_triple(rng));
    const double cmi = von_neumann_cmi(s);
    const double diff = rel_entropy(t.rho().matrix(), t.sigma().matrix()) - rel_entropy(t.n_rho(), t.n_sigma());
    for (double off : {-1e-4, 1e-4}) {
      const AlphaParameter a(1.0 + off);
      gap.at_most(std::abs(renyi_cmi(s, a) - cmi));
      gap.at_most(std::abs(sandwiched_cmi(s, a) - cmi));
      gap.at_most(std::abs(delta_alpha(t, a) - diff));
      gap.at_most(std::abs(delta_tilde_alpha(t, a) - diff));
    }
    const Marginals m = marginals(s.rho().matrix());
    const Matrix target = matrix_exp(cmi_log_sum(m));
    for (double sign : {-1.0, 1.0}) {
      double previous = kInf;
      for (int k = 1; k <= 4; ++k) {
        const double a = 1.0 + sign * std::pow(10.0, -k);
        const double dev = operator_norm(pw(cmi_chain(m, (1.0 - a) / 2.0, 1.0 - a), 1.0 / (1.0 - a)) - target);
        rise.at_most(dev - previous);
        previous = dev;
      }
    }
  }
  report(7, gap.value <= 1e-3 && rise.value <= 0.0, "limits at alpha -> 1",
         fmt("max gap %.3e, largest Lie-Trotter step change %.3e", gap.value, rise.value));
}

void criterion_8() {
  Worst fid, half, dmax_cert;
  Floor dmax_tight;
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(kSeed + i);
    const Matrix rho = full_rank({4}, rng).matrix();
    const Matrix sigma = full_rank({4}, rng).matrix();
    const double dmin = d_min(rho, sigma);
    fid.at_most(std::abs(dmin + std::log2(fidelity_oracle(rho, sigma))));
    half.at_most(std::abs(dmin - sandwiched_div(rho, sigma, AlphaParameter(0.5))));
    const double dmax = d_max(rho, sigma);
    dmax_cert.at_most(-min_eig(std::exp2(dmax) * sigma - rho));
    // Any smaller exponent must fail the operator inequality.
    dmax_tight.at_least(-min_eig(std::exp2(dmax - 1e-6) * sigma - rho));
  }
  const bool ok = fid.value <= 1e-10 && half.value <= 1e-9 && dmax_cert.value <= 1e-12 && dmax_tight.value > 0.0;
  report(8, ok, "divergence identities",
         fmt("|D_min + log2 F| %.3e, |D_min - D~_1/2| %.3e, D_max certificate %.3e", fid.value, half.value,
             dmax_cert.value));
}

void criterion_9() {
  Worst dpi;
  Floor bound;
  std::vector<double> petz = kPetz, sand = kSand;
  petz.push_back(2.0);
  sand.insert(sand.begin(), 0.5);
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(kSeed + i);
    const Triple r = random_triple(rng);
    const Matrix sigma = r.sigma / real_trace(r.sigma);
    const Matrix n_sigma = apply_channel(r.n, sigma);
    for (double a : petz) {
      const AlphaParameter ap(a);
      dpi.at_most(renyi_div(r.n_rho, n_sigma, ap) - renyi_div(r.rho, sigma, ap));
    }
    for (double a : sand) {
      const AlphaParameter ap(a);
      dpi.at_most(sandwiched_div(r.n_rho, n_sigma, ap) - sandwiched_div(r.rho, sigma, ap));
    }
    const ChannelTriple t = as_triple(r);
    for (double a : {1.5, 2.0, 3.0}) {
      const AlphaParameter ap(a);
      bound.at_least(delta_tilde_alpha(t, ap) - delta_alpha(t, AlphaParameter((2.0 * a - 1.0) / a)));
    }
  }
  report(9, dpi.value <= 1e-9 && bound.value >= -1e-9, "DPI and appendix bound",
         fmt("max output-minus-input %.3e, min Delta~_a - Delta_(2a-1)/a %.3e", dpi.value, bound.value));
}

void criterion_10() {
  SuiteConfig cfg;
  cfg.trials = 50;
  cfg.seed = kSeed;
  const VerificationReport r = classical_suite(cfg);
  std::size_t failed = 0;
  for (const CheckRecord& c : r.records) failed += c.pass ? 0 : 1;
  report(10, !r.records.empty() && r.all_pass(), "classical oracle equivalence",
         fmt("%.0f comparisons, %.0f outside 1e-10, worst slack %.3e", static_cast<double>(r.records.size()),
             static_cast<double>(failed), r.worst_slack()));
}

struct CliOutput {
  int status = -1;
  std::string out;
  double seconds = 0.0;
};

CliOutput run_cli(const std::string& args) {
  CliOutput r;
  const std::string cmd = std::string("\"") + QSUFF_CLI_PATH + "\" " + args + " 2>/dev/null";
  const auto t0 = Clock::now();
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int st = pclose(p);
  r.seconds = seconds_since(t0);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

void criterion_11() {
  std::filesystem::create_directories(QSUFF_TEST_TMP);
  const std::string json = std::string(QSUFF_TEST_TMP) + "/verify_all.json";
  const std::string args = "verify --suite all --dims 2,2,2 --trials 50 --seed 42 --json \"" + json + "\"";
  const CliOutput first = run_cli(args);
  const std::string first_json = first.status == 0 ? io::read_file(json) : "";
  std::filesystem::remove(json);
  const CliOutput second = run_cli(args);
  const std::string second_json = second.status == 0 ? io::read_file(json) : "";
  const bool ok = first.status == 0 && second.status == 0 && first.seconds < 60.0 && second.seconds < 60.0 &&
                  !first.out.empty() && first.out == second.out && !first_json.empty() &&
                  first_json == second_json;
  report(11, ok, "CLI contract",
         fmt("exit %.0f/%.0f, %.2f s", first.status, second.status, std::max(first.seconds, second.seconds)) +
             (first.out == second.out && first_json == second_json ? ", reruns identical" : ", reruns differ"));
}

}  // namespace

int main() {
  run(1, "trace inequalities", criterion_1);
  run(2, "exp-trace corollaries", criterion_2);
  run(3, "Markov-chain zeroing", criterion_3);
  run(4, "sufficiency zeroing", criterion_4);
  run(5, "converse consistency", criterion_5);
  run(6, "reduction identity", criterion_6);
  run(7, "limits at alpha -> 1", criterion_7);
  run(8, "divergence identities", criterion_8);
  run(9, "DPI and appendix bound", criterion_9);
  run(10, "classical oracle equivalence", criterion_10);
  run(11, "CLI contract", criterion_11);
  std::printf("%s: %d of 11 criteria failed\n", failures == 0 ? "PASS" : "FAIL", failures);
  return failures == 0 ? 0 : 1;
}
