#include "cli.hpp"

#include "qsuff/error.hpp"
#include "qsuff/io.hpp"
#include "qsuff/measures.hpp"
#include "qsuff/structured.hpp"
#include "qsuff/verification.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qsuff::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MeasureInputs {
  std::string measure;
  std::string state;
  std::string rho;
  std::string sigma;
  std::string channel;
  bool allow_uncertified = false;
  bool nats = false;
};

enum class Family { cmi, triple };
enum class AlphaKind { none, petz, sandwiched };

struct MeasureInfo {
  Family family;
  AlphaKind alpha;
};

MeasureInfo measure_info(const std::string& m) {
  if (m == "cmi" || m == "imax" || m == "imin") return {Family::cmi, AlphaKind::none};
  if (m == "renyi-cmi") return {Family::cmi, AlphaKind::petz};
  if (m == "sand-cmi") return {Family::cmi, AlphaKind::sandwiched};
  if (m == "red" || m == "delta-min" || m == "delta-max") return {Family::triple, AlphaKind::none};
  if (m == "delta") return {Family::triple, AlphaKind::petz};
  if (m == "delta-tilde") return {Family::triple, AlphaKind::sandwiched};
  throw UsageError("unknown measure '" + m + "'");
}

const std::vector<std::string> kMeasures{"cmi",  "renyi-cmi", "sand-cmi",    "imax",      "imin",
                                         "red",  "delta",     "delta-tilde", "delta-min", "delta-max"};

// Loaded inputs for one measure; exactly one of the two is set.
struct Loaded {
  std::optional<TripartiteState> state;
  std::optional<ChannelTriple> triple;
};

Loaded load_inputs(const MeasureInputs& in, Family family) {
  Loaded l;
  if (family == Family::cmi) {
    if (in.state.empty()) throw UsageError("--state is required for this measure");
    DensityOperator rho = io::parse_state(io::read_file(in.state));
    if (rho.dims().size() != 3) throw UsageError("--state must declare three subsystem dims");
    l.state.emplace(std::move(rho));
  } else {
    if (in.rho.empty() || in.sigma.empty() || in.channel.empty()) {
      throw UsageError("--rho, --sigma and --channel are required for this measure");
    }
    l.triple.emplace(io::parse_state(io::read_file(in.rho)),
                     io::parse_operator(io::read_file(in.sigma)),
                     io::parse_channel(io::read_file(in.channel)));
  }
  return l;
}

void check_certified(const AlphaParameter& a, AlphaKind kind, bool allow) {
  if (allow) return;
  const bool ok = kind == AlphaKind::petz ? a.petz_certified() : a.sandwiched_certified();
  if (!ok) {
    throw UsageError("alpha " + std::to_string(a.value()) +
                     " is outside the certified range of this measure (use --allow-uncertified)");
  }
}

double evaluate(const std::string& m, const Loaded& l, std::optional<double> alpha) {
  if (m == "cmi") return von_neumann_cmi(*l.state);
  if (m == "renyi-cmi") return renyi_cmi(*l.state, AlphaParameter(*alpha));
  if (m == "sand-cmi") return sandwiched_cmi(*l.state, AlphaParameter(*alpha));
  if (m == "imax") return minmax_cmi(*l.state, Extremum::max);
  if (m == "imin") return minmax_cmi(*l.state, Extremum::min);
  if (m == "red") return rel_ent_diff(*l.triple);
  if (m == "delta") return delta_alpha(*l.triple, AlphaParameter(*alpha));
  if (m == "delta-tilde") return delta_tilde_alpha(*l.triple, AlphaParameter(*alpha));
  if (m == "delta-min") return minmax_delta(*l.triple, Extremum::min);
  return minmax_delta(*l.triple, Extremum::max);
}

// Von Neumann counterpart used at alpha = 1 in sweeps.
double evaluate_at_one(const std::string& m, const Loaded& l) {
  return measure_info(m).family == Family::cmi ? von_neumann_cmi(*l.state)
                                               : rel_ent_diff(*l.triple);
}

std::string format_value(double v, bool nats) {
  if (nats) v *= std::numbers::ln2;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  std::string s(buf);
  if (s == "-0.000000000000") s = "0.000000000000";
  return s;
}

std::string format_alpha(double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", a);
  std::string s(buf);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

Dims parse_dims(const std::string& text) {
  Dims out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("invalid --dims '" + text + "'");
    }
    if (pos != item.size() || v == 0) throw UsageError("invalid --dims '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("invalid --dims '" + text + "'");
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  double start = 0.0, stop = 0.0, step = 0.0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &tail) != 3) {
    throw UsageError("--alpha-grid must be start:stop:step");
  }
  if (!(step > 0.0) || !(stop >= start) || !std::isfinite(start) || !std::isfinite(stop)) {
    throw UsageError("--alpha-grid '" + text + "' is empty");
  }
  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
  }
  return grid;
}

std::string strip_json_suffix(const std::string& path) {
  const std::string ext = ".json";
  if (path.size() > ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
    return path.substr(0, path.size() - ext.size());
  }
  return path;
}

void add_measure_inputs(CLI::App* cmd, MeasureInputs& in) {
  cmd->add_option("--state", in.state, "tripartite state JSON (dims d_A,d_B,d_C)");
  cmd->add_option("--rho", in.rho, "state JSON for rho");
  cmd->add_option("--sigma", in.sigma, "state or operator JSON for sigma");
  cmd->add_option("--channel", in.channel, "channel JSON");
  cmd->add_flag("--allow-uncertified", in.allow_uncertified,
                "accept alpha outside the measure's certified range");
  cmd->add_flag("--nats", in.nats, "report in nats instead of bits");
}

int cmd_compute(const MeasureInputs& in, std::optional<double> alpha, std::ostream& out) {
  const MeasureInfo info = measure_info(in.measure);
  if (info.alpha != AlphaKind::none) {
    if (!alpha) throw UsageError("--alpha is required for measure '" + in.measure + "'");
    check_certified(AlphaParameter(*alpha), info.alpha, in.allow_uncertified);
  }
  const Loaded l = load_inputs(in, info.family);
  out << format_value(evaluate(in.measure, l, alpha), in.nats) << "\n";
  return kExitOk;
}

struct GenerateOptions {
  std::string kind;
  std::string spec;
  std::string dims = "2,2,2";
  std::uint64_t seed = 0;
  std::size_t rank = 0;
  std::string out;
};

int cmd_generate(const GenerateOptions& g, std::ostream& out) {
  const Dims dims = parse_dims(g.dims);
  Rng rng(g.seed);
  if (g.kind == "random-state") {
    const std::size_t rank = g.rank == 0 ? product(dims) : g.rank;
    io::write_file(g.out, io::state_json(random_density(dims, rank, rng)));
    out << "wrote " << g.out << "\n";
    return kExitOk;
  }
  if (g.kind == "markov") {
    MarkovBlockSpec spec;
    if (!g.spec.empty()) {
      spec = io::parse_markov_spec(io::read_file(g.spec));
    } else {
      if (dims.size() < 2) throw UsageError("--dims needs d_A,d_B for a random markov spec");
      spec = random_markov_spec(dims[0], dims[1], rng);
    }
    io::write_file(g.out, io::state_json(build_markov_chain(spec).rho()));
    out << "wrote " << g.out << "\n";
    return kExitOk;
  }
  if (g.kind == "sufficiency") {
    const SufficiencyBlockSpec spec = g.spec.empty()
                                          ? random_sufficiency_spec(rng)
                                          : io::parse_sufficiency_spec(io::read_file(g.spec));
    const ChannelTriple t = build_sufficiency_triple(spec);
    const std::string prefix = strip_json_suffix(g.out);
    io::write_file(prefix + "_rho.json", io::state_json(t.rho()));
    io::write_file(prefix + "_sigma.json", io::operator_json(t.sigma()));
    io::write_file(prefix + "_channel.json", io::channel_json(t.channel()));
    out << "wrote " << prefix << "_rho.json " << prefix << "_sigma.json " << prefix
        << "_channel.json\n";
    return kExitOk;
  }
  throw UsageError("unknown --kind '" + g.kind + "'");
}

struct VerifyOptions {
  std::string suite = "all";
  std::size_t trials = 100;
  std::string dims = "2,2,2";
  std::uint64_t seed = 42;
  std::optional<double> tol;
  std::string json;
  std::string state;
};

int cmd_verify(const VerifyOptions& v, std::ostream& out) {
  SuiteConfig cfg;
  cfg.trials = v.trials;
  cfg.dims = parse_dims(v.dims);
  cfg.seed = v.seed;
  if (v.tol) cfg.tol.structural = *v.tol;
  try {
    validate_config(cfg);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  VerificationReport report;
  if (!v.state.empty()) {
    DensityOperator rho = io::parse_state(io::read_file(v.state));
    if (rho.dims().size() != 3) throw UsageError("--state must declare three subsystem dims");
    report = state_suite(TripartiteState(std::move(rho)), cfg);
  } else {
    static const std::vector<std::string> suites{"trace",        "characterization", "limits",
                                                 "inequalities", "classical",        "all"};
    if (std::find(suites.begin(), suites.end(), v.suite) == suites.end()) {
      throw UsageError("unknown --suite '" + v.suite + "'");
    }
    report = run_suite(v.suite, cfg);
  }
  out << format_table(report);
  if (!v.json.empty()) io::write_file(v.json, io::report_json(report));
  return report.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const MeasureInputs& in, const std::string& grid_text, const std::string& path,
              std::ostream& out) {
  const MeasureInfo info = measure_info(in.measure);
  if (info.alpha == AlphaKind::none) {
    throw UsageError("measure '" + in.measure + "' has no alpha parameter");
  }
  const std::vector<double> grid = parse_grid(grid_text);
  for (double a : grid) {
    if (a == 1.0) continue;
    if (!(a > 0.0)) throw UsageError("alpha grid must be positive");
    check_certified(AlphaParameter(a), info.alpha, in.allow_uncertified);
  }
  const Loaded l = load_inputs(in, info.family);
  std::string csv = "alpha,value_bits\n";
  for (double a : grid) {
    const bool one = a == 1.0;
    const double v = one ? evaluate_at_one(in.measure, l) : evaluate(in.measure, l, a);
    csv += (one ? std::string("1.0") : format_alpha(a)) + "," + format_value(v, in.nats) + "\n";
  }
  if (path.empty()) {
    out << csv;
  } else {
    io::write_file(path, csv);
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Renyi conditional mutual information, relative-entropy differences and recovery"};
  app.name("qsuff");
  app.require_subcommand(1);

  MeasureInputs compute_in;
  std::optional<double> compute_alpha;
  CLI::App* compute = app.add_subcommand("compute", "evaluate one measure");
  compute->add_option("--measure", compute_in.measure, "measure to evaluate")
      ->required()
      ->check(CLI::IsMember(kMeasures));
  compute->add_option("--alpha", compute_alpha, "Renyi parameter");
  add_measure_inputs(compute, compute_in);

  GenerateOptions gen;
  CLI::App* generate = app.add_subcommand("generate", "write random or structured instances");
  generate->add_option("--kind", gen.kind, "random-state, markov or sufficiency")
      ->required()
      ->check(CLI::IsMember({"random-state", "markov", "sufficiency"}));
  generate->add_option("--spec", gen.spec, "block spec JSON; random spec from --seed if absent");
  generate->add_option("--dims", gen.dims, "comma-separated dims");
  generate->add_option("--seed", gen.seed, "RNG seed");
  generate->add_option("--rank", gen.rank, "rank of a random state (default: full)");
  generate->add_option("--out", gen.out, "output file (prefix for sufficiency)")->required();

  VerifyOptions ver;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", ver.suite,
                     "trace, characterization, limits, inequalities, classical or all");
  verify->add_option("--trials", ver.trials, "random trials per suite");
  verify->add_option("--dims", ver.dims, "tripartite dims d_A,d_B,d_C");
  verify->add_option("--seed", ver.seed, "base seed");
  verify->add_option("--tol", ver.tol, "tolerance for structural equalities");
  verify->add_option("--json", ver.json, "write the full report as JSON");
  verify->add_option("--state", ver.state, "check a given tripartite state instead");

  MeasureInputs sweep_in;
  std::string grid;
  std::string sweep_out;
  CLI::App* sweep = app.add_subcommand("sweep", "tabulate a measure over an alpha grid as CSV");
  sweep->add_option("--measure", sweep_in.measure, "renyi-cmi, sand-cmi, delta or delta-tilde")
      ->required()
      ->check(CLI::IsMember(kMeasures));
  sweep->add_option("--alpha-grid", grid, "start:stop:step")->required();
  sweep->add_option("--out", sweep_out, "CSV file (default: standard output)");
  add_measure_inputs(sweep, sweep_in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(compute_in, compute_alpha, out);
    if (*generate) return cmd_generate(gen, out);
    if (*verify) return cmd_verify(ver, out);
    return cmd_sweep(sweep_in, grid, sweep_out, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace qsuff::cli
