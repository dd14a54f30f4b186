#include "qsuff/io.hpp"

#include "qsuff/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qsuff::io {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::MalformedInput, what);
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field '") + name + "'");
  return j.at(name);
}

double number(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number()) malformed(std::string("field '") + name + "' is not a number");
  return v.get<double>();
}

std::size_t count(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
    malformed(std::string("field '") + name + "' is not a positive integer");
  }
  return v.get<std::size_t>();
}

void check_header(const json& j, const char* kind) {
  if (!j.is_object()) malformed("document is not an object");
  const json& v = field(j, "version");
  if (!v.is_number_integer() || v.get<int>() != kFormatVersion) malformed("unsupported version");
  const json& k = field(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) {
    malformed(std::string("expected kind '") + kind + "'");
  }
}

Eigen::MatrixXd real_rows(const json& rows, const char* name) {
  if (!rows.is_array() || rows.empty()) malformed(std::string("'") + name + "' is not a matrix");
  const std::size_t r = rows.size();
  if (!rows[0].is_array() || rows[0].empty()) malformed(std::string("'") + name + "' row 0 is empty");
  const std::size_t c = rows[0].size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) {
      malformed(std::string("'") + name + "' is ragged");
    }
    for (std::size_t k = 0; k < c; ++k) {
      if (!rows[i][k].is_number()) malformed(std::string("'") + name + "' has a non-number");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k].get<double>();
    }
  }
  return m;
}

// {"re": [[...]], "im": [[...]]}; a missing "im" means zero.
Matrix matrix_of(const json& j) {
  const Eigen::MatrixXd re = real_rows(field(j, "re"), "re");
  Eigen::MatrixXd im = Eigen::MatrixXd::Zero(re.rows(), re.cols());
  if (j.contains("im")) {
    im = real_rows(j.at("im"), "im");
    if (im.rows() != re.rows() || im.cols() != re.cols()) malformed("'re' and 'im' shapes differ");
  }
  Matrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  return m;
}

Dims dims_of(const json& j) {
  const json& d = field(j, "dims");
  if (!d.is_array() || d.empty()) malformed("'dims' is not a non-empty array");
  Dims out;
  for (const json& x : d) {
    if (!x.is_number_unsigned() || x.get<std::size_t>() == 0) malformed("'dims' entry is invalid");
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

json matrix_to(const Matrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json rr = json::array();
    json ii = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rr.push_back(m(i, k).real());
      ii.push_back(m(i, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

json operator_to(const PositiveOperator& op, const char* kind) {
  json j = matrix_to(op.matrix());
  j["version"] = kFormatVersion;
  j["kind"] = kind;
  j["dims"] = op.dims();
  return j;
}

std::string finish(const json& j) { return j.dump() + "\n"; }

}  // namespace

DensityOperator parse_state(const std::string& text) {
  const json j = parse_text(text);
  check_header(j, "state");
  return validate_density(matrix_of(j), dims_of(j));
}

PositiveOperator parse_operator(const std::string& text) {
  const json j = parse_text(text);
  const json& k = field(j, "kind");
  if (k.is_string() && k.get<std::string>() == "state") {
    check_header(j, "state");
  } else {
    check_header(j, "operator");
  }
  return validate_positive(matrix_of(j), dims_of(j));
}

Channel parse_channel(const std::string& text) {
  const json j = parse_text(text);
  check_header(j, "channel");
  const std::size_t din = count(j, "dim_in");
  const std::size_t dout = count(j, "dim_out");
  const json& ks = field(j, "kraus");
  if (!ks.is_array() || ks.empty()) malformed("'kraus' is not a non-empty array");
  std::vector<Matrix> kraus;
  for (const json& k : ks) {
    Matrix m = matrix_of(k);
    if (static_cast<std::size_t>(m.rows()) != dout || static_cast<std::size_t>(m.cols()) != din) {
      throw Error(ErrorKind::DimensionMismatch, "Kraus operator is not dim_out x dim_in");
    }
    kraus.push_back(std::move(m));
  }
  return Channel::from_kraus(std::move(kraus));
}

MarkovBlockSpec parse_markov_spec(const std::string& text) {
  const json j = parse_text(text);
  check_header(j, "markov-spec");
  MarkovBlockSpec spec;
  spec.d_a = count(j, "d_A");
  spec.d_b = count(j, "d_B");
  const json& blocks = field(j, "blocks");
  if (!blocks.is_array() || blocks.empty()) malformed("'blocks' is not a non-empty array");
  for (const json& b : blocks) {
    MarkovBlock blk;
    blk.weight = number(b, "weight");
    const json& left = field(b, "rho_ACL");
    const json& right = field(b, "rho_CRB");
    const Dims dl = dims_of(left);
    const Dims dr = dims_of(right);
    if (dl.size() != 2 || dr.size() != 2 || dl[0] != spec.d_a || dr[1] != spec.d_b) {
      throw Error(ErrorKind::InconsistentDims, "block dims do not match d_A / d_B");
    }
    blk.d_cl = dl[1];
    blk.d_cr = dr[0];
    blk.rho_a_cl = matrix_of(left);
    blk.rho_cr_b = matrix_of(right);
    spec.blocks.push_back(std::move(blk));
  }
  return spec;
}

SufficiencyBlockSpec parse_sufficiency_spec(const std::string& text) {
  const json j = parse_text(text);
  check_header(j, "sufficiency-spec");
  SufficiencyBlockSpec spec;
  const json& blocks = field(j, "blocks");
  if (!blocks.is_array() || blocks.empty()) malformed("'blocks' is not a non-empty array");
  for (const json& b : blocks) {
    SufficiencyBlock blk;
    blk.p = number(b, "p");
    blk.q = number(b, "q");
    blk.rho_l = matrix_of(field(b, "rho_L"));
    blk.sigma_l = matrix_of(field(b, "sigma_L"));
    blk.tau_r = matrix_of(field(b, "tau_R"));
    blk.unitary = matrix_of(field(b, "unitary"));
    const json& ch = field(b, "channel");
    if (!ch.is_array() || ch.empty()) malformed("'channel' is not a non-empty array");
    for (const json& k : ch) blk.channel_r.push_back(matrix_of(k));
    spec.blocks.push_back(std::move(blk));
  }
  return spec;
}

std::string state_json(const PositiveOperator& rho) { return finish(operator_to(rho, "state")); }

std::string operator_json(const PositiveOperator& sigma) {
  return finish(operator_to(sigma, "operator"));
}

std::string channel_json(const Channel& n) {
  json kraus = json::array();
  for (const Matrix& k : n.kraus()) kraus.push_back(matrix_to(k));
  return finish(json{{"version", kFormatVersion},
                     {"kind", "channel"},
                     {"dim_in", n.dim_in()},
                     {"dim_out", n.dim_out()},
                     {"kraus", std::move(kraus)}});
}

std::string markov_spec_json(const MarkovBlockSpec& spec) {
  json blocks = json::array();
  for (const MarkovBlock& b : spec.blocks) {
    json left = matrix_to(b.rho_a_cl);
    left["dims"] = Dims{spec.d_a, b.d_cl};
    json right = matrix_to(b.rho_cr_b);
    right["dims"] = Dims{b.d_cr, spec.d_b};
    blocks.push_back(json{{"weight", b.weight}, {"rho_ACL", left}, {"rho_CRB", right}});
  }
  return finish(json{{"version", kFormatVersion},
                     {"kind", "markov-spec"},
                     {"d_A", spec.d_a},
                     {"d_B", spec.d_b},
                     {"blocks", std::move(blocks)}});
}

std::string sufficiency_spec_json(const SufficiencyBlockSpec& spec) {
  json blocks = json::array();
  for (const SufficiencyBlock& b : spec.blocks) {
    json ch = json::array();
    for (const Matrix& k : b.channel_r) ch.push_back(matrix_to(k));
    blocks.push_back(json{{"p", b.p},
                          {"q", b.q},
                          {"rho_L", matrix_to(b.rho_l)},
                          {"sigma_L", matrix_to(b.sigma_l)},
                          {"tau_R", matrix_to(b.tau_r)},
                          {"unitary", matrix_to(b.unitary)},
                          {"channel", std::move(ch)}});
  }
  return finish(json{{"version", kFormatVersion},
                     {"kind", "sufficiency-spec"},
                     {"blocks", std::move(blocks)}});
}

std::string report_json(const VerificationReport& report) {
  json records = json::array();
  for (const CheckRecord& r : report.records) {
    json rec{{"check", r.check},
             {"seed", r.seed},
             {"value", r.value},
             {"bound", r.bound},
             {"relation", std::string(to_string(r.relation))},
             {"slack", r.slack},
             {"tolerance", r.tolerance},
             {"pass", r.pass}};
    rec["alpha"] = r.alpha ? json(*r.alpha) : json(nullptr);
    records.push_back(std::move(rec));
  }
  const CheckRecord* worst = report.worst();
  json out{{"version", kFormatVersion},
           {"kind", "verification-report"},
           {"suite", report.suite},
           {"all_pass", report.all_pass()},
           {"record_count", report.records.size()},
           {"worst_slack", report.records.empty() ? json(nullptr) : json(report.worst_slack())},
           {"worst_check", worst ? json(worst->check) : json(nullptr)},
           {"records", std::move(records)}};
  return out.dump(1) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::InvalidArgument, "write to '" + path + "' failed");
}

}  // namespace qsuff::io
