// io.hpp - JSON files for states, operators, channels, block specs and
// verification reports. Matrices are stored row-major as separate "re" and
// "im" arrays. Malformed documents raise MalformedInput; well-formed
// documents that describe invalid objects raise the validation error.

#pragma once

#include "qsuff/structured.hpp"
#include "qsuff/verification.hpp"

#include <string>

namespace qsuff::io {

inline constexpr int kFormatVersion = 1;

/// kind "state"; dims must multiply to the matrix size.
DensityOperator parse_state(const std::string& text);
/// kind "state" or "operator".
PositiveOperator parse_operator(const std::string& text);
Channel parse_channel(const std::string& text);
MarkovBlockSpec parse_markov_spec(const std::string& text);
SufficiencyBlockSpec parse_sufficiency_spec(const std::string& text);

std::string state_json(const PositiveOperator& rho);
std::string operator_json(const PositiveOperator& sigma);
std::string channel_json(const Channel& n);
std::string markov_spec_json(const MarkovBlockSpec& spec);
std::string sufficiency_spec_json(const SufficiencyBlockSpec& spec);
std::string report_json(const VerificationReport& report);

/// Throws MalformedInput when the file cannot be read.
std::string read_file(const std::string& path);
/// Throws InvalidArgument when the file cannot be written.
void write_file(const std::string& path, const std::string& text);

}  // namespace qsuff::io
