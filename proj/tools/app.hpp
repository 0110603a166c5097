#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "trikit/laurent.hpp"
#include "trikit/tripar.hpp"

namespace trikit::app {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kDomainError = 3,
  kInternalError = 4,
};

enum class Subcommand { alexander, casson, tuples, diagram_validate, diagram_std, twobridge, report };

struct RunConfig {
  Subcommand subcommand = Subcommand::alexander;
  std::optional<std::filesystem::path> input_path;
  bool json_output = false;

  // Family preset (only "kn" exists) and its parameter.
  std::optional<std::string> family;
  std::optional<std::int64_t> n;

  std::optional<std::string> delta_json;  // casson: inline Alexander polynomial
  std::int64_t surgery_m = 1;

  int chi = 0;
  int genus = 0;
  bool exclude_seifert = false;

  std::optional<std::string> type_csv;  // diagram-std: "g,k,p,b"

  std::optional<std::string> cf_csv;
  std::vector<std::string> compare;  // twobridge: two words
};

/// Checks the cross-field rules (one input source, required flags present).
/// Throws ParseError.
void check_config(const RunConfig& cfg);

/// Executes one subcommand. Returns the exit status; diagnostics go to err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line handling (argv[0] excluded).
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ReportRow {
  std::int64_t n = 0;
  LaurentPoly f;
  LaurentPoly delta;
  BigInt delta_second_derivative;
  BigInt lambda;
  std::vector<TrisectionType> tuples;  // chi = 1, g <= 3, Seifert-forced excluded
  int heegaard_genus = 0;
  std::string verdict;
};

/// One row per n in [1, n_max], ordered by n. Rows are computed on up to
/// `workers` threads (0 picks the hardware concurrency).
std::vector<ReportRow> report_mn(std::int64_t n_max, unsigned workers = 0);

nlohmann::json report_to_json(const std::vector<ReportRow>& rows);
std::string report_to_text(const std::vector<ReportRow>& rows);

}  // namespace trikit::app
