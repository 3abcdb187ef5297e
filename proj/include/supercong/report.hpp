#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "supercong/congruence.hpp"

namespace supercong {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Json, Csv };

/// Flat "key = value" settings; '#' starts a comment.
struct RunConfig {
  int guard_digits = 4;
  std::uint64_t desk_cap = kDefaultDeskCap;
  int workers = 1;
  std::string output_path;  // empty: standard output
  OutputFormat output_format = OutputFormat::Json;
  std::vector<std::string> certificate_paths;
  long certificate_grid = 25;
  std::vector<TheoremCase> cases;  // empty: the default battery

  /// Sets one key from its textual value; throws ConfigError.
  void set(const std::string& key, const std::string& value);
  /// Throws ConfigError when an invariant is violated.
  void validate() const;
  EngineConfig engine() const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// "TAG:p" or "TAG:p:r", comma separated.
std::vector<TheoremCase> parse_case_list(const std::string& text);

/// Every asserted case of the verification battery plus the informational
/// conjectural branches.
std::vector<TheoremCase> default_battery();

/// A failure that counts against the run: not skipped, not informational,
/// and either violated or errored.
bool asserted_failure(const CongruenceReport& r);

nlohmann::ordered_json to_json(const CongruenceReport& r, bool timing = true);
std::string render_json(const std::vector<CongruenceReport>& reports, bool timing = true);
std::string render_csv(const std::vector<CongruenceReport>& reports, bool timing = true);
std::string render(const std::vector<CongruenceReport>& reports, OutputFormat format,
                   bool timing = true);

/// One line, e.g. "THM_1_1 p=3 r=3: holds mod 3^4 (lhs 3^3 * 2, rhs 3^3 * 2)".
std::string summary_line(const CongruenceReport& r);

}  // namespace supercong
