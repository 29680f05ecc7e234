#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "povswb/order/closure.hpp"

namespace povswb::wbcli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kUsageError = 1, kPropertyViolation = 2, kCapacityError = 3 };

/// Largest dimension search accepts.
inline constexpr std::size_t kSearchDimCap = 4;

struct Options {
  std::string command;
  std::string file_path;
  /// Contents of file_path; embedded verbatim in the report.
  std::string file_text;
  std::string map;
  std::size_t dim = 2;
  std::size_t cases = 100;
  std::uint64_t seed = 1;
  std::size_t cap = order::kDefaultCap;
  std::string format = "text";
};

struct Outcome {
  int exit_code = kOk;
  Json report;
  /// The report in the requested format, newline terminated.
  std::string rendered;
};

/// Runs one command. Parse errors and bad options come back as
/// kUsageError with the message in the report; nothing is thrown.
Outcome run(const Options& options);

/// Indented key/value rendering of a report.
std::string render_text(const Json& report);

}  // namespace povswb::wbcli
