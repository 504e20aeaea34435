#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace peo::tools {

enum ExitCode : int {
  kPositive = 0,
  kNegative = 1,
  kUsage = 2,
  kInternal = 3,
};

enum class InputFormat { matrix, graph };

struct CliConfig {
  std::string subcommand;
  std::string input;
  std::optional<InputFormat> format;  // command default when unset
  bool machine = false;
  std::optional<std::size_t> max_len;  // walk oracle cap, default 2n + 2
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::size_t k_max = 4;
  std::string order;
  std::string order_class = "peo";
};

int cmd_order(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_classify(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_power(const CliConfig& cfg, std::ostream& out, std::ostream& err);
/// Randomized cross-check of greedy elimination against the certificate
/// extractor; exit 3 on any disagreement.
int cmd_selftest(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.subcommand and maps exceptions to exit codes.
int dispatch(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line entry point, argv[0] included.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace peo::tools
