#ifndef WEILCENSUS_CLI_HPP
#define WEILCENSUS_CLI_HPP

#include "weilcensus/common.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace weilcensus {

using Json = nlohmann::ordered_json;

enum class Command { kWeilEnum, kCensus, kDensity, kLowerBound, kBoundsCheck };

std::string command_name(Command c);
std::optional<Command> parse_command(const std::string& name);

struct RunConfig {
  Command command = Command::kCensus;
  std::int64_t p = 0;
  int g = 0;  // 0: unset
  std::string eps;  // empty: command default; density accepts a comma-separated list
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string output;  // empty: no report file
  std::string cache;   // empty: in-memory cache only
  std::string check = "all";
  std::int64_t lmax = 31;
  unsigned nmax = 6;
  unsigned dmax = 6;
  bool timing = false;
};

/// Invalid command-line input (exit status 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Persistent class-number cache: text lines "D h" sorted by |D|.
///
/// Entries read from disk are checked against the conductor formula; bad or
/// unparsable lines are dropped with a warning and recomputed on demand. New
/// values come from the form count and are cross-checked before being stored.
class ClassNumberCache {
 public:
  explicit ClassNumberCache(std::filesystem::path path = {});

  std::int64_t get_or_compute(std::int64_t D);
  /// Rewrites the file (temp file + rename) if anything changed.
  void flush();

  std::vector<std::string> warnings() const;
  std::size_t computed() const;
  std::size_t size() const;

 private:
  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::map<std::int64_t, std::int64_t> entries_;  // keyed by |D|
  std::vector<std::string> warnings_;
  std::size_t computed_ = 0;
  bool dirty_ = false;
};

/// Exact integer as a JSON number when it fits in 64 bits, else a decimal string.
Json json_integer(const Integer& v);
Json json_rational(const Rational& v);

struct RunOutcome {
  int status = 0;
  Json report;
  std::string table;
};

/// Runs the command and builds the report; does not touch the report file.
RunOutcome execute(const RunConfig& config, ClassNumberCache& cache);

/// Full run: cache setup, execution, report file, table on `out`,
/// diagnostics on `err`. Returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs. WEILCENSUS_CACHE overrides --cache.
int cli_main(int argc, char** argv);

}  // namespace weilcensus

#endif
