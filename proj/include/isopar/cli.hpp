#ifndef ISOPAR_CLI_HPP
#define ISOPAR_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "isopar/io.hpp"

namespace isopar {

enum class Status { Pass, Fail, Skip };
std::string to_string(Status s);

struct CheckRecord {
  std::string id;
  Status status = Status::Pass;
  std::string detail;
  double wall_ms = 0.0;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> checks;
  std::uint64_t seed = 0;
  /// Pencil scan summaries, one per scanned example.
  std::vector<json> scans;

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t counted() const;  ///< non-skipped checks
  bool ok() const { return failed() == 0; }
  int exit_code() const { return ok() ? 0 : 1; }

  json to_json(bool with_timing = true) const;
  static Report from_json(const json& j);

  friend bool operator==(const Report&, const Report&) = default;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cm", "frames", "blocks", "mirror", "thirdform",
                                              "pq", "circ", "pencil", "all"};
  return names;
}

/// Raised for unknown suite or example names (exit status 2 in the tool).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// example is "h45", "fkm69" or "both"; "all" always runs both examples.
Report run_suite(const std::string& name, const std::string& example, std::uint64_t seed,
                 std::size_t pencil_samples = 1000);

enum class Format { Text, Json };
Format parse_format(const std::string& s);

/// Text: one line per check, then "OK: N/N checks passed" or "FAILED: ...".
void emit_report(const Report& r, Format format, std::ostream& os, bool with_timing = true);

/// Seed from flag, else ISOPAR_SEED, else 0.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

}  // namespace isopar

#endif  // ISOPAR_CLI_HPP
