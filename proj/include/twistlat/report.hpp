#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistlat/serialize.hpp"

namespace twistlat {

inline constexpr const char* kToolkitVersion = "0.1.0";

enum class OutputFormat { text, json };

struct RunConfig {
  std::string subcommand;
  long d = 4;
  long m = 1;
  long n = 3;
  long search_bound = 30;
  long max_modulus = 64;
  OutputFormat format = OutputFormat::text;
  bool timing = false;
  unsigned workers = 1;
};

// One reproduced number: expected and actual are exact renderings.
struct PaperCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  friend bool operator==(const PaperCheck&, const PaperCheck&) = default;
};

// Verdict for another representative (m, n) of the same congruence classes.
struct RepresentativeRun {
  long m = 0;
  long n = 0;
  GramMatrix gram;
  ObstructionVerdict verdict;
  friend bool operator==(const RepresentativeRun&, const RepresentativeRun&) = default;
};

struct Report {
  std::string version = kToolkitVersion;
  long d = 4;
  long m = 1;
  long n = 3;
  long search_bound = 30;
  long max_modulus = 64;
  HodgeDiamond hodge;
  GramMatrix gram;
  GrrLedger grr;
  ObstructionVerdict verdict;
  std::vector<RepresentativeRun> representatives;
  std::vector<PaperCheck> checks;
  // Only emitted when requested; it is the one nondeterministic field.
  std::optional<long> wall_clock_ms;

  bool all_pass() const;
  friend bool operator==(const Report&, const Report&) = default;
};

// Runs the full chain for the branch-octic double plane with (m, n) = (1, 3),
// plus (3, 7) to show the result depends only on the congruence classes.
Report build_paper_report(const RunConfig& config);

Json to_json(const Report& report);
Report report_from_json(const Json& j);

// Deterministic rendering; JSON uses fixed key order and two-space indent.
std::string emit_report(const Report& report, OutputFormat format);

}  // namespace twistlat
