#pragma once

// Parameter-grid sweeps: formula identities, bound audits and theorem
// verification, with machine-readable reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "signedfam/core.hpp"
#include "signedfam/search.hpp"

namespace signedfam::harness {

inline constexpr int kReportSchemaVersion = 1;

/// A comma-separated list of items `e` or `e..e`, where `e` is an integer
/// or a variable with an optional offset (`t+2`, `r-1`, `g+5`).
/// Variables: n, r, t, and g = ceil(max{2, g(n,r,t)}) for k.
class RangeExpr {
public:
  RangeExpr() = default;
  /// ParameterError on syntax errors.
  explicit RangeExpr(std::string text);

  const std::string& text() const noexcept { return text_; }
  /// Variables referenced (subset of "nrtg").
  std::string variables() const;

  struct Env {
    std::optional<long> n, r, t, g;
  };
  /// Sorted, deduplicated values. ParameterError when a referenced variable is unbound.
  std::vector<int> expand(const Env& env) const;

private:
  struct Term {
    char var = 0; // 0 for a plain integer
    long offset = 0;
  };
  struct Item {
    Term lo, hi;
  };
  std::string text_;
  std::vector<Item> items_;
};

enum class Mode { enumeration, arithmetic };

struct GridSpec {
  RangeExpr n{"3"}, r{"2"}, k{"2"}, t{"1"};
  Mode mode = Mode::enumeration;
  SearchLimits limits;
  /// When false, cells below the alphabet threshold are still enumerated and
  /// described (never counted as pass or fail).
  bool require_k_threshold = true;
  std::uint64_t seed = 1;
  /// Worker threads; 0 means hardware concurrency.
  unsigned jobs = 0;
};

/// One grid point. params is empty when the combination is invalid.
struct Cell {
  int n = 0, r = 0, k = 0, t = 0;
  std::optional<Params> params;
  std::string invalid_reason;
};

/// Expands the grid; ParameterError when the variable references are cyclic.
std::vector<Cell> expand_grid(const GridSpec& grid);

enum class Status { pass, fail, skip };
std::string to_string(Status s);

struct VerdictRecord {
  std::string check;
  Cell cell;
  std::string expected;
  /// Where the expectation comes from: "theorem", "lemma", "identity", "oracle", "n/a".
  std::string provenance;
  std::string observed;
  Status status = Status::skip;
  double runtime_s = 0;
  /// Reproduction data for failures (family JSON or arithmetic values), details otherwise.
  nlohmann::json witness = nlohmann::json::object();
};

nlohmann::json to_json(const VerdictRecord& rec);

struct Report {
  std::string command;
  std::vector<VerdictRecord> records;

  std::size_t count(Status s) const;
  /// Nonzero iff any record failed.
  int exit_code() const { return count(Status::fail) ? 1 : 0; }
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

// Per-cell checks. Each returns exactly one record for the cell.
VerdictRecord formulas_cell(const Cell& cell, const GridSpec& grid);
VerdictRecord audit_bounds_cell(const Cell& cell, const GridSpec& grid);
VerdictRecord theorem1_cell(const Cell& cell, const GridSpec& grid);
VerdictRecord theorem2_cell(const Cell& cell, const GridSpec& grid);

Report run_formulas(const GridSpec& grid);
Report run_audit_bounds(const GridSpec& grid);
Report run_theorem1(const GridSpec& grid);
Report run_theorem2(const GridSpec& grid);

/// Census row for the enumerate command.
struct CensusRow {
  Cell cell;
  std::size_t total = 0, trivial = 0, nontrivial = 0, max_nontrivial_size = 0;
  bool truncated = false;
  std::string note;
};
std::string census_csv(const std::vector<CensusRow>& rows);

} // namespace signedfam::harness
