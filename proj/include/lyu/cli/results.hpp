#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lyu/algebra/field.hpp"
#include "lyu/ideal/ideal.hpp"
#include "lyu/invariants/invariants.hpp"
#include "lyu/resolution/betti.hpp"

namespace lyu::cli {

enum class Invariant { Depth, Betti, Table, Ccm, Covers, All };
enum class OutputFormat { Ascii, Json, Latex };

Invariant parse_invariant(const std::string& s);
std::string to_string(Invariant inv);
OutputFormat parse_format(const std::string& s);

struct DepthResult {
  int height = 0;
  int dim = 0;
  int depth_lc = 0;
  int depth_ab = 0;
  bool cohen_macaulay = false;
  bool operator==(const DepthResult&) const = default;
};

struct BettiResult {
  BettiTable betti;
  HilbertSeries hilbert;
  bool operator==(const BettiResult&) const = default;
};

struct TableResult {
  LyubeznikTable table;
  std::vector<long> last_column;
  bool valid = false;
  std::vector<std::string> validation_failures;
  bool operator==(const TableResult&) const = default;
};

struct CcmResult {
  bool canonically_cm = false;
  int canonical_depth = 0;
  int canonical_dim = 0;
  bool operator==(const CcmResult&) const = default;
};

struct CoversResult {
  std::vector<std::vector<int>> minimal_primes;  // 1-based variable indices
  bool operator==(const CoversResult&) const = default;
};

struct InvariantResults {
  std::optional<DepthResult> depth;
  std::optional<BettiResult> betti;
  std::optional<TableResult> table;
  std::optional<CcmResult> ccm;
  std::optional<CoversResult> covers;
  bool operator==(const InvariantResults&) const = default;
};

struct JobResult {
  MonomialIdeal ideal;
  FieldSpec field;
  bool unmixed = false;
  InvariantResults invariants;
  bool operator==(const JobResult&) const = default;
};

/// Computes the selected invariants of `ideal` (already unmixed if requested).
InvariantResults compute_invariants(const MonomialIdeal& ideal, const FieldSpec& field, Invariant which);

nlohmann::json to_json(const InvariantResults& r);
InvariantResults invariants_from_json(const nlohmann::json& j);

/// Top-level structured document: {"context", "ideal", "field", "invariants"}.
nlohmann::json to_json(const JobResult& r);
JobResult job_result_from_json(const nlohmann::json& j);

std::string format_ascii(const JobResult& r);
std::string format_latex(const JobResult& r);

}  // namespace lyu::cli
