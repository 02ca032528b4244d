#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsk/normal_surface.hpp"
#include "nsk/triangulation.hpp"

namespace nsk {

enum class Relation { Equal, AtMost };
enum class LineClass { Unconditional, Conditional };

/// One line of the inequality ledger, `lhs (= | <=) rhs`.
struct LedgerLine {
  std::string id;  // e.g. "2k = g + b"
  Relation relation = Relation::AtMost;
  LineClass line_class = LineClass::Unconditional;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool pass = true;

  friend bool operator==(const LedgerLine&, const LedgerLine&) = default;
};

struct ReportFlag {
  std::string kind;  // parallel-surfaces, vertex-link-parallel, claim-two-violation
  std::size_t index = 0;  // cut component or remnant
  std::string detail;

  friend bool operator==(const ReportFlag&, const ReportFlag&) = default;
};

struct Assumption {
  std::string name;
  bool verified = false;

  friend bool operator==(const Assumption&, const Assumption&) = default;
};

struct FinitenessReport {
  std::int64_t t = 0;
  std::int64_t v = 0;
  std::int64_t e = 0;
  std::int64_t e_n = 0;
  std::int64_t rank_h1 = 0;
  std::int64_t k = 0;
  std::int64_t g = 0;
  std::int64_t b = 0;
  std::int64_t s = 0;
  std::int64_t q = 0;

  std::vector<std::int64_t> bad_remnant_disks;  // one entry per bad remnant
  std::optional<std::int64_t> audit_minimum;
  bool audit_passed = true;

  std::vector<ReportFlag> flags;
  std::vector<LedgerLine> ledger;
  std::vector<Assumption> assumptions;

  /// Audit passed and g <= rank_h1, so the chain forces k <= 2t.
  bool chain_closed = false;
  bool bound_holds = false;  // k <= 2t on this instance

  bool unconditional_pass() const;
  bool conditional_pass() const;
  /// 0 all lines pass, 2 a conditional line fails, 1 an unconditional line fails.
  int exit_code() const;

  friend bool operator==(const FinitenessReport&, const FinitenessReport&) = default;
};

/// Rebuilds the ledger from the stored quantities.
std::vector<LedgerLine> build_ledger(const FinitenessReport& r);

/// Full pipeline on one surface vector. Throws Error(NonOrientable) for a
/// non-orientable M or surface component, Error(NonManifold) for reversed
/// edges, Error(Coordinates) for inadmissible or non-matching x.
FinitenessReport certify(const Triangulation& tri, const NormalCoordinates& x);
/// A collection is cut along its Haken sum (Error(Incompatible) on clashing quads).
FinitenessReport certify(const Triangulation& tri, const std::vector<NormalCoordinates>& collection);

const char* to_string(Relation r);
const char* to_string(LineClass c);

void to_json(nlohmann::json& j, const LedgerLine& l);
void from_json(const nlohmann::json& j, LedgerLine& l);
void to_json(nlohmann::json& j, const ReportFlag& f);
void from_json(const nlohmann::json& j, ReportFlag& f);
void to_json(nlohmann::json& j, const FinitenessReport& r);
void from_json(const nlohmann::json& j, FinitenessReport& r);

}  // namespace nsk
