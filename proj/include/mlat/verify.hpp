#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlat/core.hpp"
#include "mlat/families.hpp"

namespace mlat {

// Outcome of one check on one lattice. Checks marked informational
// report through the noted_* pair instead; those rows never affect the
// pass verdict and exist to surface known statement-level discrepancies
// alongside the result the proof actually supports.
enum class CheckStatus {
  holds,
  violated,
  hypothesis_unmet,
  noted_holds,
  noted_violated,
};

std::string to_string(CheckStatus s);

// Everything needed to reproduce one violation: the check, the lattice
// as a regenerable family spec, and the elements the failing instance
// bound, stored by name so relabeled tables are detected as stale.
struct Witness {
  std::string check_id;
  std::string lattice_name;
  std::string family;
  std::vector<std::pair<std::string, std::string>> bindings;
  std::string detail;
};

struct CheckResult {
  std::string check_id;
  std::string lattice_name;
  std::string family;
  std::uint64_t lattice_digest = 0;
  CheckStatus status = CheckStatus::holds;
  std::optional<Witness> witness;
  std::string detail;
};

struct CheckInfo {
  std::string id;
  std::string summary;
  bool informational = false;
};

// The registry in its stable order. Ids are stable keys; each check
// evaluates one implication or property from first definitions only.
std::vector<CheckInfo> registered_checks();

// Expands tokens to registry ids: "all", an exact id, or a prefix that
// selects every direction of one result (e.g. "T2.25"). Unknown tokens
// raise StructureError. Output keeps registry order without duplicates.
std::vector<std::string> resolve_check_ids(const std::vector<std::string>& tokens);

struct SuiteReport {
  std::string corpus_description;
  std::vector<std::string> check_ids;
  // Sorted by (check id, lattice name, family); one row per pair.
  std::vector<CheckResult> results;
  long long wall_clock_ms = 0;

  std::vector<const CheckResult*> violations() const;
};

// Evaluates every resolved check on every corpus lattice. Corpus specs
// are generated up front, so malformed specs fail before any check
// runs. Worker count changes the schedule, never the report bytes.
SuiteReport run_suite(const std::vector<FamilySpec>& corpus,
                      const std::vector<std::string>& checks,
                      int workers = 1);

// Regenerates the witness lattice and re-runs its check. True exactly
// when the same violation, with the same bindings, shows up again.
// StructureError when the family no longer parses or generates, the
// check id is unknown, or a bound element name no longer resolves.
bool replay(const Witness& w);

// Expected-discrepancy allowlist. Lines are `check_id cf:<16 hex>`
// with # comments; the hex is the canonical-form digest of the lattice,
// so one entry covers every isomorphic copy in the corpus.
struct Allowlist {
  std::vector<std::pair<std::string, std::uint64_t>> entries;
  bool allows(const std::string& check_id, std::uint64_t digest) const;
};

Allowlist parse_allowlist(const std::string& text);
Allowlist load_allowlist(const std::string& path);

// True when every violated row is covered by the allowlist.
bool suite_passes(const SuiteReport& report, const Allowlist& allow);

// Human-readable report: corpus line, per-check tallies in registry
// order, the violation list with allowlisted rows marked, and a
// trailing wall-clock comment. Identical runs differ only in that
// final line.
std::string to_text(const SuiteReport& report, const Allowlist& allow);

// One line per (check, lattice): id, lattice, status, then witness
// bindings as role=name pairs and cf=<digest> on violated rows. Fully
// deterministic, no timing.
std::string to_machine(const SuiteReport& report);

}  // namespace mlat
