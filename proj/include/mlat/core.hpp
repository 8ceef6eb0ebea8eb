#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mlat {

using ElementId = int;

// Raised for malformed input: unreadable files, non-lattice orders,
// ids out of range, inconsistent construction arguments.
class StructureError : public std::runtime_error {
 public:
  explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

// A finite bounded lattice carrying a commutative monoid multiplication
// whose identity is the top element. All tables are dense n*n arrays
// indexed by a*n + b. Joins and meets of arbitrary subsets exist by
// finiteness, so the structure is complete.
struct MultLattice {
  std::string name;
  int n = 0;
  ElementId bottom = 0;
  ElementId top = 0;
  std::vector<std::string> names;
  std::vector<std::uint8_t> leq_;
  std::vector<ElementId> join_;
  std::vector<ElementId> meet_;
  std::vector<ElementId> mul_;

  bool leq(ElementId a, ElementId b) const { return leq_[a * n + b] != 0; }
  bool lt(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  ElementId join(ElementId a, ElementId b) const { return join_[a * n + b]; }
  ElementId meet(ElementId a, ElementId b) const { return meet_[a * n + b]; }
  ElementId mul(ElementId a, ElementId b) const { return mul_[a * n + b]; }

  const std::string& name_of(ElementId a) const { return names[a]; }

  // Derives join and meet tables from a reflexive partial order given as
  // an n*n incidence matrix, locates bottom and top, and attaches the
  // multiplication table. Throws StructureError when the order is not a
  // lattice or the inputs are malformed. Multiplication axioms are not
  // checked here; validate() reports on those.
  static MultLattice from_order(std::string name, int n,
                                const std::vector<std::uint8_t>& leq,
                                const std::vector<ElementId>& mul,
                                std::vector<std::string> names);
};

// One failing instance of a named axiom. `where` holds the element ids
// the axiom was instantiated with, in the order the axiom quantifies.
struct AxiomViolation {
  std::string axiom;
  std::vector<ElementId> where;
  std::string detail;
};

// Per-axiom tally: instances examined, instances violated, and the first
// violating instance if any.
struct AxiomCheck {
  std::string axiom;
  long long checked = 0;
  long long failed = 0;
  std::optional<AxiomViolation> first;
};

struct AxiomReport {
  bool ok = true;
  std::vector<AxiomCheck> checks;

  const AxiomCheck* find(std::string_view axiom) const;
  std::vector<AxiomViolation> violations() const;
};

// Checks every axiom instance over the raw tables. Axiom names are
// stable strings: leq_reflexive, leq_antisymmetric, leq_transitive,
// bottom_least, top_greatest, join_table, meet_table, mul_identity,
// mul_commutative, mul_associative, mul_distributive, mul_bottom,
// mul_below_meet. Distributivity is checked over binary joins, which
// suffices for arbitrary joins in a finite lattice. mul_bottom and
// mul_below_meet are consequences of the others but are reported
// separately because they localize failures well.
AxiomReport validate(const MultLattice& L);

// Re-evaluates a reported instance against a lattice. Returns true when
// the instance still violates its axiom. Throws StructureError for an
// unknown axiom name or ids out of range.
bool replay_violation(const MultLattice& L, const AxiomViolation& v);

// Join and meet over element families; the empty family yields bottom
// and top respectively.
ElementId join_all(const MultLattice& L, std::span<const ElementId> xs);
ElementId meet_all(const MultLattice& L, std::span<const ElementId> xs);

// a^k for k >= 1.
ElementId power(const MultLattice& L, ElementId a, int k);

// Largest x with mul(x, b) <= a, computed as the join of all such x.
ElementId residual(const MultLattice& L, ElementId a, ElementId b);

// residual value plus whether the value itself satisfies mul(value, b)
// <= a. On a lattice passing validate() the bound is always attained;
// attains can be false only when distributivity fails.
struct ResidualDetail {
  ElementId value;
  bool attains;
};
ResidualDetail residual_detail(const MultLattice& L, ElementId a, ElementId b);

// p < top and mul(x, y) <= p implies x <= p or y <= p.
bool is_prime(const MultLattice& L, ElementId p);
std::vector<ElementId> prime_elements(const MultLattice& L);

// Elements with a^k = bottom for some k. Powers descend, so k <= n
// always suffices.
std::vector<ElementId> nilpotent_elements(const MultLattice& L);

// Join of the nilpotents. Cross-checked against the meet of the prime
// elements; the two agree on every lattice passing validate(), and a
// mismatch throws std::logic_error.
ElementId nilradical(const MultLattice& L);

// Every element of a finite lattice is compact: any covering family
// contains a finite subfamily with the same join, and here every family
// is finite.
inline bool is_compact(const MultLattice&, ElementId) { return true; }

// Resolves an element token: exact name match first, then a plain
// integer is taken as an element id.
std::optional<ElementId> resolve_element(const MultLattice& L,
                                         std::string_view token);

// Covering pairs (a, b) with a < b and nothing strictly between, sorted.
std::vector<std::pair<ElementId, ElementId>> cover_pairs(const MultLattice& L);

// Text form. Lines: lattice <name>, n <count>, bottom <id>, top <id>,
// one name line per element, cover lines sorted, then mul i j k for all
// i <= j. Blank lines and lines starting with # are ignored on input.
// The writer emits a canonical ordering, so save/load/save is stable.
MultLattice from_text(const std::string& text, const std::string& origin = "<text>");
MultLattice load_file(const std::string& path);
std::string to_text(const MultLattice& L);
void save_file(const MultLattice& L, const std::string& path);

}  // namespace mlat
