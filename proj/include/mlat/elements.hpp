#pragma once

#include <vector>

#include "mlat/core.hpp"

namespace mlat {

// Element predicates. Definitions quantify over the whole lattice, so
// everything here is a finite scan against the tables.

bool is_maximal(const MultLattice& L, ElementId a);
bool is_minimal(const MultLattice& L, ElementId a);
bool is_nilpotent(const MultLattice& L, ElementId a);
bool is_idempotent(const MultLattice& L, ElementId a);

// c with meet(a, c) = bottom and join(a, c) = top.
std::vector<ElementId> complements(const MultLattice& L, ElementId a);
bool is_complemented(const MultLattice& L, ElementId a);

// Median identity against every pair:
// (a^x)v(x^y)v(y^a) = (avx)^(xvy)^(yva).
bool is_neutral(const MultLattice& L, ElementId a);

// No two non-bottom elements below a meet to bottom.
bool is_uniform(const MultLattice& L, ElementId a);

// meet(a, mul(b, e)) = mul(meet(residual(a, e), b), e) for all a, b.
bool is_meet_principal(const MultLattice& L, ElementId e);
// join(a, residual(b, e)) = residual(join(mul(a, e), b), e) for all a, b.
bool is_join_principal(const MultLattice& L, ElementId e);
bool is_principal(const MultLattice& L, ElementId e);

// The b = top and b = bottom instances of the two above.
bool is_weak_meet_principal(const MultLattice& L, ElementId e);
bool is_weak_join_principal(const MultLattice& L, ElementId e);
bool is_weak_principal(const MultLattice& L, ElementId e);

// mul(a, b) = mul(a, c) only when b = c.
bool has_cancellation(const MultLattice& L, ElementId a);

// meet(a, b) <= i forces a <= i or b <= i.
bool is_strongly_irreducible(const MultLattice& L, ElementId i);

// The same for meets of arbitrary nonempty families. Checked through
// the complement criterion: with U = {s : s not below i}, either U is
// empty or its meet stays outside the down set of i. Any family meeting
// into the down set of i while avoiding it would sit inside U, whose
// meet is below every candidate meet, so the criterion is exact.
bool is_completely_strongly_irreducible(const MultLattice& L, ElementId i);

// Non-bottom idempotent that is not the join of two non-bottom
// orthogonal idempotents.
bool is_primitive_idempotent(const MultLattice& L, ElementId e);

struct ElementProfile {
  ElementId id = 0;
  std::string name;
  bool prime = false;
  bool maximal = false;
  bool minimal = false;
  bool nilpotent = false;
  bool idempotent = false;
  bool complemented = false;
  bool neutral = false;
  bool uniform = false;
  bool meet_principal = false;
  bool join_principal = false;
  bool principal = false;
  bool weak_meet_principal = false;
  bool weak_join_principal = false;
  bool weak_principal = false;
  bool cancellation = false;
  bool strongly_irreducible = false;
  bool completely_strongly_irreducible = false;
  bool primitive_idempotent = false;
  std::vector<ElementId> complement_list;
};

ElementProfile element_profile(const MultLattice& L, ElementId a);
std::vector<ElementProfile> element_profiles(const MultLattice& L);

std::vector<ElementId> maximal_elements(const MultLattice& L);
std::vector<ElementId> minimal_elements(const MultLattice& L);
std::vector<ElementId> principal_elements(const MultLattice& L);

// Meet of the maximal elements; top when there are none.
ElementId jacobson_radical(const MultLattice& L);

// Join of the atoms.
ElementId socle(const MultLattice& L);

// Every x equals the join of the generators below it.
bool is_generated_by(const MultLattice& L, std::span<const ElementId> gens);

bool is_distributive_lattice(const MultLattice& L);
bool is_chain(const MultLattice& L);

struct LatticeProfileOptions {
  // Treat top as the empty product when closing the prime products.
  // Applies to the zpi, pi_lattice and ufd flags only.
  bool empty_product_is_top = true;
};

// Lattice level classification. semi_local and noether are constant
// true here: a finite lattice has finitely many maximals and no
// infinite ascending chains. They are kept as fields so the report
// vocabulary is complete. The one element lattice counts as
// quasi_local; it has no maximal elements at all, and the convention
// keeps quotients by the top element inside the quasi_local class.
struct LatticeProfile {
  int maximal_count = 0;
  ElementId jacobson = 0;
  ElementId nilradical = 0;
  ElementId socle = 0;
  std::vector<ElementId> spec_set;
  std::vector<ElementId> minimal_primes;
  std::vector<ElementId> max_set;
  std::vector<ElementId> atoms;
  bool quasi_local = false;
  bool semi_local = true;
  bool semi_simple = false;
  bool reduced = false;
  bool domain = false;
  bool gelfand = false;
  bool distributive = false;
  bool boolean_algebra = false;
  bool chain = false;
  bool noether = true;
  bool principally_generated = false;
  bool weak_r_lattice = false;
  bool principal_element_lattice = false;
  bool prufer = false;
  bool zpi = false;
  bool pi_lattice = false;
  bool ufd = false;
  bool special_pel = false;
  bool i0 = false;
};

LatticeProfile lattice_profile(const MultLattice& L,
                               const LatticeProfileOptions& opt = {});

// Key sorted, one predicate per line; stable across runs.
std::string to_text(const MultLattice& L, const ElementProfile& p);
std::string to_text(const MultLattice& L, const LatticeProfile& p);

}  // namespace mlat
