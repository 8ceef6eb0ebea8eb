#pragma once

#include <span>
#include <vector>

#include "mlat/core.hpp"

namespace mlat {

// The interval [i, top] with product (a*b) v i. Elements keep their
// base names; the lattice is named base/i. forward maps every base
// element x to the class of x v i.
struct QuotientResult {
  MultLattice lattice;
  std::vector<ElementId> forward;
};
QuotientResult quotient(const MultLattice& L, ElementId i);

// Saturation with respect to a multiplicatively closed set S holding
// top: sat(a) joins every x with x*s <= a for some s in S. The carrier
// of the localized lattice is the set of saturation fixed points with
// meets inherited, joins and products saturated afterwards.
//
// Preconditions (top in S, closure under products) and the closure
// properties of sat raise StructureError with a witness when violated;
// on a lattice passing validate() the properties always hold. The
// constructed lattice is validated before it is returned.
struct LocalizationResult {
  MultLattice lattice;
  std::vector<ElementId> saturation;  // base id -> saturated base id
  std::vector<ElementId> forward;     // base id -> localized id
};
LocalizationResult localize(const MultLattice& L,
                            std::span<const ElementId> S);

// Localization at the complement of a prime: S = {s : s not below q}.
// q must be prime; primeness is exactly what keeps S closed.
LocalizationResult localize_at_prime(const MultLattice& L, ElementId q);

// Componentwise order and product on pairs. Pair (a, b) gets the id
// a * right_n + b and the name (name_a,name_b).
struct ProductResult {
  MultLattice lattice;
  int left_n = 0;
  int right_n = 0;
  ElementId pair(ElementId a, ElementId b) const { return a * right_n + b; }
  ElementId left_of(ElementId x) const { return x / right_n; }
  ElementId right_of(ElementId x) const { return x % right_n; }
};
ProductResult product(const MultLattice& A, const MultLattice& B);

// A per-element mapping between two lattices. The lattices are held by
// reference and must outlive the map.
struct ElementMap {
  const MultLattice* source = nullptr;
  const MultLattice* target = nullptr;
  std::vector<ElementId> forward;
};

struct TransferCheck {
  enum class Status { holds, violated, not_applicable };
  Status status = Status::holds;
  ElementId witness = -1;
  std::string detail;
};

// For an adjoint pair f(x) <= y iff x <= u(y) whose right side u turns
// binary joins into joins, f carries strongly hollow elements to
// strongly hollow elements. The adjunction law is checked over all
// pairs first and a failure raises StructureError; a u that does not
// preserve binary joins makes the conclusion unavailable rather than
// false, reported as not_applicable. Otherwise every hollow x is
// checked and the first x with f(x) not hollow is the witness.
TransferCheck check_adjunction_transfer(const ElementMap& f,
                                        const ElementMap& u);

}  // namespace mlat
