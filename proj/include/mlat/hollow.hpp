#pragma once

#include <optional>
#include <vector>

#include "mlat/core.hpp"

namespace mlat {

// a below a binary join forces a below one of the two parts. Bottom
// satisfies this trivially.
bool is_strongly_hollow(const MultLattice& L, ElementId a);

// The elements a is not below.
std::vector<ElementId> missed_set(const MultLattice& L, ElementId a);

// Join of missed_set(a). For bottom the set is empty and kappa is
// bottom.
ElementId kappa(const MultLattice& L, ElementId a);

// residual(kappa(a), a).
ElementId kappa_residual(const MultLattice& L, ElementId a);

// The binary condition extended to arbitrary nonempty families. For a
// non-bottom element this is equivalent to a not being below kappa(a):
// if a avoids kappa(a) it avoids every join of missed elements, and
// conversely the missed set itself is a family witnessing failure.
// Bottom is below every member of any nonempty family, so it counts.
bool is_completely_strongly_hollow(const MultLattice& L, ElementId a);

std::vector<ElementId> strongly_hollow_elements(const MultLattice& L);
std::vector<ElementId> completely_strongly_hollow_elements(
    const MultLattice& L);

struct HollowProfile {
  ElementId id = 0;
  bool strongly_hollow = false;
  bool completely_strongly_hollow = false;
  ElementId kappa = 0;
  ElementId kappa_residual = 0;
  std::vector<ElementId> t_set;
};

// Profiles one element. kappa is always the join of t_set. When a is
// strongly hollow and non-bottom the join of the missed set must
// itself be missed; a disagreement means the engine is inconsistent
// and raises logic_error.
HollowProfile hollow_profile(const MultLattice& L, ElementId a);

// Maximal members of {k <= x | k strongly hollow}. Never empty, since
// bottom is strongly hollow; x = bottom yields {bottom}.
std::vector<ElementId> maximal_hollow_below(const MultLattice& L, ElementId x);

// x is a join of completely strongly hollow elements below it. The
// candidates below x never join above x, so this reduces to one join.
bool is_representable(const MultLattice& L, ElementId x);

// The maximal completely strongly hollow elements below x, which form
// the unique minimal representation when x is representable at all.
// Bottom gets the empty family. nullopt when x is not representable.
std::optional<std::vector<ElementId>> minimal_representation(
    const MultLattice& L, ElementId x);

// A family of non-bottom completely strongly hollow elements joining
// to the target. minimal means no part sits below the join of the
// others, and such a family is unique per target.
struct Representation {
  ElementId target = 0;
  std::vector<ElementId> parts;
  bool minimal = false;
};

// Families of non-bottom completely strongly hollow elements joining
// to x, in increasing subset order; only the minimal one when
// minimal_only is set. Empty when x is not representable. Enumerates
// subsets while the candidate pool is small (at most max_pool) and
// otherwise falls back to the single canonical minimal family. Raises
// logic_error if the enumeration ever finds two distinct minimal
// families, which no valid lattice can produce.
std::vector<Representation> representations(const MultLattice& L, ElementId x,
                                            bool minimal_only = true,
                                            int max_pool = 20);

}  // namespace mlat
