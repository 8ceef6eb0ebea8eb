#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mlat/core.hpp"

namespace mlat {

// Total byte encoding of (n, order, multiplication) minimized over the
// relabelings consistent with an iterated partition refinement, which
// makes equality of forms the same relation as isomorphism. Forms of
// different sizes never collide because the size leads the encoding.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  bool operator==(const CanonicalForm&) const = default;
  bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }
};

// Capped at 64 elements; StructureError beyond that.
CanonicalForm canonical_form(const MultLattice& L);

// Same minimization over the order alone, ignoring multiplication.
CanonicalForm canonical_order_form(const MultLattice& L);

// FNV-1a over the form bytes, printable as a compact fingerprint.
std::uint64_t digest(const CanonicalForm& form);
std::uint64_t canonical_digest(const MultLattice& L);

bool isomorphic(const MultLattice& A, const MultLattice& B);

// Transports every table along a seeded random permutation. Element
// names travel with their elements; the lattice name stays.
MultLattice relabel(const MultLattice& L, std::uint64_t seed);

// A lattice order with its derived tables but no multiplication.
struct LatticeOrder {
  int n = 0;
  ElementId bottom = 0;
  ElementId top = 0;
  std::vector<std::uint8_t> leq;
  std::vector<ElementId> join;
  std::vector<ElementId> meet;
  bool le(ElementId a, ElementId b) const { return leq[a * n + b] != 0; }
};

// All lattice orders on n elements up to isomorphism, built by adding
// one maximal element at a time and pruned by meet uniqueness and
// upper-bound feasibility. Deduplicated by canonical form and sorted
// by it. Hard cap n <= 7.
std::vector<LatticeOrder> enumerate_lattices(int n);

// All multiplications turning the order into a valid lattice, up to
// isomorphism, sorted by canonical form. Backtracks over the upper
// triangle with the identity and annihilator rows fixed.
std::vector<MultLattice> enumerate_mult_structures(const LatticeOrder& order);

// Every multiplicative lattice on exactly n elements up to
// isomorphism, ordered by (order form, full form) and named
// model_n<n>_<index> in that order.
std::vector<MultLattice> enumerate_mult_lattices(int n);

// An implication between predicate conjunctions, e.g. parsed from
// "scope:element hyp=strongly_hollow,cancellation
// concl=lattice.le2_maximals". Element scope tests every element of
// every model; lattice predicates are reachable there under the
// lattice. prefix. A leading ! negates one predicate.
struct Query {
  bool element_scope = true;
  std::vector<std::string> hypotheses;
  std::string conclusion;
};

Query parse_query(const std::string& text);

struct MineResult {
  bool holds = true;
  int models_checked = 0;
  // Set when a counterexample exists: the model, the element inside it
  // (element scope only, else -1), and a printable account.
  MultLattice lattice;
  ElementId element = -1;
  std::string detail;
};

// Runs the query over every enumerated multiplicative lattice with at
// most max_n elements, in enumeration order, and stops at the first
// counterexample. StructureError on unknown predicate names or
// max_n > 6.
MineResult mine(const Query& query, int max_n);
MineResult mine(const std::string& query, int max_n);

}  // namespace mlat
