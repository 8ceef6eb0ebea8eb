#pragma once

// Hand-built lattices shared across test files.

#include <string>
#include <utility>
#include <vector>

#include "mlat/core.hpp"
#include "oracles.hpp"

namespace fx {

using mlat::ElementId;
using mlat::MultLattice;

inline MultLattice from_covers(std::string name, int n,
                               const std::vector<std::pair<int, int>>& covers,
                               std::vector<ElementId> mul,
                               std::vector<std::string> names = {}) {
  auto leq = oracle::leq_from_covers(n, covers);
  return MultLattice::from_order(std::move(name), n, leq, std::move(mul),
                                 std::move(names));
}

inline MultLattice with_meet_mul(std::string name, int n,
                                 const std::vector<std::pair<int, int>>& covers,
                                 std::vector<std::string> names = {}) {
  auto leq = oracle::leq_from_covers(n, covers);
  std::vector<ElementId> dummy(static_cast<std::size_t>(n) * n, 0);
  MultLattice L = MultLattice::from_order(std::move(name), n, leq,
                                          std::move(dummy), std::move(names));
  L.mul_ = L.meet_;
  return L;
}

// Two incomparable middle elements, multiplication is the meet. Valid.
inline MultLattice diamond_meet() {
  return with_meet_mul("diamond", 4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                       {"0", "m", "n", "1"});
}

// Same order but every product of proper elements is bottom. The
// multiplication fails distributivity and nothing else.
inline MultLattice diamond_zero_mul() {
  MultLattice L = diamond_meet();
  L.name = "diamond_zero";
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) L.mul_[a * L.n + b] = 0;
  return L;
}

// Three-element chain with a nilpotent middle. Valid.
inline MultLattice chain_sq_zero() {
  MultLattice L = with_meet_mul("chain_sq_zero", 3, {{0, 1}, {1, 2}},
                                {"0", "a", "1"});
  L.mul_[1 * 3 + 1] = 0;
  return L;
}

// Middle element squaring to top. Violates the meet bound and
// distributivity, nothing else.
inline MultLattice chain_sq_top() {
  MultLattice L = with_meet_mul("chain_sq_top", 3, {{0, 1}, {1, 2}},
                                {"0", "a", "1"});
  L.mul_[1 * 3 + 1] = 2;
  return L;
}

// Four-element chain whose multiplication breaks associativity alone:
// a*a = 0, a*b = a, b*b = a gives (a*b)*b = a but a*(b*b) = 0.
inline MultLattice chain4_bad_assoc() {
  MultLattice L = with_meet_mul("chain4_bad_assoc", 4,
                                {{0, 1}, {1, 2}, {2, 3}}, {"0", "a", "b", "1"});
  L.mul_[1 * 4 + 1] = 0;
  L.mul_[1 * 4 + 2] = 1;
  L.mul_[2 * 4 + 1] = 1;
  L.mul_[2 * 4 + 2] = 1;
  return L;
}

// Ideal lattice of the integers mod m, assembled from the ring oracle
// alone. Ids follow the divisors of m in ascending order, so id 0 is
// the whole ring and the zero ideal sits at divisor m.
inline MultLattice zmod_by_ring(int m) {
  oracle::ZmodRing R(m);
  std::vector<int> divs;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) divs.push_back(d);
  const int n = static_cast<int>(divs.size());

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<ElementId> mul(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::string> names(n);
  auto id_of = [&](int d) {
    return static_cast<ElementId>(
        std::find(divs.begin(), divs.end(), d) - divs.begin());
  };
  for (int i = 0; i < n; ++i) {
    names[i] = divs[i] == 1   ? "1"
               : divs[i] == m ? "0"
                              : std::to_string(divs[i]) + "Z";
    for (int j = 0; j < n; ++j) {
      leq[i * n + j] = R.add(divs[i], divs[j]) == divs[j] ? 1 : 0;
      mul[i * n + j] = id_of(R.mul(divs[i], divs[j]));
    }
  }
  return MultLattice::from_order("zmod_ring(" + std::to_string(m) + ")", n,
                                 leq, mul, std::move(names));
}

// Three atoms under a common coatom, every product of proper elements
// bottom. Valid and not modular, so it exercises the non-distributive
// corners of the element predicates.
inline MultLattice m3_top() {
  MultLattice L = with_meet_mul(
      "m3_top", 6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 5}},
      {"0", "a", "b", "c", "m", "1"});
  for (int x = 1; x <= 4; ++x)
    for (int y = 1; y <= 4; ++y) L.mul_[x * 6 + y] = 0;
  return L;
}

}  // namespace fx
