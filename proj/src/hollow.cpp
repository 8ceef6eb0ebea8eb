#include "mlat/hollow.hpp"

#include <stdexcept>

namespace mlat {

bool is_strongly_hollow(const MultLattice& L, ElementId a) {
  for (int x = 0; x < L.n; ++x) {
    if (L.leq(a, x)) continue;
    for (int y = x; y < L.n; ++y)
      if (!L.leq(a, y) && L.leq(a, L.join(x, y))) return false;
  }
  return true;
}

std::vector<ElementId> missed_set(const MultLattice& L, ElementId a) {
  std::vector<ElementId> out;
  for (int k = 0; k < L.n; ++k)
    if (!L.leq(a, k)) out.push_back(k);
  return out;
}

ElementId kappa(const MultLattice& L, ElementId a) {
  ElementId acc = L.bottom;
  for (int k = 0; k < L.n; ++k)
    if (!L.leq(a, k)) acc = L.join(acc, k);
  return acc;
}

ElementId kappa_residual(const MultLattice& L, ElementId a) {
  return residual(L, kappa(L, a), a);
}

bool is_completely_strongly_hollow(const MultLattice& L, ElementId a) {
  if (a == L.bottom) return true;
  return !L.leq(a, kappa(L, a));
}

std::vector<ElementId> strongly_hollow_elements(const MultLattice& L) {
  std::vector<ElementId> out;
  for (int a = 0; a < L.n; ++a)
    if (is_strongly_hollow(L, a)) out.push_back(a);
  return out;
}

std::vector<ElementId> completely_strongly_hollow_elements(
    const MultLattice& L) {
  std::vector<ElementId> out;
  for (int a = 0; a < L.n; ++a)
    if (is_completely_strongly_hollow(L, a)) out.push_back(a);
  return out;
}

HollowProfile hollow_profile(const MultLattice& L, ElementId a) {
  HollowProfile p;
  p.id = a;
  p.strongly_hollow = is_strongly_hollow(L, a);
  p.t_set = missed_set(L, a);
  p.kappa = join_all(L, p.t_set);
  p.kappa_residual = residual(L, p.kappa, a);
  p.completely_strongly_hollow =
      a == L.bottom ? true : !L.leq(a, p.kappa);
  if (a != L.bottom && p.strongly_hollow != p.completely_strongly_hollow) {
    // For non-bottom elements the two notions coincide in a finite
    // lattice. A split between the definitional scan and the kappa
    // criterion can only come from an engine bug.
    throw std::logic_error("hollow criteria disagree on " + L.names[a] +
                           " in " + L.name);
  }
  return p;
}

std::vector<ElementId> maximal_hollow_below(const MultLattice& L,
                                            ElementId x) {
  std::vector<ElementId> hollow;
  for (int k = 0; k < L.n; ++k)
    if (L.leq(k, x) && is_strongly_hollow(L, k)) hollow.push_back(k);
  std::vector<ElementId> out;
  for (ElementId k : hollow) {
    bool covered = false;
    for (ElementId d : hollow)
      if (L.lt(k, d)) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(k);
  }
  return out;
}

bool is_representable(const MultLattice& L, ElementId x) {
  ElementId acc = L.bottom;
  for (int c = 0; c < L.n; ++c)
    if (c != L.bottom && L.leq(c, x) && is_completely_strongly_hollow(L, c))
      acc = L.join(acc, c);
  return acc == x;
}

std::optional<std::vector<ElementId>> minimal_representation(
    const MultLattice& L, ElementId x) {
  std::vector<ElementId> pool;
  ElementId acc = L.bottom;
  for (int c = 0; c < L.n; ++c)
    if (c != L.bottom && L.leq(c, x) && is_completely_strongly_hollow(L, c)) {
      pool.push_back(c);
      acc = L.join(acc, c);
    }
  if (acc != x) return std::nullopt;

  std::vector<ElementId> maximal;
  for (ElementId c : pool) {
    bool covered = false;
    for (ElementId d : pool)
      if (L.lt(c, d)) {
        covered = true;
        break;
      }
    if (!covered) maximal.push_back(c);
  }
  return maximal;
}

std::vector<Representation> representations(const MultLattice& L, ElementId x,
                                            bool minimal_only, int max_pool) {
  std::vector<ElementId> pool;
  ElementId acc = L.bottom;
  for (int c = 0; c < L.n; ++c)
    if (c != L.bottom && L.leq(c, x) && is_completely_strongly_hollow(L, c)) {
      pool.push_back(c);
      acc = L.join(acc, c);
    }
  if (acc != x) return {};

  const int k = static_cast<int>(pool.size());
  if (k > max_pool) {
    auto canonical = minimal_representation(L, x);
    return {Representation{x, *canonical, true}};
  }

  std::vector<Representation> out;
  std::optional<std::vector<ElementId>> seen_minimal;
  for (unsigned long long mask = 0; mask < (1ull << k); ++mask) {
    ElementId j = L.bottom;
    for (int i = 0; i < k; ++i)
      if (mask & (1ull << i)) j = L.join(j, pool[i]);
    if (j != x) continue;
    bool minimal = true;
    for (int drop = 0; minimal && drop < k; ++drop) {
      if (!(mask & (1ull << drop))) continue;
      ElementId jj = L.bottom;
      for (int i = 0; i < k; ++i)
        if (i != drop && (mask & (1ull << i))) jj = L.join(jj, pool[i]);
      if (L.leq(pool[drop], jj)) minimal = false;
    }
    if (minimal_only && !minimal) continue;
    Representation rep;
    rep.target = x;
    rep.minimal = minimal;
    for (int i = 0; i < k; ++i)
      if (mask & (1ull << i)) rep.parts.push_back(pool[i]);
    if (rep.minimal) {
      if (seen_minimal && *seen_minimal != rep.parts)
        throw std::logic_error("two distinct minimal families for " +
                               L.names[x] + " in " + L.name);
      seen_minimal = rep.parts;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace mlat
