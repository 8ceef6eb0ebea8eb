#include "mlat/elements.hpp"

#include <algorithm>

namespace mlat {

bool is_maximal(const MultLattice& L, ElementId a) {
  if (!L.lt(a, L.top)) return false;
  for (int x = 0; x < L.n; ++x)
    if (L.lt(a, x) && L.lt(x, L.top)) return false;
  return true;
}

bool is_minimal(const MultLattice& L, ElementId a) {
  if (!L.lt(L.bottom, a)) return false;
  for (int x = 0; x < L.n; ++x)
    if (L.lt(L.bottom, x) && L.lt(x, a)) return false;
  return true;
}

bool is_nilpotent(const MultLattice& L, ElementId a) {
  ElementId pow = a;
  for (int k = 0; k < L.n; ++k) {
    if (pow == L.bottom) return true;
    pow = L.mul(pow, a);
  }
  return pow == L.bottom;
}

bool is_idempotent(const MultLattice& L, ElementId a) {
  return L.mul(a, a) == a;
}

std::vector<ElementId> complements(const MultLattice& L, ElementId a) {
  std::vector<ElementId> out;
  for (int c = 0; c < L.n; ++c)
    if (L.meet(a, c) == L.bottom && L.join(a, c) == L.top) out.push_back(c);
  return out;
}

bool is_complemented(const MultLattice& L, ElementId a) {
  for (int c = 0; c < L.n; ++c)
    if (L.meet(a, c) == L.bottom && L.join(a, c) == L.top) return true;
  return false;
}

bool is_neutral(const MultLattice& L, ElementId a) {
  for (int x = 0; x < L.n; ++x)
    for (int y = 0; y < L.n; ++y) {
      ElementId lo = L.join(L.join(L.meet(a, x), L.meet(x, y)), L.meet(y, a));
      ElementId hi = L.meet(L.meet(L.join(a, x), L.join(x, y)), L.join(y, a));
      if (lo != hi) return false;
    }
  return true;
}

bool is_uniform(const MultLattice& L, ElementId a) {
  for (int x = 0; x < L.n; ++x) {
    if (!L.leq(x, a) || x == L.bottom) continue;
    for (int y = 0; y < L.n; ++y) {
      if (!L.leq(y, a) || y == L.bottom) continue;
      if (L.meet(x, y) == L.bottom) return false;
    }
  }
  return true;
}

bool is_meet_principal(const MultLattice& L, ElementId e) {
  for (int a = 0; a < L.n; ++a) {
    ElementId res = residual(L, a, e);
    for (int b = 0; b < L.n; ++b)
      if (L.meet(a, L.mul(b, e)) != L.mul(L.meet(res, b), e)) return false;
  }
  return true;
}

bool is_join_principal(const MultLattice& L, ElementId e) {
  for (int b = 0; b < L.n; ++b) {
    ElementId res = residual(L, b, e);
    for (int a = 0; a < L.n; ++a)
      if (L.join(a, res) != residual(L, L.join(L.mul(a, e), b), e))
        return false;
  }
  return true;
}

bool is_principal(const MultLattice& L, ElementId e) {
  return is_meet_principal(L, e) && is_join_principal(L, e);
}

bool is_weak_meet_principal(const MultLattice& L, ElementId e) {
  for (int a = 0; a < L.n; ++a)
    if (L.meet(a, e) != L.mul(residual(L, a, e), e)) return false;
  return true;
}

bool is_weak_join_principal(const MultLattice& L, ElementId e) {
  ElementId ann = residual(L, L.bottom, e);
  for (int a = 0; a < L.n; ++a)
    if (L.join(a, ann) != residual(L, L.mul(a, e), e)) return false;
  return true;
}

bool is_weak_principal(const MultLattice& L, ElementId e) {
  return is_weak_meet_principal(L, e) && is_weak_join_principal(L, e);
}

bool has_cancellation(const MultLattice& L, ElementId a) {
  for (int b = 0; b < L.n; ++b)
    for (int c = b + 1; c < L.n; ++c)
      if (L.mul(a, b) == L.mul(a, c)) return false;
  return true;
}

bool is_strongly_irreducible(const MultLattice& L, ElementId i) {
  for (int a = 0; a < L.n; ++a) {
    if (L.leq(a, i)) continue;
    for (int b = a; b < L.n; ++b)
      if (!L.leq(b, i) && L.leq(L.meet(a, b), i)) return false;
  }
  return true;
}

bool is_completely_strongly_irreducible(const MultLattice& L, ElementId i) {
  std::vector<ElementId> outside;
  for (int s = 0; s < L.n; ++s)
    if (!L.leq(s, i)) outside.push_back(s);
  if (outside.empty()) return true;
  return !L.leq(meet_all(L, outside), i);
}

bool is_primitive_idempotent(const MultLattice& L, ElementId e) {
  if (e == L.bottom || !is_idempotent(L, e)) return false;
  for (int u = 0; u < L.n; ++u) {
    if (u == L.bottom || !is_idempotent(L, u)) continue;
    for (int v = u; v < L.n; ++v) {
      if (v == L.bottom || !is_idempotent(L, v)) continue;
      if (L.mul(u, v) == L.bottom && L.join(u, v) == e) return false;
    }
  }
  return true;
}

ElementProfile element_profile(const MultLattice& L, ElementId a) {
  ElementProfile p;
  p.id = a;
  p.name = L.names[a];
  p.prime = is_prime(L, a);
  p.maximal = is_maximal(L, a);
  p.minimal = is_minimal(L, a);
  p.nilpotent = is_nilpotent(L, a);
  p.idempotent = is_idempotent(L, a);
  p.complement_list = complements(L, a);
  p.complemented = !p.complement_list.empty();
  p.neutral = is_neutral(L, a);
  p.uniform = is_uniform(L, a);
  p.meet_principal = is_meet_principal(L, a);
  p.join_principal = is_join_principal(L, a);
  p.principal = p.meet_principal && p.join_principal;
  p.weak_meet_principal = is_weak_meet_principal(L, a);
  p.weak_join_principal = is_weak_join_principal(L, a);
  p.weak_principal = p.weak_meet_principal && p.weak_join_principal;
  p.cancellation = has_cancellation(L, a);
  p.strongly_irreducible = is_strongly_irreducible(L, a);
  p.completely_strongly_irreducible =
      is_completely_strongly_irreducible(L, a);
  p.primitive_idempotent = is_primitive_idempotent(L, a);
  return p;
}

std::vector<ElementProfile> element_profiles(const MultLattice& L) {
  std::vector<ElementProfile> out;
  out.reserve(L.n);
  for (int a = 0; a < L.n; ++a) out.push_back(element_profile(L, a));
  return out;
}

std::vector<ElementId> maximal_elements(const MultLattice& L) {
  std::vector<ElementId> out;
  for (int a = 0; a < L.n; ++a)
    if (is_maximal(L, a)) out.push_back(a);
  return out;
}

std::vector<ElementId> minimal_elements(const MultLattice& L) {
  std::vector<ElementId> out;
  for (int a = 0; a < L.n; ++a)
    if (is_minimal(L, a)) out.push_back(a);
  return out;
}

std::vector<ElementId> principal_elements(const MultLattice& L) {
  std::vector<ElementId> out;
  for (int a = 0; a < L.n; ++a)
    if (is_principal(L, a)) out.push_back(a);
  return out;
}

ElementId jacobson_radical(const MultLattice& L) {
  std::vector<ElementId> maximals = maximal_elements(L);
  return meet_all(L, maximals);
}

ElementId socle(const MultLattice& L) {
  std::vector<ElementId> atoms = minimal_elements(L);
  return join_all(L, atoms);
}

bool is_generated_by(const MultLattice& L, std::span<const ElementId> gens) {
  for (int x = 0; x < L.n; ++x) {
    ElementId acc = L.bottom;
    for (ElementId g : gens)
      if (L.leq(g, x)) acc = L.join(acc, g);
    if (acc != x) return false;
  }
  return true;
}

bool is_distributive_lattice(const MultLattice& L) {
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b)
      for (int c = 0; c < L.n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)))
          return false;
  return true;
}

bool is_chain(const MultLattice& L) {
  for (int a = 0; a < L.n; ++a)
    for (int b = a + 1; b < L.n; ++b)
      if (!L.leq(a, b) && !L.leq(b, a)) return false;
  return true;
}

namespace {

// Closure of {seed...} under multiplication by the given factors.
std::vector<std::uint8_t> product_closure(const MultLattice& L,
                                          const std::vector<ElementId>& seeds,
                                          const std::vector<ElementId>& factors) {
  std::vector<std::uint8_t> seen(L.n, 0);
  std::vector<ElementId> queue;
  for (ElementId s : seeds)
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    ElementId x = queue.back();
    queue.pop_back();
    for (ElementId f : factors) {
      ElementId y = L.mul(x, f);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

LatticeProfile lattice_profile(const MultLattice& L,
                               const LatticeProfileOptions& opt) {
  LatticeProfile p;
  std::vector<ElementId> maximals = maximal_elements(L);
  p.max_set = maximals;
  p.atoms = minimal_elements(L);
  p.maximal_count = static_cast<int>(maximals.size());
  p.jacobson = meet_all(L, maximals);
  p.nilradical = nilradical(L);
  p.socle = join_all(L, p.atoms);
  p.quasi_local = p.maximal_count == 1 || L.n == 1;
  p.semi_simple = p.jacobson == L.bottom;
  p.reduced = p.nilradical == L.bottom;
  p.domain = is_prime(L, L.bottom);
  p.distributive = is_distributive_lattice(L);
  p.chain = is_chain(L);

  std::vector<ElementId> primes = prime_elements(L);
  p.spec_set = primes;
  for (ElementId q : primes) {
    bool minimal_prime = true;
    for (ElementId r : primes)
      if (L.lt(r, q)) minimal_prime = false;
    if (minimal_prime) p.minimal_primes.push_back(q);
  }
  p.gelfand = true;
  for (ElementId q : primes) {
    int above = 0;
    for (ElementId m : maximals)
      if (L.leq(q, m)) ++above;
    if (above != 1) p.gelfand = false;
  }

  std::vector<ElementId> principal = principal_elements(L);
  p.principally_generated = is_generated_by(L, principal);
  // Finite lattices are C-lattices outright, so this coincides with
  // being principally generated.
  p.weak_r_lattice = p.principally_generated;
  p.principal_element_lattice =
      principal.size() == static_cast<std::size_t>(L.n);
  // Every element of a finite lattice is compact, so the Prufer
  // condition (compact elements are principal) collapses to this.
  p.prufer = p.principal_element_lattice;

  bool all_complemented = true;
  for (int a = 0; a < L.n; ++a)
    all_complemented = all_complemented && is_complemented(L, a);
  p.boolean_algebra = p.distributive && all_complemented;

  std::vector<ElementId> seeds =
      opt.empty_product_is_top ? std::vector<ElementId>{L.top} : primes;
  std::vector<std::uint8_t> prime_products = product_closure(L, seeds, primes);
  p.zpi = true;
  for (int x = 0; x < L.n; ++x) p.zpi = p.zpi && prime_products[x] != 0;
  p.pi_lattice = true;
  for (int x = 0; x < L.n; ++x) {
    ElementId acc = L.bottom;
    for (int r = 0; r < L.n; ++r)
      if (prime_products[r] && L.leq(r, x)) acc = L.join(acc, r);
    if (acc != x) p.pi_lattice = false;
  }

  std::vector<ElementId> principal_primes;
  for (ElementId q : primes)
    if (std::find(principal.begin(), principal.end(), q) != principal.end())
      principal_primes.push_back(q);
  std::vector<ElementId> ufd_seeds =
      opt.empty_product_is_top ? std::vector<ElementId>{L.top}
                               : principal_primes;
  std::vector<std::uint8_t> pp_products =
      product_closure(L, ufd_seeds, principal_primes);
  p.ufd = p.domain && p.principally_generated;
  for (ElementId e : principal) p.ufd = p.ufd && pp_products[e] != 0;

  p.special_pel = p.principal_element_lattice && p.quasi_local;
  if (p.special_pel && L.n > 1) {
    std::vector<std::uint8_t> is_power(L.n, 0);
    ElementId m = maximals[0];
    ElementId cur = L.top;
    for (int k = 0; k <= L.n; ++k) {
      is_power[cur] = 1;
      cur = L.mul(cur, m);
    }
    for (int x = 0; x < L.n; ++x)
      p.special_pel = p.special_pel && is_power[x] != 0;
  }

  p.i0 = true;
  std::vector<std::uint8_t> comp(L.n, 0);
  for (int c = 0; c < L.n; ++c) comp[c] = is_complemented(L, c) ? 1 : 0;
  for (int x = 0; x < L.n; ++x) {
    if (L.leq(x, p.jacobson)) continue;
    bool found = false;
    for (int c = 0; !found && c < L.n; ++c)
      if (comp[c] && c != L.bottom && L.leq(c, x)) found = true;
    if (!found) p.i0 = false;
  }

  return p;
}

namespace {

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string name_list(const MultLattice& L, const std::vector<ElementId>& v) {
  if (v.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += L.name_of(v[i]);
  }
  return out;
}

}  // namespace

std::string to_text(const MultLattice& L, const ElementProfile& p) {
  std::string out = "element " + L.name_of(p.id) + "\n";
  out += "cancellation: " + yn(p.cancellation) + "\n";
  out += "complemented: " + yn(p.complemented) + "\n";
  out += "completely_strongly_irreducible: " +
         yn(p.completely_strongly_irreducible) + "\n";
  out += "idempotent: " + yn(p.idempotent) + "\n";
  out += "join_principal: " + yn(p.join_principal) + "\n";
  out += "maximal: " + yn(p.maximal) + "\n";
  out += "meet_principal: " + yn(p.meet_principal) + "\n";
  out += "minimal: " + yn(p.minimal) + "\n";
  out += "neutral: " + yn(p.neutral) + "\n";
  out += "nilpotent: " + yn(p.nilpotent) + "\n";
  out += "prime: " + yn(p.prime) + "\n";
  out += "primitive_idempotent: " + yn(p.primitive_idempotent) + "\n";
  out += "principal: " + yn(p.principal) + "\n";
  out += "strongly_irreducible: " + yn(p.strongly_irreducible) + "\n";
  out += "uniform: " + yn(p.uniform) + "\n";
  out += "weak_join_principal: " + yn(p.weak_join_principal) + "\n";
  out += "weak_meet_principal: " + yn(p.weak_meet_principal) + "\n";
  out += "weak_principal: " + yn(p.weak_principal) + "\n";
  out += "complements: " + name_list(L, p.complement_list) + "\n";
  return out;
}

std::string to_text(const MultLattice& L, const LatticeProfile& p) {
  std::string out = "lattice " + L.name + "\n";
  out += "boolean_algebra: " + yn(p.boolean_algebra) + "\n";
  out += "chain: " + yn(p.chain) + "\n";
  out += "distributive: " + yn(p.distributive) + "\n";
  out += "domain: " + yn(p.domain) + "\n";
  out += "gelfand: " + yn(p.gelfand) + "\n";
  out += "i0: " + yn(p.i0) + "\n";
  out += "noether: " + yn(p.noether) + "\n";
  out += "pi_lattice: " + yn(p.pi_lattice) + "\n";
  out += "principal_element_lattice: " + yn(p.principal_element_lattice) +
         "\n";
  out += "principally_generated: " + yn(p.principally_generated) + "\n";
  out += "prufer: " + yn(p.prufer) + "\n";
  out += "quasi_local: " + yn(p.quasi_local) + "\n";
  out += "reduced: " + yn(p.reduced) + "\n";
  out += "semi_local: " + yn(p.semi_local) + "\n";
  out += "semi_simple: " + yn(p.semi_simple) + "\n";
  out += "special_pel: " + yn(p.special_pel) + "\n";
  out += "ufd: " + yn(p.ufd) + "\n";
  out += "weak_r_lattice: " + yn(p.weak_r_lattice) + "\n";
  out += "zpi: " + yn(p.zpi) + "\n";
  out += "atoms: " + name_list(L, p.atoms) + "\n";
  out += "jacobson: " + L.name_of(p.jacobson) + "\n";
  out += "maximal_count: " + std::to_string(p.maximal_count) + "\n";
  out += "maximals: " + name_list(L, p.max_set) + "\n";
  out += "minimal_primes: " + name_list(L, p.minimal_primes) + "\n";
  out += "nilradical: " + L.name_of(p.nilradical) + "\n";
  out += "socle: " + L.name_of(p.socle) + "\n";
  out += "spec: " + name_list(L, p.spec_set) + "\n";
  return out;
}

}  // namespace mlat
