#include "mlat/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cctype>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "mlat/constructions.hpp"
#include "mlat/elements.hpp"
#include "mlat/hollow.hpp"
#include "mlat/search.hpp"

namespace mlat {

namespace {

// Everything one lattice needs for every check, computed once up front
// so the check functions stay pure table lookups plus small scans.
struct Localized {
  LocalizationResult loc;
  std::vector<char> sh;
};

struct Ctx {
  MultLattice L;
  std::string family;
  std::optional<FamilySpec> spec;
  LatticeProfile lat;
  std::vector<ElementProfile> ep;
  std::vector<char> sh, csh, rep, closure;
  std::vector<ElementId> kap, la;
  std::uint64_t digest = 0;
  bool is_b4 = false;
  bool wmp_generated = false;

  std::vector<QuotientResult> quot;
  std::vector<std::vector<char>> quot_sh, quot_csh;
  std::map<ElementId, LatticeProfile> quot_lat;
  std::map<ElementId, std::optional<Localized>> local_at;

  int n() const { return L.n; }
  bool leq(ElementId a, ElementId b) const { return L.leq(a, b); }
  const std::string& nm(ElementId a) const { return L.name_of(a); }
};

const CanonicalForm& b4_form() {
  static const CanonicalForm form = canonical_form(generate("b4"));
  return form;
}

std::optional<Localized> make_local(const MultLattice& L, ElementId v) {
  std::vector<ElementId> S;
  for (ElementId s = 0; s < L.n; ++s)
    if (!L.leq(s, v)) S.push_back(s);
  if (S.empty()) return std::nullopt;
  std::vector<char> in(L.n, 0);
  for (ElementId s : S) in[s] = 1;
  for (ElementId s : S)
    for (ElementId t : S)
      if (!in[L.mul(s, t)]) return std::nullopt;
  Localized lz{localize(L, S), {}};
  lz.sh.resize(lz.loc.lattice.n);
  for (ElementId x = 0; x < lz.loc.lattice.n; ++x)
    lz.sh[x] = is_strongly_hollow(lz.loc.lattice, x);
  return lz;
}

Ctx make_ctx(MultLattice&& L0, std::string family, std::optional<FamilySpec> spec) {
  Ctx c;
  c.L = std::move(L0);
  c.family = std::move(family);
  c.spec = std::move(spec);
  c.lat = lattice_profile(c.L);
  c.ep = element_profiles(c.L);
  const int n = c.L.n;

  c.sh.resize(n);
  c.csh.resize(n);
  c.rep.resize(n);
  c.kap.resize(n);
  c.la.resize(n);
  for (ElementId a = 0; a < n; ++a) {
    c.sh[a] = is_strongly_hollow(c.L, a);
    c.csh[a] = is_completely_strongly_hollow(c.L, a);
    c.rep[a] = is_representable(c.L, a);
    c.kap[a] = kappa(c.L, a);
    c.la[a] = kappa_residual(c.L, a);
  }

  c.closure.assign(n, 0);
  for (ElementId a = 0; a < n; ++a) c.closure[a] = c.csh[a];
  for (bool grew = true; grew;) {
    grew = false;
    for (ElementId a = 0; a < n; ++a) {
      if (!c.csh[a]) continue;
      for (ElementId p = 0; p < n; ++p) {
        if (!c.closure[p]) continue;
        ElementId q = c.L.mul(a, p);
        if (!c.closure[q]) {
          c.closure[q] = 1;
          grew = true;
        }
      }
    }
  }

  std::vector<ElementId> gens;
  for (ElementId e = 0; e < n; ++e)
    if (c.ep[e].weak_meet_principal) gens.push_back(e);
  c.wmp_generated = is_generated_by(c.L, gens);

  try {
    c.digest = canonical_digest(c.L);
  } catch (const StructureError&) {
    c.digest = 0;
  }
  c.is_b4 = (n == 4) && canonical_form(c.L) == b4_form();

  c.quot.reserve(n);
  c.quot_sh.resize(n);
  c.quot_csh.resize(n);
  for (ElementId i = 0; i < n; ++i) {
    c.quot.push_back(quotient(c.L, i));
    const MultLattice& Q = c.quot.back().lattice;
    c.quot_sh[i].resize(Q.n);
    c.quot_csh[i].resize(Q.n);
    for (ElementId x = 0; x < Q.n; ++x) {
      c.quot_sh[i][x] = is_strongly_hollow(Q, x);
      c.quot_csh[i][x] = is_completely_strongly_hollow(Q, x);
    }
  }

  for (ElementId a = 0; a < n; ++a) {
    if (a == c.L.bottom || !c.ep[a].join_principal) continue;
    ElementId i = residual(c.L, c.L.bottom, a);
    if (!c.quot_lat.count(i)) c.quot_lat.emplace(i, lattice_profile(c.quot[i].lattice));
  }
  for (ElementId p : c.lat.minimal_primes)
    if (!c.quot_lat.count(p)) c.quot_lat.emplace(p, lattice_profile(c.quot[p].lattice));

  for (ElementId m : c.lat.max_set)
    if (!c.local_at.count(m)) c.local_at.emplace(m, make_local(c.L, m));
  for (ElementId a = 0; a < n; ++a) {
    if (a == c.L.bottom || !c.sh[a] || !c.ep[a].join_principal) continue;
    ElementId v = c.la[a];
    if (!c.local_at.count(v)) c.local_at.emplace(v, make_local(c.L, v));
  }

  return c;
}

// ------------------------------------------------------------- outcomes

struct Outcome {
  CheckStatus status = CheckStatus::hypothesis_unmet;
  std::vector<std::pair<std::string, std::string>> bindings;
  std::string detail;
};

Outcome settle(bool met) {
  Outcome o;
  o.status = met ? CheckStatus::holds : CheckStatus::hypothesis_unmet;
  return o;
}

Outcome fail_at(const Ctx& c,
                std::initializer_list<std::pair<const char*, ElementId>> binds,
                std::string detail) {
  Outcome o;
  o.status = CheckStatus::violated;
  for (const auto& [role, id] : binds) o.bindings.emplace_back(role, c.nm(id));
  o.detail = std::move(detail);
  return o;
}

// -------------------------------------------------------------- helpers

bool comparable_all(const Ctx& c, ElementId a) {
  for (ElementId j = 0; j < c.n(); ++j)
    if (!c.leq(a, j) && !c.leq(j, a)) return false;
  return true;
}

std::vector<ElementId> strict_down_maximals(const Ctx& c, ElementId a) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < c.n(); ++x) {
    if (x == a || !c.leq(x, a)) continue;
    bool covered = false;
    for (ElementId y = 0; y < c.n() && !covered; ++y)
      covered = y != x && y != a && c.leq(x, y) && c.leq(y, a);
    if (!covered) out.push_back(x);
  }
  return out;
}

int missed_maximal_count(const Ctx& c, ElementId a) {
  int k = 0;
  for (ElementId m : c.lat.max_set)
    if (!c.leq(a, m)) ++k;
  return k;
}

bool products_below_stay_nonzero(const Ctx& c, ElementId a) {
  for (ElementId x = 0; x < c.n(); ++x) {
    if (x == c.L.bottom || !c.leq(x, a)) continue;
    for (ElementId y = 0; y < c.n(); ++y) {
      if (y == c.L.bottom || !c.leq(y, a)) continue;
      if (c.L.mul(x, y) == c.L.bottom) return false;
    }
  }
  return true;
}

// ----------------------------------------------------- hollowness checks

Outcome t23_fwd(const Ctx& c) {
  bool met = false;
  for (ElementId i = 0; i < c.n(); ++i)
    for (ElementId j = i + 1; j < c.n(); ++j) {
      if (!c.sh[i] || !c.sh[j] || !c.sh[c.L.join(i, j)]) continue;
      met = true;
      if (!c.leq(i, j) && !c.leq(j, i))
        return fail_at(c, {{"i", i}, {"j", j}},
                       "the join of " + c.nm(i) + " and " + c.nm(j) +
                           " is strongly hollow but the parts are incomparable");
    }
  return settle(met);
}

Outcome t23_rev(const Ctx& c) {
  bool met = false;
  for (ElementId i = 0; i < c.n(); ++i)
    for (ElementId j = i + 1; j < c.n(); ++j) {
      if (!c.sh[i] || !c.sh[j]) continue;
      if (!c.leq(i, j) && !c.leq(j, i)) continue;
      met = true;
      if (!c.sh[c.L.join(i, j)])
        return fail_at(c, {{"i", i}, {"j", j}},
                       "comparable strongly hollow elements with a join that is not strongly hollow");
    }
  return settle(met);
}

Outcome unique_max_below(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.csh[a]) continue;
    met = true;
    auto tops = strict_down_maximals(c, a);
    if (tops.size() != 1)
      return fail_at(c, {{"a", a}},
                     "the elements strictly below " + c.nm(a) + " have " +
                         std::to_string(tops.size()) + " maximal members instead of one");
  }
  return settle(met);
}

Outcome s_plus(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.sh[a]) continue;
    met = true;
    for (ElementId r = 0; r < c.n(); ++r)
      for (ElementId s = 0; s < c.n(); ++s)
        if (c.L.join(r, s) == a && !c.leq(r, s) && !c.leq(s, r))
          return fail_at(c, {{"a", a}, {"r", r}, {"s", s}},
                         c.nm(a) + " is the join of the incomparable pair " + c.nm(r) +
                             ", " + c.nm(s));
    for (ElementId r = 0; r < c.n(); ++r) {
      if (c.leq(a, r)) continue;
      ElementId sp = c.L.top;
      for (ElementId s = 0; s < c.n(); ++s)
        if (c.leq(a, c.L.join(s, r))) sp = c.L.meet(sp, s);
      if (!c.leq(a, sp))
        return fail_at(c, {{"a", a}, {"r", r}},
                       c.nm(a) + " is not below the meet of the elements whose join with " +
                           c.nm(r) + " covers it");
    }
  }
  return settle(met);
}

Outcome t28(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.sh[a]) continue;
    met = true;
    if (c.leq(a, c.lat.jacobson)) continue;
    int k = missed_maximal_count(c, a);
    if (k != 1)
      return fail_at(c, {{"a", a}},
                     c.nm(a) + " avoids the radical yet misses " + std::to_string(k) +
                         " maximal elements instead of exactly one");
  }
  return settle(met);
}

Outcome p29(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (!c.sh[a] || !c.ep[a].cancellation) continue;
    met = true;
    if (!c.lat.quasi_local)
      return fail_at(c, {{"a", a}},
                     "a strongly hollow element with cancellation in a lattice with " +
                         std::to_string(c.lat.maximal_count) + " maximal elements");
  }
  return settle(met);
}

Outcome p27(const Ctx& c) {
  if (!c.lat.quasi_local) return settle(false);
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (!c.ep[a].maximal || !c.ep[a].weak_principal) continue;
    met = true;
    if (!c.sh[a])
      return fail_at(c, {{"a", a}},
                     "the weak principal maximal element " + c.nm(a) +
                         " of a quasi local lattice is not strongly hollow");
  }
  return settle(met);
}

Outcome p211_fwd(const Ctx& c) {
  if (!c.csh[c.L.top]) return settle(false);
  if (!c.lat.quasi_local)
    return fail_at(c, {{"a", c.L.top}},
                   "the top is completely strongly hollow but the lattice is not quasi local");
  return settle(true);
}

Outcome p211_rev(const Ctx& c) {
  if (!c.lat.quasi_local) return settle(false);
  if (!c.csh[c.L.top])
    return fail_at(c, {{"a", c.L.top}},
                   "quasi local but the top is not completely strongly hollow");
  return settle(true);
}

Outcome t27_fwd(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.sh[a]) continue;
    met = true;
    if (c.leq(a, c.kap[a]))
      return fail_at(c, {{"a", a}},
                     c.nm(a) + " is strongly hollow yet sits below the join of what it misses");
  }
  return settle(met);
}

Outcome t27_rev(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || c.leq(a, c.kap[a])) continue;
    met = true;
    if (!c.sh[a] || !c.csh[a])
      return fail_at(c, {{"a", a}},
                     c.nm(a) + " avoids the join of what it misses yet is not strongly hollow");
  }
  return settle(met);
}

Outcome kcrit_fwd(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.csh[a]) continue;
    met = true;
    if (c.leq(a, c.kap[a]))
      return fail_at(c, {{"a", a}},
                     c.nm(a) + " is completely strongly hollow yet below its kappa");
  }
  return settle(met);
}

Outcome kcrit_rev(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || c.leq(a, c.kap[a])) continue;
    met = true;
    if (!c.csh[a])
      return fail_at(c, {{"a", a}},
                     c.nm(a) + " avoids its kappa yet is not completely strongly hollow");
  }
  return settle(met);
}

Outcome kappa_monotone(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (!c.csh[a]) continue;
    for (ElementId b = 0; b < c.n(); ++b) {
      if (!c.csh[b] || !c.leq(a, b)) continue;
      met = true;
      if (!c.leq(c.kap[a], c.kap[b]))
        return fail_at(c, {{"a", a}, {"b", b}},
                       "kappa fails to preserve the order between " + c.nm(a) + " and " +
                           c.nm(b));
    }
  }
  return settle(met);
}

Outcome quotient_sh(const Ctx& c) {
  bool met = false;
  for (ElementId i = 0; i < c.n(); ++i) {
    const QuotientResult& q = c.quot[i];
    for (ElementId a = 0; a < c.n(); ++a) {
      if (!c.sh[a]) continue;
      met = true;
      if (!c.quot_sh[i][q.forward[a]])
        return fail_at(c, {{"a", a}, {"i", i}},
                       "the class of " + c.nm(a) + " is not strongly hollow above " + c.nm(i));
    }
  }
  return settle(met);
}

Outcome quotient_csh(const Ctx& c) {
  bool met = false;
  for (ElementId i = 0; i < c.n(); ++i) {
    const QuotientResult& q = c.quot[i];
    for (ElementId a = 0; a < c.n(); ++a) {
      if (!c.csh[a]) continue;
      met = true;
      if (!c.quot_csh[i][q.forward[a]])
        return fail_at(c, {{"a", a}, {"i", i}},
                       "the class of " + c.nm(a) + " is not completely strongly hollow above " +
                           c.nm(i));
    }
  }
  return settle(met);
}

Outcome la_maximal(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (!c.sh[a] || !c.ep[a].join_principal) continue;
    met = true;
    ElementId v = c.la[a];
    if (v != c.L.top && !c.ep[v].maximal)
      return fail_at(c, {{"a", a}},
                     "the residual of kappa by " + c.nm(a) + " is neither the top nor maximal");
  }
  return settle(met);
}

Outcome t213(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.sh[a] || !c.ep[a].join_principal) continue;
    auto it = c.local_at.find(c.la[a]);
    if (it == c.local_at.end() || !it->second) continue;
    met = true;
    const Localized& lz = *it->second;
    if (!lz.sh[lz.loc.forward[a]])
      return fail_at(c, {{"a", a}},
                     "the image of " + c.nm(a) +
                         " in the localization at its kappa residual is not strongly hollow");
  }
  return settle(met);
}

Outcome t214(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.sh[a] || !c.ep[a].join_principal) continue;
    met = true;
    ElementId i = residual(c.L, c.L.bottom, a);
    const LatticeProfile& qp = c.quot_lat.at(i);
    const QuotientResult& q = c.quot[i];
    if (!qp.quasi_local || qp.max_set.size() != 1 || qp.max_set[0] != q.forward[c.la[a]])
      return fail_at(c, {{"a", a}},
                     "the quotient above the annihilator of " + c.nm(a) +
                         " is not local at the image of its kappa residual");
  }
  return settle(met);
}

Outcome t215_fwd(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.ep[a].join_principal || !c.sh[a]) continue;
    met = true;
    ElementId i = residual(c.L, c.L.bottom, a);
    if (!c.quot_lat.at(i).quasi_local)
      return fail_at(c, {{"a", a}},
                     "the quotient above the annihilator of " + c.nm(a) + " is not quasi local");
    for (ElementId m : c.lat.max_set) {
      const auto& lzo = c.local_at.at(m);
      if (!lzo)
        return fail_at(c, {{"a", a}, {"m", m}},
                       "no localization exists at the maximal element " + c.nm(m));
      const Localized& lz = *lzo;
      ElementId x = lz.loc.forward[a];
      if (x != lz.loc.lattice.bottom && !lz.sh[x])
        return fail_at(c, {{"a", a}, {"m", m}},
                       "the image of " + c.nm(a) + " at " + c.nm(m) +
                           " is neither zero nor strongly hollow");
    }
  }
  return settle(met);
}

Outcome t215_rev(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.ep[a].join_principal) continue;
    ElementId i = residual(c.L, c.L.bottom, a);
    if (!c.quot_lat.at(i).quasi_local) continue;
    bool local_ok = true;
    for (ElementId m : c.lat.max_set) {
      const auto& lzo = c.local_at.at(m);
      if (!lzo) {
        local_ok = false;
        break;
      }
      ElementId x = lzo->loc.forward[a];
      if (x != lzo->loc.lattice.bottom && !lzo->sh[x]) {
        local_ok = false;
        break;
      }
    }
    if (!local_ok) continue;
    met = true;
    if (!c.sh[a])
      return fail_at(c, {{"a", a}},
                     c.nm(a) + " is locally strongly hollow over a quasi local quotient yet "
                               "not strongly hollow");
  }
  return settle(met);
}

Outcome t218_fwd(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.ep[a].neutral || !c.ep[a].complemented || !c.sh[a]) continue;
    met = true;
    auto tops = strict_down_maximals(c, a);
    if (tops.size() != 1)
      return fail_at(c, {{"a", a}},
                     "the elements strictly below " + c.nm(a) + " have " +
                         std::to_string(tops.size()) + " maximal members instead of one");
  }
  return settle(met);
}

Outcome t218_rev(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.ep[a].neutral || !c.ep[a].complemented) continue;
    if (strict_down_maximals(c, a).size() != 1) continue;
    met = true;
    if (!c.sh[a])
      return fail_at(c, {{"a", a}},
                     "a unique maximal element below " + c.nm(a) +
                         " without strong hollowness");
  }
  return settle(met);
}

Outcome t220_fwd(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.ep[a].neutral || !c.ep[a].complemented || !c.sh[a]) continue;
    met = true;
    for (ElementId x = 0; x < c.n(); ++x)
      if (x != a && c.leq(x, a) && !c.leq(x, c.lat.jacobson))
        return fail_at(c, {{"a", a}, {"x", x}},
                       c.nm(x) + " lies strictly below " + c.nm(a) +
                           " but not below the radical");
  }
  return settle(met);
}

Outcome t220_rev(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.ep[a].neutral || !c.ep[a].complemented) continue;
    bool inside = true;
    for (ElementId x = 0; x < c.n() && inside; ++x)
      inside = x == a || !c.leq(x, a) || c.leq(x, c.lat.jacobson);
    if (!inside) continue;
    met = true;
    if (!c.sh[a])
      return fail_at(c, {{"a", a}},
                     "everything strictly below " + c.nm(a) +
                         " is in the radical yet it is not strongly hollow");
  }
  return settle(met);
}

bool t225_cond(const Ctx& c, ElementId a, int k) {
  switch (k) {
    case 1: return c.ep[c.kap[a]].prime;
    case 2: return !c.leq(c.L.mul(a, a), c.kap[a]);
    case 3: return c.L.mul(a, a) == a;
    case 4: return !c.leq(a, c.lat.jacobson);
    default: return c.ep[c.kap[a]].maximal && c.kap[a] == c.la[a];
  }
}

Outcome t225_dir(const Ctx& c, int from, int to) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.ep[a].weak_join_principal || !c.sh[a]) continue;
    if (!t225_cond(c, a, from)) continue;
    met = true;
    if (!t225_cond(c, a, to))
      return fail_at(c, {{"a", a}},
                     "condition (" + std::to_string(from) + ") holds at " + c.nm(a) +
                         " but condition (" + std::to_string(to) + ") fails");
  }
  return settle(met);
}

Outcome t226(const Ctx& c) {
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.csh[a]) continue;
    met = true;
    if (!c.ep[c.kap[a]].completely_strongly_irreducible)
      return fail_at(c, {{"a", a}},
                     "kappa of " + c.nm(a) + " is not completely strongly irreducible");
  }
  return settle(met);
}

Outcome max_hollow_exists(const Ctx& c) {
  for (ElementId x = 0; x < c.n(); ++x)
    if (maximal_hollow_below(c.L, x).empty())
      return fail_at(c, {{"x", x}},
                     "no maximal strongly hollow element exists below " + c.nm(x));
  return settle(true);
}

// --------------------------------------------------- quasi local checks

Outcome s3p1_item(const Ctx& c, int item) {
  if (!c.lat.quasi_local || !c.lat.weak_r_lattice || c.n() < 2) return settle(false);
  ElementId m = c.lat.max_set.at(0);
  bool met = false;
  for (ElementId i = 0; i < c.n(); ++i) {
    if (!c.ep[i].strongly_irreducible) continue;
    ElementId r = residual(c.L, i, m);
    if (!c.leq(i, r) || i == r) continue;
    met = true;
    switch (item) {
      case 1:
        if (!c.ep[r].principal)
          return fail_at(c, {{"i", i}},
                         "the residual of " + c.nm(i) +
                             " by the maximal element is not principal");
        break;
      case 2:
        if (c.L.mul(r, m) != i)
          return fail_at(c, {{"i", i}},
                         c.nm(i) + " differs from its residual multiplied back by the "
                                   "maximal element");
        break;
      case 20:
        if (r != i)
          return fail_at(c, {{"i", i}},
                         "the identity i = (i:m) conflicts with the strict gap below the "
                         "residual at " + c.nm(i));
        break;
      default:
        for (ElementId j = 0; j < c.n(); ++j)
          if (!c.leq(j, i) && !c.leq(r, j))
            return fail_at(c, {{"i", i}, {"j", j}},
                           c.nm(j) + " is neither below " + c.nm(i) +
                               " nor above its residual");
        break;
    }
  }
  return settle(met);
}

Outcome s3l2(const Ctx& c) {
  if (!c.lat.quasi_local || c.n() < 2) return settle(false);
  ElementId m = c.lat.max_set.at(0);
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.csh[a] || !c.ep[a].principal) continue;
    met = true;
    ElementId r = residual(c.L, c.kap[a], m);
    if (!c.leq(c.kap[a], r) || c.kap[a] == r)
      return fail_at(c, {{"a", a}},
                     "kappa of " + c.nm(a) +
                         " does not grow strictly under the residual by the maximal element");
  }
  return settle(met);
}

Outcome s3p3(const Ctx& c) {
  if (!c.lat.quasi_local || !c.lat.principally_generated || c.n() < 2) return settle(false);
  ElementId m = c.lat.max_set.at(0);
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.csh[a]) continue;
    met = true;
    if (!comparable_all(c, a))
      return fail_at(c, {{"a", a}}, c.nm(a) + " is not comparable to every element");
    if (a != residual(c.L, c.kap[a], m))
      return fail_at(c, {{"a", a}},
                     c.nm(a) + " differs from the residual of its kappa by the maximal "
                               "element");
  }
  return settle(met);
}

Outcome s3t4_12(const Ctx& c) {
  if (!c.lat.weak_r_lattice || !c.lat.quasi_local) return settle(false);
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (!c.ep[a].principal) continue;
    met = true;
    if ((bool)c.csh[a] != comparable_all(c, a))
      return fail_at(c, {{"a", a}},
                     "complete strong hollowness and comparability disagree at " + c.nm(a));
  }
  return settle(met);
}

Outcome s3t4_21(const Ctx& c) {
  if (!c.lat.weak_r_lattice) return settle(false);
  for (ElementId a = 0; a < c.n(); ++a) {
    if (!c.ep[a].principal) continue;
    if ((bool)c.csh[a] != comparable_all(c, a)) return settle(false);
  }
  if (!c.lat.quasi_local)
    return fail_at(c, {},
                   "principal elements are completely strongly hollow exactly when "
                   "comparable, yet the lattice is not quasi local");
  return settle(true);
}

// --------------------------------------------------- semi simple checks

Outcome p31_fwd(const Ctx& c) {
  if (!c.lat.semi_simple) return settle(false);
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.sh[a]) continue;
    met = true;
    if (!c.ep[a].minimal)
      return fail_at(c, {{"a", a}},
                     "strongly hollow in a semi simple lattice without being an atom");
  }
  return settle(met);
}

Outcome p31_rev(const Ctx& c) {
  if (!c.lat.semi_simple) return settle(false);
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.ep[a].minimal) continue;
    met = true;
    if (!c.sh[a])
      return fail_at(c, {{"a", a}},
                     "an atom of a semi simple lattice that is not strongly hollow");
  }
  return settle(met);
}

Outcome l32(const Ctx& c) {
  if (!c.lat.semi_simple) return settle(false);
  bool met = false;
  for (ElementId e = 0; e < c.n(); ++e) {
    if (e == c.L.bottom || missed_maximal_count(c, e) != 1) continue;
    met = true;
    if (!c.ep[e].minimal || !c.ep[e].complemented)
      return fail_at(c, {{"e", e}},
                     c.nm(e) + " misses exactly one maximal element yet is not a "
                               "complemented atom");
  }
  return settle(met);
}

Outcome l33(const Ctx& c) {
  if ((int)c.lat.max_set.size() < 2) return settle(false);
  bool met = false;
  for (ElementId m = 0; m < c.n(); ++m) {
    if (!c.ep[m].maximal || !c.sh[m]) continue;
    met = true;
    if (!c.ep[m].idempotent)
      return fail_at(c, {{"m", m}},
                     "a strongly hollow maximal element beside other maximal elements "
                     "that is not idempotent");
  }
  return settle(met);
}

Outcome gelfand_separation(const Ctx& c) {
  if (!c.lat.gelfand || (int)c.lat.max_set.size() < 2) return settle(false);
  for (ElementId m1 : c.lat.max_set)
    for (ElementId m2 : c.lat.max_set) {
      if (m1 == m2) continue;
      bool found = false;
      for (ElementId s = 0; s < c.n() && !found; ++s) {
        if (c.leq(s, m1)) continue;
        for (ElementId t = 0; t < c.n() && !found; ++t) {
          if (c.leq(t, m2)) continue;
          found = c.L.mul(s, t) == c.L.bottom;
        }
      }
      if (!found)
        return fail_at(c, {{"m1", m1}, {"m2", m2}},
                       "no pair avoiding " + c.nm(m1) + " and " + c.nm(m2) +
                           " multiplies to the bottom");
    }
  return settle(true);
}

bool t34_cond(const Ctx& c, ElementId a, int k) {
  switch (k) {
    case 1: return (bool)c.sh[a];
    case 2: return products_below_stay_nonzero(c, a);
    default: return c.ep[a].minimal;
  }
}

Outcome t34_dir(const Ctx& c, int from, int to) {
  if (!c.lat.gelfand || !c.lat.semi_simple) return settle(false);
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !t34_cond(c, a, from)) continue;
    met = true;
    if (!t34_cond(c, a, to))
      return fail_at(c, {{"a", a}},
                     "condition (" + std::to_string(from) + ") holds at " + c.nm(a) +
                         " but condition (" + std::to_string(to) + ") fails");
  }
  return settle(met);
}

Outcome c36_fwd(const Ctx& c) {
  if (!c.lat.semi_simple || !c.wmp_generated) return settle(false);
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !products_below_stay_nonzero(c, a)) continue;
    met = true;
    if (!c.ep[a].uniform)
      return fail_at(c, {{"a", a}},
                     "products below " + c.nm(a) + " stay nonzero yet it is not uniform");
  }
  return settle(met);
}

Outcome c36_rev(const Ctx& c) {
  if (!c.lat.semi_simple || !c.wmp_generated) return settle(false);
  bool met = false;
  for (ElementId a = 0; a < c.n(); ++a) {
    if (a == c.L.bottom || !c.ep[a].uniform) continue;
    met = true;
    if (!products_below_stay_nonzero(c, a))
      return fail_at(c, {{"a", a}},
                     c.nm(a) + " is uniform yet two elements below it multiply to zero");
  }
  return settle(met);
}

Outcome prim_idem_fwd(const Ctx& c) {
  if (!c.lat.i0) return settle(false);
  bool met = false;
  for (ElementId e = 0; e < c.n(); ++e) {
    if (e == c.L.bottom || !c.ep[e].complemented || !c.ep[e].neutral || !c.csh[e]) continue;
    met = true;
    if (!c.ep[e].primitive_idempotent)
      return fail_at(c, {{"e", e}},
                     c.nm(e) + " is completely strongly hollow yet not a primitive "
                               "idempotent");
  }
  return settle(met);
}

Outcome prim_idem_rev(const Ctx& c) {
  if (!c.lat.i0) return settle(false);
  bool met = false;
  for (ElementId e = 0; e < c.n(); ++e) {
    if (e == c.L.bottom || !c.ep[e].complemented || !c.ep[e].neutral ||
        !c.ep[e].primitive_idempotent)
      continue;
    met = true;
    if (!c.csh[e])
      return fail_at(c, {{"e", e}},
                     c.nm(e) + " is a primitive idempotent yet not completely strongly "
                               "hollow");
  }
  return settle(met);
}

bool t38_cond(const Ctx& c, ElementId p) {
  ElementId m = c.L.top;
  for (ElementId q : c.lat.minimal_primes)
    if (q != p) m = c.L.meet(m, q);
  if (c.leq(m, p)) return false;
  const LatticeProfile& qp = c.quot_lat.at(p);
  return qp.quasi_local && qp.domain;
}

Outcome t38_fwd(const Ctx& c) {
  if (!c.lat.reduced || !c.lat.prufer) return settle(false);
  bool has_csh = false;
  for (ElementId a = 0; a < c.n() && !has_csh; ++a)
    has_csh = a != c.L.bottom && c.csh[a];
  if (!has_csh) return settle(false);
  for (ElementId p : c.lat.minimal_primes)
    if (t38_cond(c, p)) return settle(true);
  return fail_at(c, {},
                 "a nonzero completely strongly hollow element exists but no minimal prime "
                 "gives a quasi local domain quotient away from the other minimal primes");
}

Outcome t38_rev(const Ctx& c) {
  if (!c.lat.reduced || !c.lat.prufer) return settle(false);
  for (ElementId p : c.lat.minimal_primes) {
    if (!t38_cond(c, p)) continue;
    for (ElementId a = 0; a < c.n(); ++a)
      if (a != c.L.bottom && c.csh[a]) return settle(true);
    return fail_at(c, {{"p", p}},
                   "the minimal prime " + c.nm(p) +
                       " gives a quasi local domain quotient yet no nonzero element is "
                       "completely strongly hollow");
  }
  return settle(false);
}

// ------------------------------------------------------- product checks

bool product_gate(const Ctx& c) {
  return c.spec && c.spec->kind == FamilySpec::Kind::product && c.spec->factors.size() == 2;
}

Outcome t42(const Ctx& c) {
  if (!product_gate(c)) return settle(false);
  MultLattice A = generate(c.spec->factors[0]);
  MultLattice B = generate(c.spec->factors[1]);
  if (c.n() != A.n * B.n) return settle(false);
  const int bn = B.n;
  auto pair_id = [&](ElementId a, ElementId b) { return a * bn + b; };
  std::vector<char> shA(A.n), shB(B.n);
  std::vector<ElementId> kapA(A.n), laA(A.n), kapB(B.n), laB(B.n);
  for (ElementId a = 0; a < A.n; ++a) {
    shA[a] = is_strongly_hollow(A, a);
    kapA[a] = kappa(A, a);
    laA[a] = kappa_residual(A, a);
  }
  for (ElementId b = 0; b < B.n; ++b) {
    shB[b] = is_strongly_hollow(B, b);
    kapB[b] = kappa(B, b);
    laB[b] = kappa_residual(B, b);
  }
  for (ElementId x = 0; x < c.n(); ++x) {
    ElementId a = x / bn, b = x % bn;
    bool claim = (b == B.bottom && shA[a]) || (a == A.bottom && shB[b]);
    if ((bool)c.sh[x] != claim)
      return fail_at(c, {{"x", x}},
                     "the strongly hollow elements of the product do not match the axis "
                     "description at " + c.nm(x));
    if ((bool)c.csh[x] != (bool)c.sh[x])
      return fail_at(c, {{"x", x}},
                     "strong and complete strong hollowness disagree at " + c.nm(x));
    if (!c.sh[x] || x == c.L.bottom) continue;
    ElementId want_kap, want_la;
    if (b == B.bottom) {
      want_kap = pair_id(kapA[a], B.top);
      want_la = pair_id(laA[a], B.top);
    } else {
      want_kap = pair_id(A.top, kapB[b]);
      want_la = pair_id(A.top, laB[b]);
    }
    if (c.kap[x] != want_kap)
      return fail_at(c, {{"x", x}},
                     "kappa of " + c.nm(x) + " is not the factor kappa paired with the "
                                             "other top");
    if (c.la[x] != want_la)
      return fail_at(c, {{"x", x}},
                     "the kappa residual of " + c.nm(x) +
                         " is not the factor residual paired with the other top");
  }
  return settle(true);
}

Outcome prodrep_fwd(const Ctx& c) {
  if (!product_gate(c)) return settle(false);
  for (ElementId x = 0; x < c.n(); ++x)
    if (!c.rep[x]) return settle(false);
  MultLattice A = generate(c.spec->factors[0]);
  MultLattice B = generate(c.spec->factors[1]);
  for (ElementId a = 0; a < A.n; ++a)
    if (!is_representable(A, a))
      return fail_at(c, {},
                     "every product element is representable yet " + A.name_of(a) +
                         " in the left factor is not");
  for (ElementId b = 0; b < B.n; ++b)
    if (!is_representable(B, b))
      return fail_at(c, {},
                     "every product element is representable yet " + B.name_of(b) +
                         " in the right factor is not");
  return settle(true);
}

Outcome prodrep_rev(const Ctx& c) {
  if (!product_gate(c)) return settle(false);
  MultLattice A = generate(c.spec->factors[0]);
  MultLattice B = generate(c.spec->factors[1]);
  for (ElementId a = 0; a < A.n; ++a)
    if (!is_representable(A, a)) return settle(false);
  for (ElementId b = 0; b < B.n; ++b)
    if (!is_representable(B, b)) return settle(false);
  for (ElementId x = 0; x < c.n(); ++x)
    if (!c.rep[x])
      return fail_at(c, {{"x", x}},
                     "both factors are fully representable yet " + c.nm(x) + " is not");
  return settle(true);
}

// ------------------------------------------------ representation checks

Outcome rep_uniqueness(const Ctx& c) {
  bool met = false;
  for (ElementId x = 0; x < c.n(); ++x) {
    if (!c.rep[x]) continue;
    std::vector<ElementId> pool;
    for (ElementId p = 0; p < c.n(); ++p)
      if (p != c.L.bottom && c.csh[p] && c.leq(p, x)) pool.push_back(p);
    if (pool.size() > 16) continue;
    met = true;
    std::optional<std::vector<ElementId>> first;
    for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
      ElementId j = c.L.bottom;
      for (std::size_t t = 0; t < pool.size(); ++t)
        if (mask >> t & 1u) j = c.L.join(j, pool[t]);
      if (j != x) continue;
      bool minimal = true;
      for (std::size_t t = 0; t < pool.size() && minimal; ++t) {
        if (!(mask >> t & 1u)) continue;
        ElementId rest = c.L.bottom;
        for (std::size_t u = 0; u < pool.size(); ++u)
          if (u != t && (mask >> u & 1u)) rest = c.L.join(rest, pool[u]);
        minimal = !c.leq(pool[t], rest);
      }
      if (!minimal) continue;
      std::vector<ElementId> fam;
      for (std::size_t t = 0; t < pool.size(); ++t)
        if (mask >> t & 1u) fam.push_back(pool[t]);
      if (!first)
        first = std::move(fam);
      else if (*first != fam)
        return fail_at(c, {{"x", x}},
                       "two distinct minimal families of completely strongly hollow "
                       "elements join to " + c.nm(x));
    }
  }
  return settle(met);
}

Outcome l45(const Ctx& c) {
  if (!c.rep[c.L.top]) return settle(false);
  auto parts = minimal_representation(c.L, c.L.top);
  if (c.lat.max_set.size() > parts->size())
    return fail_at(c, {},
                   "the lattice has " + std::to_string(c.lat.max_set.size()) +
                       " maximal elements but the top splits into only " +
                       std::to_string(parts->size()) + " hollow parts");
  return settle(true);
}

Outcome l46(const Ctx& c) {
  for (ElementId x = 0; x < c.n(); ++x)
    if (x != c.L.bottom && !c.rep[x]) return settle(false);
  for (ElementId a : c.lat.atoms)
    if (!c.csh[a])
      return fail_at(c, {{"a", a}},
                     "the atom " + c.nm(a) + " is not completely strongly hollow");
  auto parts = minimal_representation(c.L, c.lat.socle);
  if (!parts)
    return fail_at(c, {}, "the socle is not representable");
  std::vector<ElementId> want = c.lat.atoms, got = *parts;
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  if (want != got)
    return fail_at(c, {},
                   "the atoms differ from the minimal representation of the socle");
  return settle(true);
}

// --------------------------------------------------------- chain checks

Outcome l51(const Ctx& c) {
  if (!c.lat.weak_r_lattice || !c.lat.quasi_local || !c.lat.principal_element_lattice)
    return settle(false);
  if (!c.lat.chain)
    return fail_at(c, {},
                   "a quasi local lattice of principal elements that is not a chain");
  return settle(true);
}

Outcome l52(const Ctx& c) {
  if (!c.lat.chain) return settle(false);
  for (ElementId x = 0; x < c.n(); ++x)
    if (!c.csh[x])
      return fail_at(c, {{"x", x}},
                     "the chain element " + c.nm(x) + " is not completely strongly hollow");
  return settle(true);
}

Outcome p53_fwd(const Ctx& c) {
  if (!c.lat.weak_r_lattice) return settle(false);
  for (ElementId x = 0; x < c.n(); ++x)
    if (!c.closure[x]) return settle(false);
  if (!c.lat.chain)
    return fail_at(c, {},
                   "every element is a product of completely strongly hollow elements yet "
                   "the lattice is not a chain");
  return settle(true);
}

Outcome p53_rev(const Ctx& c) {
  if (!c.lat.weak_r_lattice || !c.lat.chain) return settle(false);
  for (ElementId x = 0; x < c.n(); ++x)
    if (!c.closure[x])
      return fail_at(c, {{"x", x}},
                     c.nm(x) + " is not a product of completely strongly hollow elements");
  return settle(true);
}

Outcome p54_fwd(const Ctx& c) {
  if (!c.lat.weak_r_lattice) return settle(false);
  for (ElementId a = 0; a < c.n(); ++a)
    if (a != c.L.bottom && !c.sh[a]) return settle(false);
  if (!c.lat.chain)
    return fail_at(c, {},
                   "every nonzero element is strongly hollow yet the lattice is not a chain");
  return settle(true);
}

Outcome p54_rev(const Ctx& c) {
  if (!c.lat.weak_r_lattice || !c.lat.chain) return settle(false);
  for (ElementId a = 0; a < c.n(); ++a)
    if (a != c.L.bottom && !c.sh[a])
      return fail_at(c, {{"a", a}},
                     "the chain element " + c.nm(a) + " is not strongly hollow");
  return settle(true);
}

bool t55_cond(const Ctx& c, int k, ElementId* wit) {
  switch (k) {
    case 1:
      for (ElementId p : c.lat.spec_set)
        if (p != c.L.bottom && !c.csh[p]) {
          *wit = p;
          return false;
        }
      return true;
    case 2:
      return c.is_b4 ||
             (c.lat.chain && c.lat.noether && (c.lat.ufd || c.lat.special_pel));
    case 3:
      for (ElementId x = 0; x < c.n(); ++x)
        if (x != c.L.bottom && !c.csh[x]) {
          *wit = x;
          return false;
        }
      return true;
    default:
      for (ElementId x = 0; x < c.n(); ++x)
        if (x != c.L.bottom && !c.closure[x]) {
          *wit = x;
          return false;
        }
      return true;
  }
}

Outcome t55_dir(const Ctx& c, int from, int to) {
  if (!c.lat.weak_r_lattice || c.n() < 2) return settle(false);
  ElementId w = -1;
  if (!t55_cond(c, from, &w)) return settle(false);
  ElementId w2 = -1;
  if (t55_cond(c, to, &w2)) return settle(true);
  std::string detail = "condition (" + std::to_string(from) + ") holds but condition (" +
                       std::to_string(to) + ") fails";
  if (w2 >= 0)
    return fail_at(c, {{"x", w2}}, detail + " at " + c.nm(w2));
  return fail_at(c, {}, detail);
}

bool p56_cond1(const Ctx& c, ElementId* wit) {
  for (ElementId m : c.lat.max_set)
    if (m != c.L.bottom && !c.csh[m]) {
      *wit = m;
      return false;
    }
  return true;
}

bool p56_cond2(const Ctx& c) {
  if (c.is_b4) return true;
  return c.lat.quasi_local && c.lat.max_set.size() == 1 &&
         c.ep[c.lat.max_set[0]].principal;
}

Outcome p56_12(const Ctx& c) {
  if (!c.lat.weak_r_lattice || c.n() < 2) return settle(false);
  ElementId w = -1;
  if (!p56_cond1(c, &w)) return settle(false);
  if (!p56_cond2(c))
    return fail_at(c, {},
                   "every nonzero maximal element is completely strongly hollow yet the "
                   "lattice is neither the square nor local with a principal maximal "
                   "element");
  return settle(true);
}

Outcome p56_21(const Ctx& c) {
  if (!c.lat.weak_r_lattice || c.n() < 2 || !p56_cond2(c)) return settle(false);
  ElementId w = -1;
  if (!p56_cond1(c, &w))
    return fail_at(c, {{"m", w}},
                   "the maximal element " + c.nm(w) + " is not completely strongly hollow");
  return settle(true);
}

// -------------------------------------------------------------- registry

struct CheckDef {
  const char* id;
  const char* summary;
  bool informational;
  Outcome (*fn)(const Ctx&);
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"T2.3(=>)", "a strongly hollow join of strongly hollow parts forces them comparable",
       false, t23_fwd},
      {"T2.3(<=)", "a join of comparable strongly hollow elements is strongly hollow",
       false, t23_rev},
      {"unique-max-below",
       "a nonzero completely strongly hollow element has a unique maximal element below it",
       false, unique_max_below},
      {"s-plus",
       "a nonzero strongly hollow element never splits and lies under the meet of its "
       "completions",
       false, s_plus},
      {"T2.8",
       "a nonzero strongly hollow element is under the radical or misses exactly one "
       "maximal element",
       false, t28},
      {"P2.9", "a strongly hollow element with cancellation forces a quasi local lattice",
       false, p29},
      {"P2.7",
       "in a quasi local lattice a weak principal maximal element is strongly hollow",
       false, p27},
      {"P2.11(=>)", "a completely strongly hollow top forces a quasi local lattice", false,
       p211_fwd},
      {"P2.11(<=)", "a quasi local lattice has a completely strongly hollow top", false,
       p211_rev},
      {"T2.7(=>)", "a nonzero strongly hollow element avoids the join of what it misses",
       false, t27_fwd},
      {"T2.7(<=)",
       "a nonzero element avoiding the join of what it misses is strongly hollow both ways",
       false, t27_rev},
      {"kappa-criterion(=>)",
       "a nonzero completely strongly hollow element avoids its kappa", false, kcrit_fwd},
      {"kappa-criterion(<=)",
       "a nonzero element avoiding its kappa is completely strongly hollow", false,
       kcrit_rev},
      {"kappa-monotone",
       "kappa preserves order between completely strongly hollow elements", false,
       kappa_monotone},
      {"quotient-SH", "strong hollowness survives every quotient", false, quotient_sh},
      {"quotient-CSH", "complete strong hollowness survives every quotient", false,
       quotient_csh},
      {"La-maximal",
       "for a strongly hollow join principal element the kappa residual is the top or "
       "maximal",
       false, la_maximal},
      {"T2.13",
       "a strongly hollow join principal element stays strongly hollow after localizing at "
       "its kappa residual",
       false, t213},
      {"T2.14",
       "the quotient above the annihilator of a strongly hollow join principal element is "
       "local at the image of the kappa residual",
       false, t214},
      {"T2.15(=>)",
       "a strongly hollow join principal element has a quasi local annihilator quotient and "
       "is locally strongly hollow",
       false, t215_fwd},
      {"T2.15(<=)",
       "a join principal element with quasi local annihilator quotient that is locally "
       "strongly hollow is strongly hollow",
       false, t215_rev},
      {"T2.18(=>)",
       "a nonzero neutral complemented strongly hollow element has a unique maximal "
       "element below it",
       false, t218_fwd},
      {"T2.18(<=)",
       "a nonzero neutral complemented element with a unique maximal element below it is "
       "strongly hollow",
       false, t218_rev},
      {"T2.20(=>)",
       "below a nonzero neutral complemented strongly hollow element everything sits in "
       "the radical",
       false, t220_fwd},
      {"T2.20(<=)",
       "a nonzero neutral complemented element whose strict downset sits in the radical is "
       "strongly hollow",
       false, t220_rev},
      {"T2.25(1=>2)", "for weak join principal strongly hollow elements a prime kappa "
                      "keeps the square off kappa",
       false, [](const Ctx& c) { return t225_dir(c, 1, 2); }},
      {"T2.25(2=>3)", "a square off kappa forces idempotence", false,
       [](const Ctx& c) { return t225_dir(c, 2, 3); }},
      {"T2.25(3=>4)", "idempotence forces escape from the radical", false,
       [](const Ctx& c) { return t225_dir(c, 3, 4); }},
      {"T2.25(4=>5)", "escape from the radical forces a maximal kappa equal to the "
                      "residual",
       false, [](const Ctx& c) { return t225_dir(c, 4, 5); }},
      {"T2.25(5=>1)", "a maximal kappa equal to the residual is prime", false,
       [](const Ctx& c) { return t225_dir(c, 5, 1); }},
      {"T2.26",
       "kappa of a nonzero completely strongly hollow element is completely strongly "
       "irreducible",
       false, t226},
      {"max-hollow-exists", "below every element some strongly hollow element is maximal",
       false, max_hollow_exists},
      {"S3.P1(1)",
       "in a local weak r-lattice the maximal residual of a strongly irreducible element "
       "with a strict gap is principal",
       false, [](const Ctx& c) { return s3p1_item(c, 1); }},
      {"S3.P1(2)", "the residual multiplied back by the maximal element returns the "
                   "element",
       false, [](const Ctx& c) { return s3p1_item(c, 2); }},
      {"S3.P1(2-stated)", "the element equals its residual by the maximal element", true,
       [](const Ctx& c) { return s3p1_item(c, 20); }},
      {"S3.P1(3)", "everything is below the element or above its maximal residual", false,
       [](const Ctx& c) { return s3p1_item(c, 3); }},
      {"S3.L2",
       "in a local lattice kappa of a principal completely strongly hollow element grows "
       "strictly under the maximal residual",
       false, s3l2},
      {"S3.P3",
       "in a local principally generated lattice a nonzero completely strongly hollow "
       "element is comparable to everything and equals the maximal residual of its kappa",
       false, s3p3},
      {"S3.T4(1=>2)",
       "in a local weak r-lattice a principal element is completely strongly hollow "
       "exactly when comparable to everything",
       false, s3t4_12},
      {"S3.T4(2=>1)",
       "if principal elements are completely strongly hollow exactly when comparable the "
       "weak r-lattice is quasi local",
       false, s3t4_21},
      {"P3.1(=>)", "in a semi simple lattice nonzero strongly hollow elements are atoms",
       false, p31_fwd},
      {"P3.1(<=)", "in a semi simple lattice atoms are strongly hollow", false, p31_rev},
      {"L3.2",
       "in a semi simple lattice an element missing exactly one maximal element is a "
       "complemented atom",
       false, l32},
      {"L3.3",
       "beside other maximal elements a strongly hollow maximal element is idempotent",
       false, l33},
      {"gelfand-separation",
       "distinct maximal elements of a gelfand lattice are separated by a zero product",
       false, gelfand_separation},
      {"T3.4(1=>2)",
       "in a gelfand semi simple lattice strong hollowness keeps products below nonzero",
       false, [](const Ctx& c) { return t34_dir(c, 1, 2); }},
      {"T3.4(2=>3)", "nonzero products below force an atom", false,
       [](const Ctx& c) { return t34_dir(c, 2, 3); }},
      {"T3.4(3=>1)", "atoms are strongly hollow", false,
       [](const Ctx& c) { return t34_dir(c, 3, 1); }},
      {"C3.6(=>)",
       "in a semi simple lattice generated by weak meet principal elements nonzero products "
       "below force uniformity",
       false, c36_fwd},
      {"C3.6(<=)", "uniform elements keep products below nonzero", false, c36_rev},
      {"primitive-idempotent(=>)",
       "a nonzero neutral complemented completely strongly hollow element is a primitive "
       "idempotent",
       false, prim_idem_fwd},
      {"primitive-idempotent(<=)",
       "a nonzero neutral complemented primitive idempotent is completely strongly hollow",
       false, prim_idem_rev},
      {"T3.8(=>)",
       "a reduced prufer lattice with a nonzero completely strongly hollow element has a "
       "minimal prime with a quasi local domain quotient away from the others",
       false, t38_fwd},
      {"T3.8(<=)",
       "such a minimal prime forces a nonzero completely strongly hollow element", false,
       t38_rev},
      {"T4.2",
       "hollow elements of a binary product sit on the axes with kappa paired against the "
       "other top",
       false, t42},
      {"product-representability(=>)",
       "full representability of a product passes to both factors", false, prodrep_fwd},
      {"product-representability(<=)",
       "full representability of both factors passes to the product", false, prodrep_rev},
      {"representation-uniqueness",
       "minimal families of completely strongly hollow elements joining to a target agree",
       false, rep_uniqueness},
      {"L4.5",
       "a representable top bounds the number of maximal elements by its minimal "
       "representation",
       false, l45},
      {"L4.6",
       "full representability makes the atoms the minimal representation of the socle",
       false, l46},
      {"L5.1",
       "a quasi local weak r-lattice of principal elements is a chain", false, l51},
      {"L5.2", "every element of a chain is completely strongly hollow", false, l52},
      {"P5.3(=>)",
       "if every element is a product of completely strongly hollow elements the weak "
       "r-lattice is a chain",
       false, p53_fwd},
      {"P5.3(<=)", "in a chain every element is such a product", false, p53_rev},
      {"P5.4(=>)",
       "if every nonzero element is strongly hollow the weak r-lattice is a chain", false,
       p54_fwd},
      {"P5.4(<=)", "in a chain every nonzero element is strongly hollow", false, p54_rev},
      {"T5.5(1=>2)",
       "completely strongly hollow nonzero primes force the square or a noether chain",
       false, [](const Ctx& c) { return t55_dir(c, 1, 2); }},
      {"T5.5(2=>3)", "the square or a noether chain makes every nonzero element completely "
                     "strongly hollow",
       false, [](const Ctx& c) { return t55_dir(c, 2, 3); }},
      {"T5.5(3=>4)", "completely strongly hollow elements generate everything by products",
       false, [](const Ctx& c) { return t55_dir(c, 3, 4); }},
      {"T5.5(4=>1)", "product generation makes nonzero primes completely strongly hollow",
       false, [](const Ctx& c) { return t55_dir(c, 4, 1); }},
      {"P5.6(1=>2)",
       "completely strongly hollow maximal elements force the square or a local principal "
       "maximal element",
       false, p56_12},
      {"P5.6(2=>1)",
       "the square or a local principal maximal element makes nonzero maximal elements "
       "completely strongly hollow",
       false, p56_21},
  };
  return defs;
}

const CheckDef* find_check(const std::string& id) {
  for (const CheckDef& d : registry())
    if (id == d.id) return &d;
  return nullptr;
}

Outcome run_check(const CheckDef& def, const Ctx& c) {
  Outcome o = def.fn(c);
  if (def.informational) {
    if (o.status == CheckStatus::holds) o.status = CheckStatus::noted_holds;
    if (o.status == CheckStatus::violated) o.status = CheckStatus::noted_violated;
  }
  return o;
}

template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn fn) {
  if (workers < 2 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto body = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int spawn = std::min<int>(workers, (int)count);
  pool.reserve(spawn);
  for (int w = 0; w < spawn; ++w) pool.emplace_back(body);
  for (std::thread& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)v);
  return buf;
}

}  // namespace

// --------------------------------------------------------------- public

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::violated: return "violated";
    case CheckStatus::hypothesis_unmet: return "hypothesis-unmet";
    case CheckStatus::noted_holds: return "noted-holds";
    case CheckStatus::noted_violated: return "noted-violated";
  }
  return "unknown";
}

std::vector<CheckInfo> registered_checks() {
  std::vector<CheckInfo> out;
  for (const CheckDef& d : registry()) out.push_back({d.id, d.summary, d.informational});
  return out;
}

std::vector<std::string> resolve_check_ids(const std::vector<std::string>& tokens) {
  const auto& defs = registry();
  std::vector<char> pick(defs.size(), 0);
  if (tokens.empty()) std::fill(pick.begin(), pick.end(), 1);
  for (const std::string& tok : tokens) {
    if (tok == "all") {
      std::fill(pick.begin(), pick.end(), 1);
      continue;
    }
    bool found = false;
    for (std::size_t i = 0; i < defs.size(); ++i) {
      const std::string id = defs[i].id;
      if (id == tok || (id.size() > tok.size() && id.compare(0, tok.size(), tok) == 0 &&
                        id[tok.size()] == '(')) {
        pick[i] = 1;
        found = true;
      }
    }
    if (!found) throw StructureError("unknown check id: " + tok);
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < defs.size(); ++i)
    if (pick[i]) out.push_back(defs[i].id);
  return out;
}

std::vector<const CheckResult*> SuiteReport::violations() const {
  std::vector<const CheckResult*> out;
  for (const CheckResult& r : results)
    if (r.status == CheckStatus::violated) out.push_back(&r);
  return out;
}

SuiteReport run_suite(const std::vector<FamilySpec>& corpus,
                      const std::vector<std::string>& checks, int workers) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport report;
  report.check_ids = resolve_check_ids(checks);

  std::vector<MultLattice> lats;
  lats.reserve(corpus.size());
  for (const FamilySpec& spec : corpus) lats.push_back(generate(spec));

  std::vector<std::unique_ptr<Ctx>> ctxs(corpus.size());
  parallel_for(corpus.size(), workers, [&](std::size_t i) {
    ctxs[i] = std::make_unique<Ctx>(
        make_ctx(std::move(lats[i]), to_string(corpus[i]), corpus[i]));
  });

  std::vector<const CheckDef*> defs;
  defs.reserve(report.check_ids.size());
  for (const std::string& id : report.check_ids) defs.push_back(find_check(id));

  report.results.resize(corpus.size() * defs.size());
  parallel_for(report.results.size(), workers, [&](std::size_t k) {
    std::size_t li = k / defs.size(), ci = k % defs.size();
    const Ctx& c = *ctxs[li];
    const CheckDef& def = *defs[ci];
    CheckResult& r = report.results[k];
    r.check_id = def.id;
    r.lattice_name = c.L.name;
    r.family = c.family;
    r.lattice_digest = c.digest;
    Outcome o = run_check(def, c);
    r.status = o.status;
    r.detail = o.detail;
    if (o.status == CheckStatus::violated || o.status == CheckStatus::noted_violated)
      r.witness = Witness{r.check_id, r.lattice_name, r.family, o.bindings, o.detail};
  });

  std::sort(report.results.begin(), report.results.end(),
            [](const CheckResult& x, const CheckResult& y) {
              return std::tie(x.check_id, x.lattice_name, x.family) <
                     std::tie(y.check_id, y.lattice_name, y.family);
            });

  report.corpus_description = std::to_string(corpus.size()) + " lattices, " +
                              std::to_string(report.check_ids.size()) + " checks";
  report.wall_clock_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
  return report;
}

bool replay(const Witness& w) {
  const CheckDef* def = find_check(w.check_id);
  if (!def) throw StructureError("stale witness: unknown check id " + w.check_id);
  FamilySpec spec;
  MultLattice L;
  try {
    spec = parse_family(w.family);
    L = generate(spec);
  } catch (const StructureError& e) {
    throw StructureError("stale witness: " + std::string(e.what()));
  }
  for (const auto& [role, name] : w.bindings)
    if (!resolve_element(L, name))
      throw StructureError("stale witness: no element named " + name + " in " + L.name);
  Ctx c = make_ctx(std::move(L), w.family, spec);
  Outcome o = run_check(*def, c);
  if (o.status != CheckStatus::violated && o.status != CheckStatus::noted_violated)
    return false;
  return o.bindings == w.bindings;
}

bool Allowlist::allows(const std::string& check_id, std::uint64_t digest) const {
  for (const auto& [id, cf] : entries)
    if (id == check_id && cf == digest) return true;
  return false;
}

Allowlist parse_allowlist(const std::string& text) {
  Allowlist allow;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string id, key, extra;
    if (!(ls >> id)) continue;
    if (!(ls >> key) || ls >> extra || key.rfind("cf:", 0) != 0 || key.size() != 19)
      throw StructureError("allowlist line is not 'check_id cf:<16 hex digits>': " + line);
    std::uint64_t cf = 0;
    for (int i = 3; i < 19; ++i) {
      char ch = key[i];
      int d;
      if (ch >= '0' && ch <= '9') d = ch - '0';
      else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
      else throw StructureError("allowlist digest is not lowercase hex: " + line);
      cf = cf << 4 | (std::uint64_t)d;
    }
    allow.entries.emplace_back(id, cf);
  }
  return allow;
}

Allowlist load_allowlist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructureError("cannot read allowlist file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_allowlist(buf.str());
}

bool suite_passes(const SuiteReport& report, const Allowlist& allow) {
  for (const CheckResult* r : report.violations())
    if (!allow.allows(r->check_id, r->lattice_digest)) return false;
  return true;
}

std::string to_text(const SuiteReport& report, const Allowlist& allow) {
  std::ostringstream out;
  out << "suite: " << report.corpus_description << "\n\n";
  std::map<std::string, std::array<int, 5>> tally;
  for (const CheckResult& r : report.results)
    ++tally[r.check_id][(int)r.status];
  for (const std::string& id : report.check_ids) {
    const auto& t = tally[id];
    const CheckDef* def = find_check(id);
    out << id << ": ";
    if (def && def->informational)
      out << "noted-holds=" << t[(int)CheckStatus::noted_holds]
          << " noted-violated=" << t[(int)CheckStatus::noted_violated]
          << " unmet=" << t[(int)CheckStatus::hypothesis_unmet] << " (informational)\n";
    else
      out << "holds=" << t[(int)CheckStatus::holds]
          << " violated=" << t[(int)CheckStatus::violated]
          << " unmet=" << t[(int)CheckStatus::hypothesis_unmet] << "\n";
  }
  out << "\nviolations:\n";
  bool any = false;
  for (const CheckResult& r : report.results) {
    if (r.status != CheckStatus::violated) continue;
    any = true;
    out << "  " << r.check_id << " on " << r.lattice_name;
    if (allow.allows(r.check_id, r.lattice_digest)) out << " [allowed]";
    out << ":";
    if (r.witness)
      for (const auto& [role, name] : r.witness->bindings) out << " " << role << "=" << name;
    if (!r.detail.empty()) out << "; " << r.detail;
    out << "\n";
  }
  if (!any) out << "  none\n";
  bool noted = false;
  for (const CheckResult& r : report.results) {
    if (r.status != CheckStatus::noted_violated) continue;
    if (!noted) out << "\nnoted:\n";
    noted = true;
    out << "  " << r.check_id << " on " << r.lattice_name << ":";
    if (r.witness)
      for (const auto& [role, name] : r.witness->bindings) out << " " << role << "=" << name;
    if (!r.detail.empty()) out << "; " << r.detail;
    out << "\n";
  }
  out << "\nverdict: " << (suite_passes(report, allow) ? "pass" : "fail") << "\n";
  out << "# wall-clock: " << report.wall_clock_ms << " ms\n";
  return out.str();
}

std::string to_machine(const SuiteReport& report) {
  std::ostringstream out;
  for (const CheckResult& r : report.results) {
    out << r.check_id << '\t' << r.lattice_name << '\t' << to_string(r.status);
    if (r.witness) {
      out << '\t' << "cf=" << hex16(r.lattice_digest);
      for (const auto& [role, name] : r.witness->bindings) out << ' ' << role << '=' << name;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mlat
