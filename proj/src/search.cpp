#include "mlat/search.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mlat/elements.hpp"
#include "mlat/hollow.hpp"

namespace mlat {

namespace {

constexpr int kCanonCap = 64;
constexpr int kEnumCap = 7;

// One pass of signature-based partition refinement. Colors are dense
// ranks; the old color leads every signature, so each round refines
// the previous partition and keeps class order stable.
void refine_colors(const MultLattice& L, bool with_mul,
                   std::vector<int>& colors) {
  const int n = L.n;
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sigs(n);
    for (int x = 0; x < n; ++x) {
      std::vector<std::array<int, 6>> rows(n);
      for (int y = 0; y < n; ++y)
        rows[y] = {colors[y], L.leq(x, y) ? 1 : 0, L.leq(y, x) ? 1 : 0,
                   colors[L.join(x, y)], colors[L.meet(x, y)],
                   with_mul ? colors[L.mul(x, y)] : 0};
      std::sort(rows.begin(), rows.end());
      std::vector<int> sig;
      sig.reserve(1 + 6 * n);
      sig.push_back(colors[x]);
      for (const auto& r : rows) sig.insert(sig.end(), r.begin(), r.end());
      sigs[x] = {std::move(sig), x};
    }
    std::vector<std::pair<std::vector<int>, int>> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(n, 0);
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++rank;
      next[sorted[i].second] = rank;
    }
    if (next == colors) return;
    colors = std::move(next);
  }
}

std::vector<std::uint8_t> encode_with_colors(const MultLattice& L,
                                             const std::vector<int>& colors,
                                             bool with_mul) {
  const int n = L.n;
  std::vector<int> old_of(n);
  for (int x = 0; x < n; ++x) old_of[colors[x]] = x;
  std::vector<std::uint8_t> bytes;
  bytes.push_back(static_cast<std::uint8_t>(n));
  std::uint8_t acc = 0;
  int bits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      acc = static_cast<std::uint8_t>(acc << 1 |
                                      (L.leq(old_of[i], old_of[j]) ? 1 : 0));
      if (++bits == 8) {
        bytes.push_back(acc);
        acc = 0;
        bits = 0;
      }
    }
  if (bits) bytes.push_back(static_cast<std::uint8_t>(acc << (8 - bits)));
  if (with_mul)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        bytes.push_back(
            static_cast<std::uint8_t>(colors[L.mul(old_of[i], old_of[j])]));
  return bytes;
}

void canon_recurse(const MultLattice& L, bool with_mul,
                   std::vector<int> colors, std::vector<std::uint8_t>& best,
                   bool& have_best) {
  refine_colors(L, with_mul, colors);
  const int n = L.n;
  std::vector<int> members;
  for (int c = 0; members.empty() && c < n; ++c) {
    for (int x = 0; x < n; ++x)
      if (colors[x] == c) members.push_back(x);
    if (members.size() < 2) members.clear();
  }
  if (members.empty()) {
    std::vector<std::uint8_t> bytes = encode_with_colors(L, colors, with_mul);
    if (!have_best || bytes < best) {
      best = std::move(bytes);
      have_best = true;
    }
    return;
  }
  const int split_color = colors[members[0]];
  for (int m : members) {
    std::vector<int> branched(n);
    for (int x = 0; x < n; ++x)
      branched[x] = 2 * colors[x] +
                    (colors[x] == split_color && x != m ? 1 : 0);
    canon_recurse(L, with_mul, std::move(branched), best, have_best);
  }
}

CanonicalForm canonicalize(const MultLattice& L, bool with_mul) {
  if (L.n > kCanonCap)
    throw StructureError("canonical form capped at " +
                         std::to_string(kCanonCap) + " elements");
  std::vector<int> colors(L.n, 1);
  colors[L.bottom] = 0;
  colors[L.top] = 2;
  if (L.n == 1) colors[0] = 0;
  std::vector<std::uint8_t> best;
  bool have_best = false;
  canon_recurse(L, with_mul, std::move(colors), best, have_best);
  return CanonicalForm{std::move(best)};
}

MultLattice decode_form(const CanonicalForm& form, std::string name) {
  const int n = form.bytes.at(0);
  const std::size_t order_bytes = (static_cast<std::size_t>(n) * n + 7) / 8;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t cell = 0; cell < static_cast<std::size_t>(n) * n; ++cell) {
    std::uint8_t byte = form.bytes.at(1 + cell / 8);
    leq[cell] = (byte >> (7 - cell % 8)) & 1;
  }
  std::vector<ElementId> mul(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t cell = 0; cell < static_cast<std::size_t>(n) * n; ++cell)
    mul[cell] = form.bytes.at(1 + order_bytes + cell);
  return MultLattice::from_order(std::move(name), n, leq, mul, {});
}

MultLattice b4_reference() {
  std::vector<std::uint8_t> leq{1, 1, 1, 1, 0, 1, 0, 1,
                                0, 0, 1, 1, 0, 0, 0, 1};
  std::vector<ElementId> mul{0, 0, 0, 0, 0, 1, 0, 1,
                             0, 0, 2, 2, 0, 1, 2, 3};
  return MultLattice::from_order("b4_reference", 4, leq, mul, {});
}

}  // namespace

CanonicalForm canonical_form(const MultLattice& L) {
  return canonicalize(L, true);
}

CanonicalForm canonical_order_form(const MultLattice& L) {
  return canonicalize(L, false);
}

std::uint64_t digest(const CanonicalForm& form) {
  std::uint64_t h = 14695981039346656037ULL;
  for (std::uint8_t b : form.bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t canonical_digest(const MultLattice& L) {
  return digest(canonical_form(L));
}

bool isomorphic(const MultLattice& A, const MultLattice& B) {
  if (A.n != B.n) return false;
  return canonical_form(A) == canonical_form(B);
}

MultLattice relabel(const MultLattice& L, std::uint64_t seed) {
  const int n = L.n;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);

  MultLattice R;
  R.name = L.name;
  R.n = n;
  R.names.resize(n);
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  R.leq_.assign(nn, 0);
  R.join_.assign(nn, 0);
  R.meet_.assign(nn, 0);
  R.mul_.assign(nn, 0);
  for (int x = 0; x < n; ++x) {
    R.names[perm[x]] = L.names[x];
    for (int y = 0; y < n; ++y) {
      R.leq_[perm[x] * n + perm[y]] = L.leq(x, y) ? 1 : 0;
      R.join_[perm[x] * n + perm[y]] = perm[L.join(x, y)];
      R.meet_[perm[x] * n + perm[y]] = perm[L.meet(x, y)];
      R.mul_[perm[x] * n + perm[y]] = perm[L.mul(x, y)];
    }
  }
  R.bottom = perm[L.bottom];
  R.top = perm[L.top];
  return R;
}

namespace {

struct OrderBuilder {
  int n;
  int count = 0;
  std::vector<std::uint8_t> leq;  // n*n, grows logically with count
  std::vector<std::uint32_t> down;  // bitmask of elements <= x, including x

  bool le(int a, int b) const { return leq[a * n + b] != 0; }

  // True when every pair among the first `count` elements has at most
  // one minimal common upper bound; pairs without any are still
  // completable by a later element.
  bool feasible_pair(int a, int b) const {
    std::uint32_t ups = 0;
    for (int u = 0; u < count; ++u)
      if (le(a, u) && le(b, u)) ups |= 1u << u;
    int minimal = 0;
    for (int u = 0; u < count; ++u) {
      if (!(ups & (1u << u))) continue;
      bool is_min = true;
      for (int v = 0; v < count; ++v)
        if (v != u && (ups & (1u << v)) && le(v, u)) is_min = false;
      if (is_min && ++minimal > 1) return false;
    }
    return true;
  }

  bool greatest_exists(std::uint32_t set) const {
    if (set == 0) return false;
    for (int g = count - 1; g >= 0; --g) {
      if (!(set & (1u << g))) continue;
      bool greatest = true;
      for (int x = 0; x < count; ++x)
        if ((set & (1u << x)) && !le(x, g)) greatest = false;
      if (greatest) return true;
    }
    return false;
  }
};

LatticeOrder finish_order(const OrderBuilder& b) {
  LatticeOrder o;
  o.n = b.n;
  o.bottom = 0;
  o.top = b.n - 1;
  o.leq = b.leq;
  const int n = b.n;
  o.join.assign(static_cast<std::size_t>(n) * n, 0);
  o.meet.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      int lub = -1, glb = -1;
      for (int u = 0; u < n; ++u) {
        if (o.le(a, u) && o.le(c, u) && (lub < 0 || o.le(u, lub))) lub = u;
        if (o.le(u, a) && o.le(u, c) && (glb < 0 || o.le(glb, u))) glb = u;
      }
      for (int u = 0; u < n; ++u) {
        if (o.le(a, u) && o.le(c, u) && !o.le(lub, u))
          throw std::logic_error("enumerated order is not a lattice");
        if (o.le(u, a) && o.le(u, c) && !o.le(u, glb))
          throw std::logic_error("enumerated order is not a lattice");
      }
      o.join[a * n + c] = lub;
      o.meet[a * n + c] = glb;
    }
  return o;
}

MultLattice skeleton_lattice(const LatticeOrder& o, std::string name) {
  // Multiplication by meet is only a placeholder so the order can be
  // canonicalized; order forms never look at it.
  return MultLattice::from_order(std::move(name), o.n, o.leq, o.meet, {});
}

void extend_order(OrderBuilder& b,
                  std::vector<std::pair<CanonicalForm, LatticeOrder>>& out) {
  const int n = b.n;
  const int k = b.count;
  if (k == n) {
    LatticeOrder o = finish_order(b);
    CanonicalForm form = canonical_order_form(skeleton_lattice(o, "s"));
    for (const auto& kept : out)
      if (kept.first == form) return;
    out.emplace_back(std::move(form), std::move(o));
    return;
  }

  const std::uint32_t everyone = (1u << k) - 1;
  const bool last = k == n - 1;
  for (std::uint32_t D = 1; D <= everyone; D += 2) {
    if (last && D != everyone) continue;
    std::uint32_t closure = 0;
    for (int a = 0; a < k; ++a)
      if (D & (1u << a)) closure |= b.down[a];
    if (closure != D) continue;

    for (int a = 0; a < k; ++a) {
      b.leq[a * n + k] = (D & (1u << a)) ? 1 : 0;
      b.leq[k * n + a] = 0;
    }
    b.leq[k * n + k] = 1;
    b.down[k] = D | (1u << k);
    b.count = k + 1;

    bool ok = true;
    // Meets with the new element must already exist, since nothing is
    // ever inserted below an existing element.
    for (int a = 0; ok && a < k; ++a)
      if (!(D & (1u << a)) && !b.greatest_exists(b.down[a] & D)) ok = false;
    // Pairs now sharing the new element as an upper bound must not
    // have grown a second minimal one.
    for (int a = 0; ok && a < k; ++a) {
      if (!(D & (1u << a))) continue;
      for (int c = a + 1; ok && c < k; ++c)
        if ((D & (1u << c)) && !b.feasible_pair(a, c)) ok = false;
    }
    if (ok) extend_order(b, out);
    b.count = k;
  }
}

}  // namespace

std::vector<LatticeOrder> enumerate_lattices(int n) {
  if (n < 1 || n > kEnumCap)
    throw StructureError("lattice enumeration takes n in [1, " +
                         std::to_string(kEnumCap) + "]");
  std::vector<std::pair<CanonicalForm, LatticeOrder>> found;
  if (n == 1) {
    OrderBuilder b{1, 1, {1}, {1u}};
    found.emplace_back(CanonicalForm{}, finish_order(b));
  } else {
    OrderBuilder b;
    b.n = n;
    b.count = 1;
    b.leq.assign(static_cast<std::size_t>(n) * n, 0);
    b.leq[0] = 1;
    b.down.assign(n, 0);
    b.down[0] = 1u;
    extend_order(b, found);
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  std::vector<LatticeOrder> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

namespace {

struct MulSearch {
  const LatticeOrder* o;
  int n;
  std::vector<ElementId> mul;  // -1 = unassigned
  std::vector<std::pair<int, int>> cells;
  std::vector<std::pair<CanonicalForm, MultLattice>> found;

  ElementId at(int a, int b) const { return mul[a * n + b]; }

  void set(int a, int b, ElementId v) {
    mul[a * n + b] = v;
    mul[b * n + a] = v;
  }

  bool consistent() const {
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        ElementId ac = at(a, c);
        if (ac < 0) continue;
        for (int e = 0; e < n; ++e) {
          ElementId ce = at(c, e);
          if (ce >= 0 && at(ac, e) >= 0 && at(a, ce) >= 0 &&
              at(ac, e) != at(a, ce))
            return false;
        }
      }
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          ElementId whole = at(a, o->join[c * n + e]);
          if (whole < 0 || at(a, c) < 0 || at(a, e) < 0) continue;
          if (whole != o->join[at(a, c) * n + at(a, e)]) return false;
        }
    return true;
  }

  void leaf() {
    MultLattice L = MultLattice::from_order("candidate", n, o->leq, mul, {});
    AxiomReport r = validate(L);
    if (!r.ok)
      throw std::logic_error("mult enumeration leaf fails " +
                             r.violations().front().axiom);
    CanonicalForm form = canonical_form(L);
    for (const auto& kept : found)
      if (kept.first == form) return;
    MultLattice canon = decode_form(form, "candidate");
    found.emplace_back(std::move(form), std::move(canon));
  }

  void step(std::size_t idx) {
    if (idx == cells.size()) {
      leaf();
      return;
    }
    auto [a, c] = cells[idx];
    for (int v = 0; v < n; ++v) {
      if (!o->le(v, a) || !o->le(v, c)) continue;
      set(a, c, v);
      if (consistent()) step(idx + 1);
    }
    mul[a * n + c] = -1;
    mul[c * n + a] = -1;
  }
};

}  // namespace

std::vector<MultLattice> enumerate_mult_structures(const LatticeOrder& order) {
  const int n = order.n;
  MulSearch s;
  s.o = &order;
  s.n = n;
  s.mul.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    s.set(order.top, x, x);
    s.set(order.bottom, x, order.bottom);
  }
  for (int a = 0; a < n; ++a) {
    if (a == order.bottom || a == order.top) continue;
    for (int c = a; c < n; ++c) {
      if (c == order.bottom || c == order.top) continue;
      s.cells.emplace_back(a, c);
    }
  }
  s.step(0);
  std::sort(s.found.begin(), s.found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<MultLattice> out;
  out.reserve(s.found.size());
  for (auto& f : s.found) out.push_back(std::move(f.second));
  return out;
}

std::vector<MultLattice> enumerate_mult_lattices(int n) {
  std::vector<MultLattice> out;
  int index = 0;
  for (const LatticeOrder& o : enumerate_lattices(n))
    for (MultLattice& L : enumerate_mult_structures(o)) {
      L.name = "model_n" + std::to_string(n) + "_" + std::to_string(index++);
      out.push_back(std::move(L));
    }
  return out;
}

namespace {

struct ModelContext {
  const MultLattice* L;
  LatticeProfile lat;
  std::vector<ElementProfile> elems;
  std::vector<char> hollow;
  std::vector<char> completely;
};

ModelContext make_context(const MultLattice& L) {
  ModelContext ctx;
  ctx.L = &L;
  ctx.lat = lattice_profile(L);
  ctx.elems = element_profiles(L);
  ctx.hollow.assign(L.n, 0);
  ctx.completely.assign(L.n, 0);
  for (int x = 0; x < L.n; ++x) {
    ctx.hollow[x] = is_strongly_hollow(L, x) ? 1 : 0;
    ctx.completely[x] = is_completely_strongly_hollow(L, x) ? 1 : 0;
  }
  return ctx;
}

bool lattice_predicate(const std::string& name, const ModelContext& ctx) {
  const LatticeProfile& p = ctx.lat;
  if (name == "quasi_local") return p.quasi_local;
  if (name == "semi_local") return p.semi_local;
  if (name == "noether") return p.noether;
  if (name == "semi_simple") return p.semi_simple;
  if (name == "reduced") return p.reduced;
  if (name == "domain") return p.domain;
  if (name == "gelfand") return p.gelfand;
  if (name == "distributive") return p.distributive;
  if (name == "chain") return p.chain;
  if (name == "boolean_algebra") return p.boolean_algebra;
  if (name == "principally_generated") return p.principally_generated;
  if (name == "weak_r_lattice") return p.weak_r_lattice;
  if (name == "principal_element_lattice") return p.principal_element_lattice;
  if (name == "prufer") return p.prufer;
  if (name == "zpi") return p.zpi;
  if (name == "pi_lattice") return p.pi_lattice;
  if (name == "ufd") return p.ufd;
  if (name == "special_pel") return p.special_pel;
  if (name == "i0") return p.i0;
  if (name == "le1_maximals") return p.maximal_count <= 1;
  if (name == "le2_maximals") return p.maximal_count <= 2;
  if (name == "is_b4") {
    static const CanonicalForm b4 = canonical_form(b4_reference());
    return ctx.L->n == 4 && canonical_form(*ctx.L) == b4;
  }
  throw StructureError("unknown lattice predicate: " + name);
}

bool element_predicate(const std::string& name, const ModelContext& ctx,
                       ElementId x) {
  if (name.rfind("lattice.", 0) == 0)
    return lattice_predicate(name.substr(8), ctx);
  const ElementProfile& p = ctx.elems[x];
  if (name == "prime") return p.prime;
  if (name == "maximal") return p.maximal;
  if (name == "minimal") return p.minimal;
  if (name == "nilpotent") return p.nilpotent;
  if (name == "idempotent") return p.idempotent;
  if (name == "complemented") return p.complemented;
  if (name == "neutral") return p.neutral;
  if (name == "uniform") return p.uniform;
  if (name == "meet_principal") return p.meet_principal;
  if (name == "join_principal") return p.join_principal;
  if (name == "principal") return p.principal;
  if (name == "weak_meet_principal") return p.weak_meet_principal;
  if (name == "weak_join_principal") return p.weak_join_principal;
  if (name == "weak_principal") return p.weak_principal;
  if (name == "cancellation") return p.cancellation;
  if (name == "strongly_irreducible") return p.strongly_irreducible;
  if (name == "completely_strongly_irreducible")
    return p.completely_strongly_irreducible;
  if (name == "primitive_idempotent") return p.primitive_idempotent;
  if (name == "strongly_hollow") return ctx.hollow[x] != 0;
  if (name == "completely_strongly_hollow") return ctx.completely[x] != 0;
  if (name == "is_top") return x == ctx.L->top;
  if (name == "is_bottom") return x == ctx.L->bottom;
  if (name == "nonzero") return x != ctx.L->bottom;
  throw StructureError("unknown element predicate: " + name);
}

bool eval_predicate(const std::string& raw, const ModelContext& ctx,
                    ElementId x, bool element_scope) {
  std::string name = raw;
  bool negate = false;
  if (!name.empty() && name[0] == '!') {
    negate = true;
    name.erase(0, 1);
  }
  bool value = element_scope ? element_predicate(name, ctx, x)
                             : lattice_predicate(name, ctx);
  return negate != value;
}

void validate_predicate_name(const std::string& raw, bool element_scope) {
  // Evaluate once against a throwaway model so that unknown names
  // surface at parse time.
  static const MultLattice probe = b4_reference();
  static const ModelContext ctx = make_context(probe);
  eval_predicate(raw, ctx, 0, element_scope);
}

}  // namespace

Query parse_query(const std::string& text) {
  Query q;
  bool scope_seen = false;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.rfind("scope:", 0) == 0) {
      std::string scope = tok.substr(6);
      if (scope == "element")
        q.element_scope = true;
      else if (scope == "lattice")
        q.element_scope = false;
      else
        throw StructureError("scope must be element or lattice, got " +
                             scope);
      scope_seen = true;
    } else if (tok.rfind("hyp=", 0) == 0) {
      std::string list = tok.substr(4);
      std::string item;
      std::istringstream parts(list);
      while (std::getline(parts, item, ','))
        if (!item.empty()) q.hypotheses.push_back(item);
    } else if (tok.rfind("concl=", 0) == 0) {
      q.conclusion = tok.substr(6);
    } else {
      throw StructureError("unrecognized query token: " + tok);
    }
  }
  if (!scope_seen) throw StructureError("query needs a scope: prefix");
  if (q.conclusion.empty()) throw StructureError("query needs a concl=");
  for (const std::string& h : q.hypotheses)
    validate_predicate_name(h, q.element_scope);
  validate_predicate_name(q.conclusion, q.element_scope);
  return q;
}

MineResult mine(const Query& query, int max_n) {
  if (max_n < 1 || max_n > 6)
    throw StructureError("mine takes max_n in [1, 6]");
  MineResult result;
  result.holds = true;
  for (int n = 1; n <= max_n; ++n) {
    for (MultLattice& L : enumerate_mult_lattices(n)) {
      ++result.models_checked;
      ModelContext ctx = make_context(L);
      const int limit = query.element_scope ? L.n : 1;
      for (int x = 0; x < limit; ++x) {
        bool hyp = true;
        for (const std::string& h : query.hypotheses)
          hyp = hyp && eval_predicate(h, ctx, x, query.element_scope);
        if (!hyp) continue;
        if (eval_predicate(query.conclusion, ctx, x, query.element_scope))
          continue;
        result.holds = false;
        result.element = query.element_scope ? x : -1;
        std::string where =
            query.element_scope ? "element " + L.name_of(x) + " of " + L.name
                                : L.name;
        result.detail = where + " meets every hypothesis but fails " +
                        query.conclusion;
        result.lattice = std::move(L);
        return result;
      }
    }
  }
  result.detail = "holds up to " + std::to_string(max_n);
  return result;
}

MineResult mine(const std::string& query, int max_n) {
  return mine(parse_query(query), max_n);
}

}  // namespace mlat
