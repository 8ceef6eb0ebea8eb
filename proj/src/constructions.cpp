#include "mlat/constructions.hpp"

#include "mlat/hollow.hpp"

#include <algorithm>

namespace mlat {

namespace {

// Constructions only ever assemble lattices from other lattices, so a
// failed validation points at a broken input structure. Surface the
// first axiom violation as the witness.
void require_valid(const MultLattice& L, const std::string& what) {
  AxiomReport r = validate(L);
  if (r.ok) return;
  const AxiomViolation v = r.violations().front();
  throw StructureError(what + " produced an invalid lattice: axiom " +
                       v.axiom + " fails, " + v.detail);
}

}  // namespace

QuotientResult quotient(const MultLattice& L, ElementId i) {
  if (i < 0 || i >= L.n) throw StructureError("quotient element out of range");

  std::vector<ElementId> carrier;
  std::vector<ElementId> to_new(L.n, -1);
  for (int x = 0; x < L.n; ++x)
    if (L.leq(i, x)) {
      to_new[x] = static_cast<ElementId>(carrier.size());
      carrier.push_back(x);
    }
  const int n = static_cast<int>(carrier.size());

  MultLattice Q;
  Q.name = L.name + "/" + L.names[i];
  Q.n = n;
  Q.bottom = to_new[i];
  Q.top = to_new[L.top];
  Q.names.reserve(n);
  for (ElementId x : carrier) Q.names.push_back(L.names[x]);
  Q.leq_.assign(static_cast<std::size_t>(n) * n, 0);
  Q.join_.assign(static_cast<std::size_t>(n) * n, 0);
  Q.meet_.assign(static_cast<std::size_t>(n) * n, 0);
  Q.mul_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ElementId x = carrier[a], y = carrier[b];
      Q.leq_[a * n + b] = L.leq(x, y) ? 1 : 0;
      Q.join_[a * n + b] = to_new[L.join(x, y)];
      Q.meet_[a * n + b] = to_new[L.meet(x, y)];
      Q.mul_[a * n + b] = to_new[L.join(L.mul(x, y), i)];
    }

  require_valid(Q, "quotient by " + L.names[i]);

  QuotientResult out;
  out.lattice = std::move(Q);
  out.forward.resize(L.n);
  for (int x = 0; x < L.n; ++x) out.forward[x] = to_new[L.join(x, i)];
  return out;
}

LocalizationResult localize(const MultLattice& L,
                            std::span<const ElementId> S) {
  std::vector<std::uint8_t> in_s(L.n, 0);
  for (ElementId s : S) {
    if (s < 0 || s >= L.n)
      throw StructureError("localization set element out of range");
    in_s[s] = 1;
  }
  if (!in_s[L.top])
    throw StructureError("localization set must contain top");
  for (ElementId s : S)
    for (ElementId t : S)
      if (!in_s[L.mul(s, t)])
        throw StructureError("localization set is not closed: mul(" +
                             L.names[s] + ", " + L.names[t] + ") = " +
                             L.names[L.mul(s, t)] + " escapes it");

  auto saturate = [&](ElementId a) {
    ElementId acc = L.bottom;
    for (int x = 0; x < L.n; ++x) {
      bool divides = false;
      for (ElementId s : S)
        if (L.leq(L.mul(x, s), a)) {
          divides = true;
          break;
        }
      if (divides) acc = L.join(acc, x);
    }
    return acc;
  };

  std::vector<ElementId> sat(L.n);
  for (int a = 0; a < L.n; ++a) sat[a] = saturate(a);
  for (int a = 0; a < L.n; ++a) {
    if (!L.leq(a, sat[a]))
      throw StructureError("saturation is not extensive at " + L.names[a]);
    if (sat[sat[a]] != sat[a])
      throw StructureError("saturation is not idempotent at " + L.names[a] +
                           ": sat = " + L.names[sat[a]] + ", sat of that = " +
                           L.names[sat[sat[a]]]);
  }

  std::vector<ElementId> carrier;
  std::vector<ElementId> to_new(L.n, -1);
  for (int x = 0; x < L.n; ++x)
    if (sat[x] == x) {
      to_new[x] = static_cast<ElementId>(carrier.size());
      carrier.push_back(x);
    }
  const int n = static_cast<int>(carrier.size());

  MultLattice Q;
  Q.name = L.name + "_loc";
  Q.n = n;
  Q.bottom = to_new[sat[L.bottom]];
  Q.top = to_new[L.top];
  Q.names.reserve(n);
  for (ElementId x : carrier) Q.names.push_back(L.names[x]);
  Q.leq_.assign(static_cast<std::size_t>(n) * n, 0);
  Q.join_.assign(static_cast<std::size_t>(n) * n, 0);
  Q.meet_.assign(static_cast<std::size_t>(n) * n, 0);
  Q.mul_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ElementId x = carrier[a], y = carrier[b];
      ElementId m = L.meet(x, y);
      if (sat[m] != m)
        throw StructureError("saturated elements lost their meet at " +
                             L.names[x] + ", " + L.names[y]);
      Q.leq_[a * n + b] = L.leq(x, y) ? 1 : 0;
      Q.meet_[a * n + b] = to_new[m];
      Q.join_[a * n + b] = to_new[sat[L.join(x, y)]];
      Q.mul_[a * n + b] = to_new[sat[L.mul(x, y)]];
    }

  require_valid(Q, "localization of " + L.name);

  LocalizationResult out;
  out.lattice = std::move(Q);
  out.saturation = sat;
  out.forward.resize(L.n);
  for (int x = 0; x < L.n; ++x) out.forward[x] = to_new[sat[x]];
  return out;
}

LocalizationResult localize_at_prime(const MultLattice& L, ElementId q) {
  if (q < 0 || q >= L.n)
    throw StructureError("localization prime out of range");
  if (!is_prime(L, q))
    throw StructureError("localization needs a prime, and " + L.names[q] +
                         " is not prime in " + L.name);
  std::vector<ElementId> S;
  for (int s = 0; s < L.n; ++s)
    if (!L.leq(s, q)) S.push_back(s);
  LocalizationResult out = localize(L, S);
  out.lattice.name = L.name + "_at_" + L.names[q];
  return out;
}

ProductResult product(const MultLattice& A, const MultLattice& B) {
  ProductResult out;
  out.left_n = A.n;
  out.right_n = B.n;

  MultLattice P;
  P.name = "prod(" + A.name + "," + B.name + ")";
  P.n = A.n * B.n;
  if (P.n > 255)
    throw StructureError("product too large: " + std::to_string(P.n) +
                         " elements");
  P.bottom = A.bottom * B.n + B.bottom;
  P.top = A.top * B.n + B.top;
  P.names.reserve(P.n);
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < B.n; ++b)
      P.names.push_back("(" + A.names[a] + "," + B.names[b] + ")");
  const int n = P.n;
  P.leq_.assign(static_cast<std::size_t>(n) * n, 0);
  P.join_.assign(static_cast<std::size_t>(n) * n, 0);
  P.meet_.assign(static_cast<std::size_t>(n) * n, 0);
  P.mul_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a1 = 0; a1 < A.n; ++a1)
    for (int b1 = 0; b1 < B.n; ++b1)
      for (int a2 = 0; a2 < A.n; ++a2)
        for (int b2 = 0; b2 < B.n; ++b2) {
          int x = a1 * B.n + b1, y = a2 * B.n + b2;
          P.leq_[x * n + y] = (A.leq(a1, a2) && B.leq(b1, b2)) ? 1 : 0;
          P.join_[x * n + y] = A.join(a1, a2) * B.n + B.join(b1, b2);
          P.meet_[x * n + y] = A.meet(a1, a2) * B.n + B.meet(b1, b2);
          P.mul_[x * n + y] = A.mul(a1, a2) * B.n + B.mul(b1, b2);
        }

  require_valid(P, "product of " + A.name + " and " + B.name);
  out.lattice = std::move(P);
  return out;
}

namespace {

void require_map_shape(const ElementMap& m, const char* label) {
  if (!m.source || !m.target)
    throw StructureError(std::string(label) + " map is missing a lattice");
  if (m.forward.size() != static_cast<std::size_t>(m.source->n))
    throw StructureError(std::string(label) +
                         " map does not cover its source");
  for (ElementId y : m.forward)
    if (y < 0 || y >= m.target->n)
      throw StructureError(std::string(label) +
                           " map leaves its target range");
}

}  // namespace

TransferCheck check_adjunction_transfer(const ElementMap& f,
                                        const ElementMap& u) {
  require_map_shape(f, "left");
  require_map_shape(u, "right");
  if (f.source != u.target || f.target != u.source)
    throw StructureError("adjunction maps do not point at each other");

  const MultLattice& X = *f.source;
  const MultLattice& Y = *f.target;
  for (int x = 0; x < X.n; ++x)
    for (int y = 0; y < Y.n; ++y)
      if (Y.leq(f.forward[x], y) != X.leq(x, u.forward[y]))
        throw StructureError("not an adjunction at (" + X.name_of(x) + ", " +
                             Y.name_of(y) + ")");

  TransferCheck out;
  for (int y1 = 0; y1 < Y.n; ++y1)
    for (int y2 = 0; y2 < Y.n; ++y2) {
      ElementId mapped = u.forward[Y.join(y1, y2)];
      ElementId joined = X.join(u.forward[y1], u.forward[y2]);
      if (mapped != joined) {
        out.status = TransferCheck::Status::not_applicable;
        out.detail = "right adjoint drops the join of " + Y.name_of(y1) +
                     " and " + Y.name_of(y2);
        return out;
      }
    }

  for (int x = 0; x < X.n; ++x) {
    if (!is_strongly_hollow(X, x)) continue;
    if (is_strongly_hollow(Y, f.forward[x])) continue;
    out.status = TransferCheck::Status::violated;
    out.witness = x;
    out.detail = X.name_of(x) + " is hollow but its image " +
                 Y.name_of(f.forward[x]) + " is not";
    return out;
  }
  out.status = TransferCheck::Status::holds;
  return out;
}

}  // namespace mlat
