#include "mlat/core.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace mlat {

namespace {

[[noreturn]] void parse_fail(const std::string& origin, int line,
                             const std::string& msg) {
  throw StructureError(origin + ":" + std::to_string(line) + ": " + msg);
}

void require_shape(const MultLattice& L) {
  const std::size_t nn = static_cast<std::size_t>(L.n) * L.n;
  if (L.n < 1 || L.leq_.size() != nn || L.join_.size() != nn ||
      L.meet_.size() != nn || L.mul_.size() != nn ||
      L.names.size() != static_cast<std::size_t>(L.n))
    throw StructureError("malformed lattice object: table sizes disagree");
  if (L.bottom < 0 || L.bottom >= L.n || L.top < 0 || L.top >= L.n)
    throw StructureError("malformed lattice object: bounds out of range");
  for (ElementId v : L.join_)
    if (v < 0 || v >= L.n)
      throw StructureError("malformed lattice object: join entry out of range");
  for (ElementId v : L.meet_)
    if (v < 0 || v >= L.n)
      throw StructureError("malformed lattice object: meet entry out of range");
  for (ElementId v : L.mul_)
    if (v < 0 || v >= L.n)
      throw StructureError("malformed lattice object: mul entry out of range");
}

void record(AxiomCheck& c, std::vector<ElementId> where, std::string detail) {
  ++c.failed;
  if (!c.first)
    c.first = AxiomViolation{c.axiom, std::move(where), std::move(detail)};
}

}  // namespace

MultLattice MultLattice::from_order(std::string name, int n,
                                    const std::vector<std::uint8_t>& leq,
                                    const std::vector<ElementId>& mul,
                                    std::vector<std::string> names) {
  if (n < 1) throw StructureError("lattice needs at least one element");
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  if (leq.size() != nn) throw StructureError("order matrix has wrong size");
  if (mul.size() != nn) throw StructureError("mul table has wrong size");
  for (ElementId v : mul)
    if (v < 0 || v >= n) throw StructureError("mul entry out of range");
  if (names.empty()) {
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  }
  if (names.size() != static_cast<std::size_t>(n))
    throw StructureError("name list has wrong size");
  {
    std::vector<std::string> sorted(names);
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
      throw StructureError("duplicate element name: " + *dup);
  }

  auto le = [&](ElementId a, ElementId b) { return leq[a * n + b] != 0; };
  for (int a = 0; a < n; ++a)
    if (!le(a, a)) throw StructureError("order is not reflexive");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && le(a, b) && le(b, a))
        throw StructureError("order is not antisymmetric");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!le(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (le(b, c) && !le(a, c))
          throw StructureError("order is not transitive");
    }

  MultLattice L;
  L.name = std::move(name);
  L.n = n;
  L.names = std::move(names);
  L.leq_ = leq;
  L.mul_ = mul;
  L.join_.assign(nn, 0);
  L.meet_.assign(nn, 0);

  L.bottom = -1;
  L.top = -1;
  for (int a = 0; a < n; ++a) {
    bool least = true, greatest = true;
    for (int b = 0; b < n; ++b) {
      least = least && le(a, b);
      greatest = greatest && le(b, a);
    }
    if (least) L.bottom = a;
    if (greatest) L.top = a;
  }
  if (L.bottom < 0) throw StructureError("order has no bottom element");
  if (L.top < 0) throw StructureError("order has no top element");

  std::vector<ElementId> bounds;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bounds.clear();
      for (int c = 0; c < n; ++c)
        if (le(a, c) && le(b, c)) bounds.push_back(c);
      ElementId lub = -1;
      for (ElementId m : bounds) {
        bool below_all = true;
        for (ElementId c : bounds) below_all = below_all && le(m, c);
        if (below_all) {
          lub = m;
          break;
        }
      }
      if (lub < 0)
        throw StructureError("order is not a lattice: " + L.names[a] + " and " +
                             L.names[b] + " have no least upper bound");
      L.join_[a * n + b] = lub;

      bounds.clear();
      for (int c = 0; c < n; ++c)
        if (le(c, a) && le(c, b)) bounds.push_back(c);
      ElementId glb = -1;
      for (ElementId m : bounds) {
        bool above_all = true;
        for (ElementId c : bounds) above_all = above_all && le(c, m);
        if (above_all) {
          glb = m;
          break;
        }
      }
      if (glb < 0)
        throw StructureError("order is not a lattice: " + L.names[a] + " and " +
                             L.names[b] + " have no greatest lower bound");
      L.meet_[a * n + b] = glb;
    }

  return L;
}

const AxiomCheck* AxiomReport::find(std::string_view axiom) const {
  for (const auto& c : checks)
    if (c.axiom == axiom) return &c;
  return nullptr;
}

std::vector<AxiomViolation> AxiomReport::violations() const {
  std::vector<AxiomViolation> out;
  for (const auto& c : checks)
    if (c.first) out.push_back(*c.first);
  return out;
}

AxiomReport validate(const MultLattice& L) {
  require_shape(L);
  const int n = L.n;
  const auto& nm = L.names;
  AxiomReport report;

  {
    AxiomCheck c{"leq_reflexive"};
    for (int a = 0; a < n; ++a) {
      ++c.checked;
      if (!L.leq(a, a)) record(c, {a}, nm[a] + " not below itself");
    }
    report.checks.push_back(std::move(c));
  }
  {
    AxiomCheck c{"leq_antisymmetric"};
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        ++c.checked;
        if (L.leq(a, b) && L.leq(b, a))
          record(c, {a, b}, nm[a] + " and " + nm[b] + " below each other");
      }
    report.checks.push_back(std::move(c));
  }
  {
    AxiomCheck c{"leq_transitive"};
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int x = 0; x < n; ++x) {
          ++c.checked;
          if (L.leq(a, b) && L.leq(b, x) && !L.leq(a, x))
            record(c, {a, b, x},
                   nm[a] + " <= " + nm[b] + " <= " + nm[x] + " but " + nm[a] +
                       " not below " + nm[x]);
        }
    report.checks.push_back(std::move(c));
  }
  {
    AxiomCheck c{"bottom_least"};
    for (int a = 0; a < n; ++a) {
      ++c.checked;
      if (!L.leq(L.bottom, a))
        record(c, {a}, "bottom not below " + nm[a]);
    }
    report.checks.push_back(std::move(c));
  }
  {
    AxiomCheck c{"top_greatest"};
    for (int a = 0; a < n; ++a) {
      ++c.checked;
      if (!L.leq(a, L.top)) record(c, {a}, nm[a] + " not below top");
    }
    report.checks.push_back(std::move(c));
  }
  {
    AxiomCheck c{"join_table"};
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        ++c.checked;
        ElementId j = L.join(a, b);
        bool ok = L.leq(a, j) && L.leq(b, j);
        for (int x = 0; ok && x < n; ++x)
          if (L.leq(a, x) && L.leq(b, x) && !L.leq(j, x)) ok = false;
        if (!ok)
          record(c, {a, b},
                 "join(" + nm[a] + ", " + nm[b] + ") = " + nm[j] +
                     " is not the least upper bound");
      }
    report.checks.push_back(std::move(c));
  }
  {
    AxiomCheck c{"meet_table"};
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        ++c.checked;
        ElementId m = L.meet(a, b);
        bool ok = L.leq(m, a) && L.leq(m, b);
        for (int x = 0; ok && x < n; ++x)
          if (L.leq(x, a) && L.leq(x, b) && !L.leq(x, m)) ok = false;
        if (!ok)
          record(c, {a, b},
                 "meet(" + nm[a] + ", " + nm[b] + ") = " + nm[m] +
                     " is not the greatest lower bound");
      }
    report.checks.push_back(std::move(c));
  }
  {
    AxiomCheck c{"mul_identity"};
    for (int a = 0; a < n; ++a) {
      ++c.checked;
      if (L.mul(a, L.top) != a || L.mul(L.top, a) != a)
        record(c, {a},
               "mul(" + nm[a] + ", top) = " + nm[L.mul(a, L.top)]);
    }
    report.checks.push_back(std::move(c));
  }
  {
    AxiomCheck c{"mul_commutative"};
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        ++c.checked;
        if (L.mul(a, b) != L.mul(b, a))
          record(c, {a, b},
                 "mul(" + nm[a] + ", " + nm[b] + ") = " + nm[L.mul(a, b)] +
                     " but mul(" + nm[b] + ", " + nm[a] + ") = " +
                     nm[L.mul(b, a)]);
      }
    report.checks.push_back(std::move(c));
  }
  {
    AxiomCheck c{"mul_associative"};
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int x = 0; x < n; ++x) {
          ++c.checked;
          ElementId left = L.mul(L.mul(a, b), x);
          ElementId right = L.mul(a, L.mul(b, x));
          if (left != right)
            record(c, {a, b, x},
                   "mul(mul(" + nm[a] + ", " + nm[b] + "), " + nm[x] + ") = " +
                       nm[left] + " but mul(" + nm[a] + ", mul(" + nm[b] +
                       ", " + nm[x] + ")) = " + nm[right]);
        }
    report.checks.push_back(std::move(c));
  }
  {
    AxiomCheck c{"mul_distributive"};
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int x = 0; x < n; ++x) {
          ++c.checked;
          ElementId left = L.mul(a, L.join(b, x));
          ElementId right = L.join(L.mul(a, b), L.mul(a, x));
          if (left != right)
            record(c, {a, b, x},
                   "mul(" + nm[a] + ", join(" + nm[b] + ", " + nm[x] +
                       ")) = " + nm[left] + " but join(mul(" + nm[a] + ", " +
                       nm[b] + "), mul(" + nm[a] + ", " + nm[x] + ")) = " +
                       nm[right]);
        }
    report.checks.push_back(std::move(c));
  }
  {
    AxiomCheck c{"mul_bottom"};
    for (int a = 0; a < n; ++a) {
      ++c.checked;
      if (L.mul(a, L.bottom) != L.bottom)
        record(c, {a},
               "mul(" + nm[a] + ", bottom) = " + nm[L.mul(a, L.bottom)]);
    }
    report.checks.push_back(std::move(c));
  }
  {
    AxiomCheck c{"mul_below_meet"};
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        ++c.checked;
        if (!L.leq(L.mul(a, b), L.meet(a, b)))
          record(c, {a, b},
                 "mul(" + nm[a] + ", " + nm[b] + ") = " + nm[L.mul(a, b)] +
                     " not below meet = " + nm[L.meet(a, b)]);
      }
    report.checks.push_back(std::move(c));
  }

  for (const auto& c : report.checks) report.ok = report.ok && c.failed == 0;
  return report;
}

bool replay_violation(const MultLattice& L, const AxiomViolation& v) {
  require_shape(L);
  const auto need = [&](std::size_t k) {
    if (v.where.size() != k)
      throw StructureError("violation for " + v.axiom + " carries " +
                           std::to_string(v.where.size()) +
                           " elements, expected " + std::to_string(k));
    for (ElementId e : v.where)
      if (e < 0 || e >= L.n)
        throw StructureError("violation element id out of range");
  };
  const auto& w = v.where;

  if (v.axiom == "leq_reflexive") {
    need(1);
    return !L.leq(w[0], w[0]);
  }
  if (v.axiom == "leq_antisymmetric") {
    need(2);
    return w[0] != w[1] && L.leq(w[0], w[1]) && L.leq(w[1], w[0]);
  }
  if (v.axiom == "leq_transitive") {
    need(3);
    return L.leq(w[0], w[1]) && L.leq(w[1], w[2]) && !L.leq(w[0], w[2]);
  }
  if (v.axiom == "bottom_least") {
    need(1);
    return !L.leq(L.bottom, w[0]);
  }
  if (v.axiom == "top_greatest") {
    need(1);
    return !L.leq(w[0], L.top);
  }
  if (v.axiom == "join_table") {
    need(2);
    ElementId j = L.join(w[0], w[1]);
    if (!L.leq(w[0], j) || !L.leq(w[1], j)) return true;
    for (int x = 0; x < L.n; ++x)
      if (L.leq(w[0], x) && L.leq(w[1], x) && !L.leq(j, x)) return true;
    return false;
  }
  if (v.axiom == "meet_table") {
    need(2);
    ElementId m = L.meet(w[0], w[1]);
    if (!L.leq(m, w[0]) || !L.leq(m, w[1])) return true;
    for (int x = 0; x < L.n; ++x)
      if (L.leq(x, w[0]) && L.leq(x, w[1]) && !L.leq(x, m)) return true;
    return false;
  }
  if (v.axiom == "mul_identity") {
    need(1);
    return L.mul(w[0], L.top) != w[0] || L.mul(L.top, w[0]) != w[0];
  }
  if (v.axiom == "mul_commutative") {
    need(2);
    return L.mul(w[0], w[1]) != L.mul(w[1], w[0]);
  }
  if (v.axiom == "mul_associative") {
    need(3);
    return L.mul(L.mul(w[0], w[1]), w[2]) != L.mul(w[0], L.mul(w[1], w[2]));
  }
  if (v.axiom == "mul_distributive") {
    need(3);
    return L.mul(w[0], L.join(w[1], w[2])) !=
           L.join(L.mul(w[0], w[1]), L.mul(w[0], w[2]));
  }
  if (v.axiom == "mul_bottom") {
    need(1);
    return L.mul(w[0], L.bottom) != L.bottom;
  }
  if (v.axiom == "mul_below_meet") {
    need(2);
    return !L.leq(L.mul(w[0], w[1]), L.meet(w[0], w[1]));
  }
  throw StructureError("unknown axiom: " + v.axiom);
}

ElementId join_all(const MultLattice& L, std::span<const ElementId> xs) {
  ElementId acc = L.bottom;
  for (ElementId x : xs) acc = L.join(acc, x);
  return acc;
}

ElementId meet_all(const MultLattice& L, std::span<const ElementId> xs) {
  ElementId acc = L.top;
  for (ElementId x : xs) acc = L.meet(acc, x);
  return acc;
}

ElementId power(const MultLattice& L, ElementId a, int k) {
  if (k < 1) throw StructureError("power wants a positive exponent");
  ElementId acc = a;
  for (int i = 1; i < k; ++i) acc = L.mul(acc, a);
  return acc;
}

ElementId residual(const MultLattice& L, ElementId a, ElementId b) {
  return residual_detail(L, a, b).value;
}

ResidualDetail residual_detail(const MultLattice& L, ElementId a,
                               ElementId b) {
  ElementId acc = L.bottom;
  for (int x = 0; x < L.n; ++x)
    if (L.leq(L.mul(x, b), a)) acc = L.join(acc, x);
  return {acc, L.leq(L.mul(acc, b), a)};
}

bool is_prime(const MultLattice& L, ElementId p) {
  if (!L.lt(p, L.top)) return false;
  for (int x = 0; x < L.n; ++x) {
    if (L.leq(x, p)) continue;
    for (int y = x; y < L.n; ++y)
      if (!L.leq(y, p) && L.leq(L.mul(x, y), p)) return false;
  }
  return true;
}

std::vector<ElementId> prime_elements(const MultLattice& L) {
  std::vector<ElementId> out;
  for (int p = 0; p < L.n; ++p)
    if (is_prime(L, p)) out.push_back(p);
  return out;
}

std::vector<ElementId> nilpotent_elements(const MultLattice& L) {
  std::vector<ElementId> out;
  for (int a = 0; a < L.n; ++a) {
    ElementId pow = a;
    for (int k = 0; k < L.n; ++k) {
      if (pow == L.bottom) break;
      pow = L.mul(pow, a);
    }
    if (pow == L.bottom) out.push_back(a);
  }
  return out;
}

ElementId nilradical(const MultLattice& L) {
  std::vector<ElementId> nil = nilpotent_elements(L);
  ElementId by_nilpotents = join_all(L, nil);
  std::vector<ElementId> primes = prime_elements(L);
  ElementId by_primes = meet_all(L, primes);
  if (by_nilpotents != by_primes)
    throw std::logic_error(
        "nilradical characterizations disagree on " + L.name + ": join of "
        "nilpotents is " + L.names[by_nilpotents] + ", meet of primes is " +
        L.names[by_primes]);
  return by_nilpotents;
}

std::optional<ElementId> resolve_element(const MultLattice& L,
                                         std::string_view token) {
  for (int i = 0; i < L.n; ++i)
    if (L.names[i] == token) return i;
  if (token.empty()) return std::nullopt;
  int value = 0;
  for (char ch : token) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    value = value * 10 + (ch - '0');
    if (value >= L.n) return std::nullopt;
  }
  return value;
}

std::vector<std::pair<ElementId, ElementId>> cover_pairs(
    const MultLattice& L) {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n; ++b) {
      if (!L.lt(a, b)) continue;
      bool covered = true;
      for (int c = 0; covered && c < L.n; ++c)
        if (L.lt(a, c) && L.lt(c, b)) covered = false;
      if (covered) out.emplace_back(a, b);
    }
  std::sort(out.begin(), out.end());
  return out;
}

MultLattice from_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  std::string lattice_name;
  bool have_name = false;
  int n = -1;
  int declared_bottom = -1, declared_top = -1;
  std::vector<std::string> names;
  std::vector<std::uint8_t> named;
  std::vector<std::uint8_t> leq;
  std::vector<ElementId> mul;
  std::vector<std::uint8_t> mul_set;

  auto check_id = [&](long v, const char* what) -> ElementId {
    if (n < 0) parse_fail(origin, lineno, "n must be declared first");
    if (v < 0 || v >= n)
      parse_fail(origin, lineno,
                 std::string(what) + " id " + std::to_string(v) +
                     " out of range");
    return static_cast<ElementId>(v);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key[0] == '#') continue;

    if (key == "lattice") {
      std::string rest;
      std::getline(ls, rest);
      std::size_t start = rest.find_first_not_of(" \t");
      std::size_t end = rest.find_last_not_of(" \t\r");
      if (start == std::string::npos)
        parse_fail(origin, lineno, "lattice line needs a name");
      lattice_name = rest.substr(start, end - start + 1);
      have_name = true;
      continue;
    }
    if (key == "n") {
      long v = -1;
      if (!(ls >> v) || v < 1 || v > 255)
        parse_fail(origin, lineno, "n must be between 1 and 255");
      if (n >= 0) parse_fail(origin, lineno, "duplicate n line");
      n = static_cast<int>(v);
      names.assign(n, "");
      named.assign(n, 0);
      leq.assign(static_cast<std::size_t>(n) * n, 0);
      for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
      mul.assign(static_cast<std::size_t>(n) * n, 0);
      mul_set.assign(static_cast<std::size_t>(n) * n, 0);
      continue;
    }
    if (key == "bottom" || key == "top") {
      long v;
      if (!(ls >> v)) parse_fail(origin, lineno, key + " line needs an id");
      ElementId e = check_id(v, key.c_str());
      int& slot = key == "bottom" ? declared_bottom : declared_top;
      if (slot >= 0) parse_fail(origin, lineno, "duplicate " + key + " line");
      slot = e;
      continue;
    }
    if (key == "name") {
      long v;
      std::string token;
      if (!(ls >> v >> token))
        parse_fail(origin, lineno, "name line wants: name <id> <token>");
      ElementId e = check_id(v, "name");
      if (named[e]) parse_fail(origin, lineno, "element named twice");
      std::string extra;
      if (ls >> extra) parse_fail(origin, lineno, "trailing tokens on name line");
      names[e] = token;
      named[e] = 1;
      continue;
    }
    if (key == "cover") {
      long a, b;
      if (!(ls >> a >> b))
        parse_fail(origin, lineno, "cover line wants: cover <low> <high>");
      ElementId ea = check_id(a, "cover"), eb = check_id(b, "cover");
      if (ea == eb) parse_fail(origin, lineno, "element covering itself");
      leq[ea * n + eb] = 1;
      continue;
    }
    if (key == "mul") {
      long a, b, k;
      if (!(ls >> a >> b >> k))
        parse_fail(origin, lineno, "mul line wants: mul <a> <b> <product>");
      ElementId ea = check_id(a, "mul"), eb = check_id(b, "mul"),
                ek = check_id(k, "mul");
      if (mul_set[ea * n + eb])
        parse_fail(origin, lineno,
                   "duplicate mul entry for " + std::to_string(ea) + ", " +
                       std::to_string(eb));
      mul[ea * n + eb] = ek;
      mul[eb * n + ea] = ek;
      mul_set[ea * n + eb] = 1;
      mul_set[eb * n + ea] = 1;
      continue;
    }
    parse_fail(origin, lineno, "unknown directive: " + key);
  }

  if (!have_name) parse_fail(origin, lineno, "missing lattice line");
  if (n < 0) parse_fail(origin, lineno, "missing n line");
  if (declared_bottom < 0) parse_fail(origin, lineno, "missing bottom line");
  if (declared_top < 0) parse_fail(origin, lineno, "missing top line");
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      if (!mul_set[a * n + b])
        parse_fail(origin, lineno,
                   "missing mul entry for " + std::to_string(a) + ", " +
                       std::to_string(b));
  for (int i = 0; i < n; ++i)
    if (!named[i]) names[i] = "e" + std::to_string(i);

  // Reflexive-transitive closure of the cover relation.
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a) {
      if (!leq[a * n + k]) continue;
      for (int b = 0; b < n; ++b)
        if (leq[k * n + b]) leq[a * n + b] = 1;
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (leq[a * n + b] && leq[b * n + a])
        throw StructureError(origin + ": cover cycle through elements " +
                             std::to_string(a) + " and " + std::to_string(b));

  MultLattice L;
  try {
    L = MultLattice::from_order(lattice_name, n, leq, mul, std::move(names));
  } catch (const StructureError& e) {
    throw StructureError(origin + ": " + e.what());
  }
  if (L.bottom != declared_bottom)
    throw StructureError(origin + ": declared bottom " +
                         std::to_string(declared_bottom) +
                         " but the least element is " +
                         std::to_string(L.bottom));
  if (L.top != declared_top)
    throw StructureError(origin + ": declared top " +
                         std::to_string(declared_top) +
                         " but the greatest element is " +
                         std::to_string(L.top));
  return L;
}

MultLattice load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructureError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str(), path);
}

std::string to_text(const MultLattice& L) {
  require_shape(L);
  std::ostringstream out;
  out << "lattice " << L.name << "\n";
  out << "n " << L.n << "\n";
  out << "bottom " << L.bottom << "\n";
  out << "top " << L.top << "\n";
  for (int i = 0; i < L.n; ++i) out << "name " << i << " " << L.names[i] << "\n";
  for (auto [a, b] : cover_pairs(L)) out << "cover " << a << " " << b << "\n";
  for (int a = 0; a < L.n; ++a)
    for (int b = a; b < L.n; ++b)
      out << "mul " << a << " " << b << " " << L.mul(a, b) << "\n";
  return out.str();
}

void save_file(const MultLattice& L, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructureError("cannot open " + path + " for writing");
  out << to_text(L);
  if (!out) throw StructureError("write to " + path + " failed");
}

}  // namespace mlat
