#include "mlat/families.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "mlat/constructions.hpp"

namespace mlat {

namespace {

using Kind = FamilySpec::Kind;

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Kind kind_from_token(const std::string& t) {
  if (t == "zmod") return Kind::zmod;
  if (t == "chain_power") return Kind::chain_power;
  if (t == "boolean") return Kind::boolean_cube;
  if (t == "b4") return Kind::b4;
  if (t == "frame") return Kind::frame;
  if (t == "product") return Kind::product;
  if (t == "quotient") return Kind::quotient;
  if (t == "localization") return Kind::localization;
  if (t == "file") return Kind::file;
  throw StructureError("unknown family kind: " + t);
}

std::string token_of(Kind k) {
  switch (k) {
    case Kind::zmod: return "zmod";
    case Kind::chain_power: return "chain_power";
    case Kind::boolean_cube: return "boolean";
    case Kind::b4: return "b4";
    case Kind::frame: return "frame";
    case Kind::product: return "product";
    case Kind::quotient: return "quotient";
    case Kind::localization: return "localization";
    case Kind::file: return "file";
  }
  return "?";
}

int parse_int(const std::string& text, const std::string& what) {
  if (text.empty() || text.size() > 9 ||
      !std::all_of(text.begin(), text.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw StructureError(what + " must be a small positive integer, got '" +
                         text + "'");
  return std::stoi(text);
}

// Splits at commas that sit outside every parenthesis pair.
std::vector<std::string> split_args(const std::string& text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw StructureError("unbalanced parentheses in: " + text);
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw StructureError("unbalanced parentheses in: " + text);
  out.push_back(trim(cur));
  return out;
}

std::vector<int> divisors_of(int m) {
  std::vector<int> out;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) out.push_back(d);
  return out;
}

void check_ranges(const FamilySpec& s) {
  switch (s.kind) {
    case Kind::zmod: {
      if (s.m < 2 || s.m > 100000)
        throw StructureError("zmod modulus must be in [2, 100000]");
      if (divisors_of(s.m).size() > 128)
        throw StructureError("zmod modulus has too many divisors");
      break;
    }
    case Kind::frame: {
      if (s.m < 1 || s.m > 100000)
        throw StructureError("frame modulus must be in [1, 100000]");
      if (divisors_of(s.m).size() > 128)
        throw StructureError("frame modulus has too many divisors");
      break;
    }
    case Kind::chain_power:
      if (s.k < 0 || s.k > 254)
        throw StructureError("chain_power exponent must be in [0, 254]");
      break;
    case Kind::boolean_cube:
      if (s.k < 0 || s.k > 7)
        throw StructureError("boolean letter count must be in [0, 7]");
      break;
    case Kind::product:
      if (s.factors.empty())
        throw StructureError("product needs at least one factor");
      break;
    case Kind::quotient:
    case Kind::localization:
      if (!s.base) throw StructureError(token_of(s.kind) + " needs a base");
      if (s.element.empty())
        throw StructureError(token_of(s.kind) + " needs an element");
      break;
    case Kind::file:
      if (s.path.empty()) throw StructureError("file needs a path");
      break;
    case Kind::b4:
      break;
  }
}

FamilySpec parse_manifest_form(const std::string& text) {
  std::istringstream in(text);
  std::string head;
  in >> head;
  FamilySpec s;
  s.kind = kind_from_token(head);

  std::string tok;
  std::string factors_text;
  while (in >> tok) {
    std::size_t eq = tok.find('=');
    if (eq == std::string::npos)
      throw StructureError("expected key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq);
    std::string value = tok.substr(eq + 1);
    if (key == "m" && (s.kind == Kind::zmod || s.kind == Kind::frame))
      s.m = parse_int(value, "m");
    else if (key == "k" &&
             (s.kind == Kind::chain_power || s.kind == Kind::boolean_cube))
      s.k = parse_int(value, "k");
    else if (key == "path" && s.kind == Kind::file)
      s.path = value;
    else if (key == "factors" && s.kind == Kind::product)
      factors_text = value;
    else if (key == "base" &&
             (s.kind == Kind::quotient || s.kind == Kind::localization))
      s.base = std::make_shared<FamilySpec>(parse_family(value));
    else if (key == "at" && s.kind == Kind::quotient)
      s.element = value;
    else if (key == "prime" && s.kind == Kind::localization)
      s.element = value;
    else
      throw StructureError("key '" + key + "' does not belong to " + head);
  }
  if (!factors_text.empty())
    for (const std::string& f : split_args(factors_text))
      s.factors.push_back(parse_family(f));
  return s;
}

FamilySpec parse_compact_form(const std::string& text) {
  std::size_t open = text.find('(');
  FamilySpec s;
  if (open == std::string::npos) {
    s.kind = kind_from_token(text);
    return s;
  }
  if (text.back() != ')')
    throw StructureError("missing closing parenthesis in: " + text);
  s.kind = kind_from_token(text.substr(0, open));
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  switch (s.kind) {
    case Kind::zmod:
    case Kind::frame:
      s.m = parse_int(trim(inner), "m");
      break;
    case Kind::chain_power:
    case Kind::boolean_cube:
      s.k = parse_int(trim(inner), "k");
      break;
    case Kind::file:
      s.path = trim(inner);
      break;
    case Kind::product:
      for (const std::string& f : split_args(inner))
        s.factors.push_back(parse_family(f));
      break;
    case Kind::quotient:
    case Kind::localization: {
      std::vector<std::string> args = split_args(inner);
      if (args.size() != 2)
        throw StructureError(token_of(s.kind) +
                             " takes a base and an element: " + text);
      s.base = std::make_shared<FamilySpec>(parse_family(args[0]));
      s.element = args[1];
      break;
    }
    case Kind::b4:
      throw StructureError("b4 takes no parameters");
  }
  return s;
}

MultLattice generate_zmod(int m) {
  std::vector<int> divs = divisors_of(m);
  const int n = static_cast<int>(divs.size());
  auto id_of = [&](long long d) {
    return static_cast<ElementId>(
        std::find(divs.begin(), divs.end(), static_cast<int>(d)) -
        divs.begin());
  };
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<ElementId> mul(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = divs[i] == 1   ? "1"
               : divs[i] == m ? "0"
                              : std::to_string(divs[i]) + "Z";
    for (int j = 0; j < n; ++j) {
      leq[i * n + j] = divs[i] % divs[j] == 0 ? 1 : 0;
      mul[i * n + j] = id_of(std::gcd(1LL * divs[i] * divs[j], 1LL * m));
    }
  }
  return MultLattice::from_order("zmod(" + std::to_string(m) + ")", n, leq,
                                 mul, std::move(names));
}

MultLattice generate_chain_power(int k) {
  const int n = k + 1;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<ElementId> mul(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = i == 0   ? "1"
               : i == k ? "0"
               : i == 1 ? "p"
                        : "p" + std::to_string(i);
    for (int j = 0; j < n; ++j) {
      leq[i * n + j] = i >= j ? 1 : 0;
      mul[i * n + j] = std::min(i + j, k);
    }
  }
  return MultLattice::from_order("chain_power(" + std::to_string(k) + ")", n,
                                 leq, mul, std::move(names));
}

std::vector<std::string> cube_names(int k) {
  const int n = 1 << k;
  std::vector<std::string> names(n);
  if (k == 0) {
    names[0] = "1";
    return names;
  }
  for (int x = 0; x < n; ++x) {
    if (x == 0) {
      names[x] = "0";
    } else if (x == n - 1) {
      names[x] = "1";
    } else {
      for (int b = 0; b < k; ++b)
        if (x & (1 << b)) names[x] += static_cast<char>('a' + b);
    }
  }
  return names;
}

MultLattice generate_boolean(int k, std::string lattice_name,
                             std::vector<std::string> names) {
  const int n = 1 << k;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<ElementId> mul(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      leq[x * n + y] = (x | y) == y ? 1 : 0;
      mul[x * n + y] = x & y;
    }
  return MultLattice::from_order(std::move(lattice_name), n, leq, mul,
                                 std::move(names));
}

MultLattice generate_frame(int m) {
  std::vector<int> divs = divisors_of(m);
  const int n = static_cast<int>(divs.size());
  auto id_of = [&](int d) {
    return static_cast<ElementId>(
        std::find(divs.begin(), divs.end(), d) - divs.begin());
  };
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<ElementId> mul(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = std::to_string(divs[i]);
    for (int j = 0; j < n; ++j) {
      leq[i * n + j] = divs[j] % divs[i] == 0 ? 1 : 0;
      mul[i * n + j] = id_of(std::gcd(divs[i], divs[j]));
    }
  }
  return MultLattice::from_order("frame(" + std::to_string(m) + ")", n, leq,
                                 mul, std::move(names));
}

ElementId resolve_or_throw(const MultLattice& L, const std::string& token) {
  std::optional<ElementId> id = resolve_element(L, token);
  if (!id)
    throw StructureError("no element named " + token + " in " + L.name);
  return *id;
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw StructureError("empty family spec");
  FamilySpec s = t.find_first_of(" \t=") != std::string::npos
                     ? parse_manifest_form(t)
                     : parse_compact_form(t);
  check_ranges(s);
  return s;
}

std::string to_compact(const FamilySpec& spec) {
  switch (spec.kind) {
    case Kind::zmod: return "zmod(" + std::to_string(spec.m) + ")";
    case Kind::chain_power:
      return "chain_power(" + std::to_string(spec.k) + ")";
    case Kind::boolean_cube: return "boolean(" + std::to_string(spec.k) + ")";
    case Kind::b4: return "b4";
    case Kind::frame: return "frame(" + std::to_string(spec.m) + ")";
    case Kind::file: return "file(" + spec.path + ")";
    case Kind::product: {
      std::string out = "product(";
      for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        if (i) out += ',';
        out += to_compact(spec.factors[i]);
      }
      return out + ")";
    }
    case Kind::quotient:
      return "quotient(" + to_compact(*spec.base) + "," + spec.element + ")";
    case Kind::localization:
      return "localization(" + to_compact(*spec.base) + "," + spec.element +
             ")";
  }
  return "?";
}

std::string to_string(const FamilySpec& spec) {
  switch (spec.kind) {
    case Kind::zmod: return "zmod m=" + std::to_string(spec.m);
    case Kind::chain_power:
      return "chain_power k=" + std::to_string(spec.k);
    case Kind::boolean_cube: return "boolean k=" + std::to_string(spec.k);
    case Kind::b4: return "b4";
    case Kind::frame: return "frame m=" + std::to_string(spec.m);
    case Kind::file: return "file path=" + spec.path;
    case Kind::product: {
      std::string out = "product factors=";
      for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        if (i) out += ',';
        out += to_compact(spec.factors[i]);
      }
      return out;
    }
    case Kind::quotient:
      return "quotient base=" + to_compact(*spec.base) + " at=" +
             spec.element;
    case Kind::localization:
      return "localization base=" + to_compact(*spec.base) + " prime=" +
             spec.element;
  }
  return "?";
}

MultLattice generate(const FamilySpec& spec) {
  check_ranges(spec);
  MultLattice L;
  switch (spec.kind) {
    case Kind::zmod: L = generate_zmod(spec.m); break;
    case Kind::chain_power: L = generate_chain_power(spec.k); break;
    case Kind::boolean_cube:
      L = generate_boolean(spec.k, "boolean(" + std::to_string(spec.k) + ")",
                           cube_names(spec.k));
      break;
    case Kind::b4: L = generate_boolean(2, "b4", {"0", "m", "n", "1"}); break;
    case Kind::frame: L = generate_frame(spec.m); break;
    case Kind::file: L = load_file(spec.path); break;
    case Kind::product: {
      L = generate(spec.factors[0]);
      for (std::size_t i = 1; i < spec.factors.size(); ++i)
        L = product(L, generate(spec.factors[i])).lattice;
      break;
    }
    case Kind::quotient: {
      MultLattice B = generate(*spec.base);
      L = quotient(B, resolve_or_throw(B, spec.element)).lattice;
      break;
    }
    case Kind::localization: {
      MultLattice B = generate(*spec.base);
      L = localize_at_prime(B, resolve_or_throw(B, spec.element)).lattice;
      break;
    }
  }
  AxiomReport r = validate(L);
  if (!r.ok)
    throw StructureError("generated lattice " + L.name + " fails " +
                         r.violations().front().axiom);
  return L;
}

MultLattice generate(const std::string& text) {
  return generate(parse_family(text));
}

std::vector<FamilySpec> parse_manifest(const std::string& text) {
  std::vector<FamilySpec> out;
  std::vector<std::string> seen;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    FamilySpec s = parse_family(line);
    std::string key = to_string(s);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<FamilySpec> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructureError("cannot read manifest: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

}  // namespace mlat
