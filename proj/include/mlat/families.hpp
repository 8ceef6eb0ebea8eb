#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mlat/core.hpp"

namespace mlat {

// A recipe for one lattice. Recipes parse from a one-line text form,
// print back to it, and generate validated lattices, so a corpus file
// is just a list of them and a witness can name its lattice by recipe.
struct FamilySpec {
  enum class Kind {
    zmod,         // ideals of Z/mZ: order by divisibility, mul gcd(de, m)
    chain_power,  // ideals of Z/p^kZ: a chain p^0 > ... > p^k
    boolean_cube, // subsets of k letters with mul = meet
    b4,           // the four element boolean algebra, atoms m and n
    frame,        // divisors of m with join lcm, meet gcd, mul = meet
    product,      // componentwise product of the factors, folded left
    quotient,     // interval above an element of the base
    localization, // base localized at a prime element
    file,         // lattice loaded from the text format
  };

  Kind kind = Kind::b4;
  int m = 0;                             // zmod and frame modulus
  int k = 0;                             // chain_power and boolean size
  std::string path;                      // file source
  std::string element;                   // quotient / localization anchor
  std::shared_ptr<const FamilySpec> base;
  std::vector<FamilySpec> factors;
};

// Accepts both written forms: a manifest line `kind key=value ...`
// (detected by a space or an `=`) and the compact `kind(arg,...)`
// used for nesting. Raises StructureError on anything malformed,
// including parameters outside the documented ranges.
FamilySpec parse_family(const std::string& text);

// Manifest line form, the canonical serialization. Nested specs are
// printed compactly. parse_family(to_string(s)) reproduces s.
std::string to_string(const FamilySpec& spec);

// Compact nested form, e.g. quotient(zmod(12),4Z).
std::string to_compact(const FamilySpec& spec);

// Builds the lattice and validates it before returning. Derived kinds
// resolve their anchor element by name (ids accepted) in the freshly
// generated base.
MultLattice generate(const FamilySpec& spec);
MultLattice generate(const std::string& text);

// One spec per line; # starts a comment and blank lines are skipped.
// Duplicate recipes (by canonical serialization) keep their first
// occurrence only.
std::vector<FamilySpec> parse_manifest(const std::string& text);
std::vector<FamilySpec> load_manifest(const std::string& path);

}  // namespace mlat
