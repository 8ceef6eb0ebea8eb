#include <doctest.h>

#include <array>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "mlat/core.hpp"
#include "oracles.hpp"

using namespace mlat;

namespace {

long long failures(const AxiomReport& r, const char* axiom) {
  const AxiomCheck* c = r.find(axiom);
  REQUIRE(c != nullptr);
  return c->failed;
}

const std::array<const char*, 13> kAxioms = {
    "leq_reflexive",  "leq_antisymmetric", "leq_transitive",
    "bottom_least",   "top_greatest",      "join_table",
    "meet_table",     "mul_identity",      "mul_commutative",
    "mul_associative", "mul_distributive", "mul_bottom",
    "mul_below_meet"};

}  // namespace

TEST_CASE("from_order derives bound tables matching the naive scan") {
  MultLattice L = fx::diamond_meet();
  CHECK(L.bottom == 0);
  CHECK(L.top == 3);
  auto leq = oracle::leq_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CHECK(L.join(a, b) == oracle::naive_lub(4, leq, a, b));
      CHECK(L.meet(a, b) == oracle::naive_glb(4, leq, a, b));
    }
  CHECK(L.join(1, 2) == 3);
  CHECK(L.meet(1, 2) == 0);
}

TEST_CASE("from_order rejects non-lattice orders") {
  // Two incomparable upper bounds for the atoms: no least upper bound.
  auto leq = oracle::leq_from_covers(
      6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
  std::vector<ElementId> mul(36, 0);
  CHECK_THROWS_AS(MultLattice::from_order("bowtie", 6, leq, mul, {}),
                  StructureError);
}

TEST_CASE("from_order rejects duplicate names and bad tables") {
  auto leq = oracle::leq_from_covers(2, {{0, 1}});
  std::vector<ElementId> mul = {0, 0, 0, 1};
  CHECK_THROWS_AS(MultLattice::from_order("x", 2, leq, mul, {"a", "a"}),
                  StructureError);
  std::vector<ElementId> bad = {0, 0, 0, 9};
  CHECK_THROWS_AS(MultLattice::from_order("x", 2, leq, bad, {}),
                  StructureError);
}

TEST_CASE("validate passes a sound structure and tallies every axiom") {
  AxiomReport r = validate(fx::diamond_meet());
  CHECK(r.ok);
  CHECK(r.checks.size() == kAxioms.size());
  for (std::size_t i = 0; i < kAxioms.size(); ++i) {
    CHECK(r.checks[i].axiom == kAxioms[i]);
    CHECK(r.checks[i].failed == 0);
    CHECK(r.checks[i].checked > 0);
  }
  CHECK(r.violations().empty());
  CHECK(validate(fx::chain_sq_zero()).ok);
  CHECK(validate(fx::m3_top()).ok);
}

TEST_CASE("validate isolates a product exceeding the meet") {
  AxiomReport r = validate(fx::chain_sq_top());
  CHECK(!r.ok);
  for (const char* axiom : kAxioms) {
    std::string ax(axiom);
    if (ax == "mul_below_meet" || ax == "mul_distributive")
      CHECK(failures(r, axiom) > 0);
    else
      CHECK(failures(r, axiom) == 0);
  }
  const AxiomCheck* c = r.find("mul_below_meet");
  REQUIRE(c->first.has_value());
  CHECK(c->first->where == std::vector<ElementId>{1, 1});
  CHECK(replay_violation(fx::chain_sq_top(), *c->first));
  // The witness does not transfer to the repaired lattice.
  CHECK(!replay_violation(fx::chain_sq_zero(), *c->first));
}

TEST_CASE("validate isolates a distributivity failure") {
  AxiomReport r = validate(fx::diamond_zero_mul());
  CHECK(!r.ok);
  for (const char* axiom : kAxioms)
    if (std::string(axiom) != "mul_distributive")
      CHECK(failures(r, axiom) == 0);
  CHECK(failures(r, "mul_distributive") > 0);
  auto v = r.find("mul_distributive")->first;
  REQUIRE(v.has_value());
  CHECK(replay_violation(fx::diamond_zero_mul(), *v));
}

TEST_CASE("validate isolates an associativity failure") {
  AxiomReport r = validate(fx::chain4_bad_assoc());
  CHECK(!r.ok);
  for (const char* axiom : kAxioms)
    if (std::string(axiom) != "mul_associative")
      CHECK(failures(r, axiom) == 0);
  auto v = r.find("mul_associative")->first;
  REQUIRE(v.has_value());
  CHECK(v->where == std::vector<ElementId>{1, 2, 2});
  CHECK(replay_violation(fx::chain4_bad_assoc(), *v));
}

TEST_CASE("replay_violation rejects malformed witnesses") {
  MultLattice L = fx::diamond_meet();
  CHECK_THROWS_AS(replay_violation(L, {"no_such_axiom", {0}, ""}),
                  StructureError);
  CHECK_THROWS_AS(replay_violation(L, {"mul_commutative", {0}, ""}),
                  StructureError);
  CHECK_THROWS_AS(replay_violation(L, {"mul_commutative", {0, 99}, ""}),
                  StructureError);
  CHECK(!replay_violation(L, {"mul_commutative", {1, 2}, ""}));
}

TEST_CASE("folds over families hit the expected bounds") {
  MultLattice L = fx::diamond_meet();
  CHECK(join_all(L, {}) == L.bottom);
  CHECK(meet_all(L, {}) == L.top);
  std::vector<ElementId> mids = {1, 2};
  CHECK(join_all(L, mids) == 3);
  CHECK(meet_all(L, mids) == 0);
}

TEST_CASE("powers descend and stabilize") {
  MultLattice L = fx::chain_sq_zero();
  CHECK(power(L, 1, 1) == 1);
  CHECK(power(L, 1, 2) == 0);
  CHECK(power(L, 1, 5) == 0);
  CHECK(power(L, 2, 4) == 2);
  CHECK_THROWS_AS(power(L, 1, 0), StructureError);
}

TEST_CASE("residual is the largest divider and usually attains") {
  MultLattice L = fx::chain_sq_zero();
  CHECK(residual(L, 0, 1) == 1);
  CHECK(residual(L, 0, 2) == 0);
  CHECK(residual(L, 1, 2) == 1);
  CHECK(residual(L, 2, 1) == 2);
  ResidualDetail d = residual_detail(L, 0, 1);
  CHECK(d.value == 1);
  CHECK(d.attains);
}

TEST_CASE("residual bound can fail to attain only off the axioms") {
  // With every proper product zero the divider set of (bottom : m) is
  // everything except top, whose join is top, and top*m = m.
  MultLattice L = fx::diamond_zero_mul();
  ResidualDetail d = residual_detail(L, 0, 1);
  CHECK(d.value == L.top);
  CHECK(!d.attains);
}

TEST_CASE("primes and nilpotents meet at the nilradical") {
  MultLattice chain = fx::chain_sq_zero();
  CHECK(is_prime(chain, 1));
  CHECK(!is_prime(chain, 0));
  CHECK(!is_prime(chain, 2));
  CHECK(prime_elements(chain) == std::vector<ElementId>{1});
  CHECK(nilpotent_elements(chain) == std::vector<ElementId>{0, 1});
  CHECK(nilradical(chain) == 1);

  MultLattice diamond = fx::diamond_meet();
  CHECK(prime_elements(diamond) == std::vector<ElementId>{1, 2});
  CHECK(nilpotent_elements(diamond) == std::vector<ElementId>{0});
  CHECK(nilradical(diamond) == 0);

  MultLattice point = fx::with_meet_mul("point", 1, {}, {"1"});
  CHECK(prime_elements(point).empty());
  CHECK(nilradical(point) == 0);
}

TEST_CASE("every element of a finite lattice is compact") {
  MultLattice L = fx::m3_top();
  for (int a = 0; a < L.n; ++a) CHECK(is_compact(L, a));
}

TEST_CASE("resolve_element prefers names over ids") {
  MultLattice L = fx::chain_sq_zero();  // names 0, a, 1
  CHECK(resolve_element(L, "a") == ElementId{1});
  CHECK(resolve_element(L, "0") == ElementId{0});
  CHECK(resolve_element(L, "1") == ElementId{2});  // name wins over id 1
  CHECK(resolve_element(L, "2") == ElementId{2});  // plain id fallback
  CHECK(!resolve_element(L, "5").has_value());
  CHECK(!resolve_element(L, "zz").has_value());
  CHECK(!resolve_element(L, "").has_value());
}

TEST_CASE("cover pairs come out sorted") {
  using P = std::pair<ElementId, ElementId>;
  CHECK(cover_pairs(fx::diamond_meet()) ==
        std::vector<P>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(cover_pairs(fx::chain_sq_zero()) == std::vector<P>{{0, 1}, {1, 2}});
}

TEST_CASE("text form round trips byte for byte") {
  for (const MultLattice& L :
       {fx::diamond_meet(), fx::chain_sq_zero(), fx::m3_top()}) {
    std::string text = to_text(L);
    MultLattice back = from_text(text);
    CHECK(back.name == L.name);
    CHECK(back.n == L.n);
    CHECK(back.names == L.names);
    CHECK(back.leq_ == L.leq_);
    CHECK(back.mul_ == L.mul_);
    CHECK(to_text(back) == text);
  }
}

TEST_CASE("loader reports precise failures") {
  auto error_of = [](const std::string& text) -> std::string {
    try {
      from_text(text, "input");
    } catch (const StructureError& e) {
      return e.what();
    }
    return "";
  };
  auto fails_with = [&](const std::string& text, const std::string& needle) {
    std::string msg = error_of(text);
    INFO("error was: " << msg);
    CHECK(msg.find(needle) != std::string::npos);
  };

  SUBCASE("missing lattice header") {
    fails_with("n 1\nbottom 0\ntop 0\nmul 0 0 0\n", "missing lattice line");
  }
  SUBCASE("ids before n") {
    fails_with("lattice x\nbottom 0\n", "n must be declared first");
  }
  SUBCASE("n out of range") {
    fails_with("lattice x\nn 0\n", "between 1 and 255");
    fails_with("lattice x\nn 999\n", "between 1 and 255");
  }
  SUBCASE("id out of range") {
    fails_with("lattice x\nn 2\ncover 0 5\n", "out of range");
  }
  SUBCASE("self cover") {
    fails_with("lattice x\nn 2\ncover 1 1\n", "covering itself");
  }
  SUBCASE("cover cycle") {
    fails_with(
        "lattice x\nn 3\nbottom 0\ntop 2\ncover 0 1\ncover 1 2\n"
        "cover 2 1\nmul 0 0 0\nmul 0 1 0\nmul 0 2 0\nmul 1 1 1\n"
        "mul 1 2 1\nmul 2 2 2\n",
        "cover cycle");
  }
  SUBCASE("duplicate mul entry") {
    fails_with(
        "lattice x\nn 2\nbottom 0\ntop 1\nmul 0 0 0\nmul 0 1 0\n"
        "mul 1 0 0\nmul 1 1 1\n",
        "duplicate mul entry");
  }
  SUBCASE("missing mul entry") {
    fails_with(
        "lattice x\nn 2\nbottom 0\ntop 1\ncover 0 1\nmul 0 0 0\n"
        "mul 1 1 1\n",
        "missing mul entry");
  }
  SUBCASE("element named twice") {
    fails_with("lattice x\nn 2\nname 0 a\nname 0 b\n", "named twice");
  }
  SUBCASE("duplicate name token") {
    fails_with(
        "lattice x\nn 2\nbottom 0\ntop 1\ncover 0 1\nname 0 a\n"
        "name 1 a\nmul 0 0 0\nmul 0 1 0\nmul 1 1 1\n",
        "duplicate element name");
  }
  SUBCASE("declared bounds must match the order") {
    fails_with(
        "lattice x\nn 2\nbottom 1\ntop 0\ncover 0 1\nmul 0 0 0\n"
        "mul 0 1 0\nmul 1 1 1\n",
        "declared bottom");
  }
  SUBCASE("unknown directive") {
    fails_with("lattice x\nn 1\nfoo 1\n", "unknown directive");
  }
  SUBCASE("non-lattice order") {
    fails_with(
        "lattice x\nn 6\nbottom 0\ntop 5\ncover 0 1\ncover 0 2\n"
        "cover 1 3\ncover 1 4\ncover 2 3\ncover 2 4\ncover 3 5\n"
        "cover 4 5\n"
        "mul 0 0 0\nmul 0 1 0\nmul 0 2 0\nmul 0 3 0\nmul 0 4 0\n"
        "mul 0 5 0\nmul 1 1 1\nmul 1 2 0\nmul 1 3 1\nmul 1 4 1\n"
        "mul 1 5 1\nmul 2 2 2\nmul 2 3 2\nmul 2 4 2\nmul 2 5 2\n"
        "mul 3 3 3\nmul 3 4 0\nmul 3 5 3\nmul 4 4 4\nmul 4 5 4\n"
        "mul 5 5 5\n",
        "no least upper bound");
  }
  SUBCASE("comments and blank lines are fine") {
    MultLattice L = from_text(
        "# a two element chain\n\nlattice tiny\nn 2\nbottom 0\ntop 1\n"
        "cover 0 1\nmul 0 0 0\nmul 0 1 0\nmul 1 1 1\n");
    CHECK(L.n == 2);
    CHECK(L.names == std::vector<std::string>{"e0", "e1"});
    CHECK(validate(L).ok);
  }
}

TEST_CASE("ring of integers mod m backs up the ideal arithmetic") {
  oracle::ZmodRing R(12);
  CHECK(R.mul(2, 2) == 4);
  CHECK(R.mul(4, 6) == 12);
  CHECK(R.mul(3, 4) == 12);
  CHECK(R.add(4, 6) == 2);
  CHECK(R.intersect(4, 6) == 12);
  CHECK(R.residual(12, 3) == 4);
  CHECK(R.residual(12, 4) == 3);
  CHECK(R.residual(12, 6) == 2);
  CHECK(R.residual(4, 6) == 2);
  CHECK(R.residual(2, 3) == 2);
}
