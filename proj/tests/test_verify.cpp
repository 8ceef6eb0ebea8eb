#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"
#include "mlat/families.hpp"
#include "mlat/search.hpp"
#include "mlat/verify.hpp"

using namespace mlat;

namespace {

const CheckResult* find_row(const SuiteReport& r, const std::string& id,
                            const std::string& lattice) {
  for (const CheckResult& row : r.results)
    if (row.check_id == id && row.lattice_name == lattice) return &row;
  return nullptr;
}

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)v);
  return buf;
}

std::string drop_wall_clock(const std::string& text) {
  auto pos = text.rfind("# wall-clock:");
  return pos == std::string::npos ? text : text.substr(0, pos);
}

std::vector<FamilySpec> small_corpus() {
  return parse_manifest("b4\nzmod m=12\nchain_power k=2\n");
}

}  // namespace

TEST_CASE("the check registry resolves names and prefixes") {
  auto checks = registered_checks();
  CHECK(checks.size() == 72);
  int informational = 0;
  for (const CheckInfo& c : checks)
    if (c.informational) {
      ++informational;
      CHECK(c.id == "S3.P1(2-stated)");
    }
  CHECK(informational == 1);

  CHECK(resolve_check_ids({}).size() == 72);
  CHECK(resolve_check_ids({"all"}).size() == 72);

  auto t225 = resolve_check_ids({"T2.25"});
  REQUIRE(t225.size() == 5);
  for (const std::string& id : t225) CHECK(id.rfind("T2.25(", 0) == 0);

  CHECK(resolve_check_ids({"T5.5(2=>3)"}) == std::vector<std::string>{"T5.5(2=>3)"});
  CHECK(resolve_check_ids({"S3.P1(2)"}) == std::vector<std::string>{"S3.P1(2)"});
  CHECK(resolve_check_ids({"S3.P1"}).size() == 4);

  auto ordered = resolve_check_ids({"L5.2", "T2.8"});
  REQUIRE(ordered.size() == 2);
  CHECK(ordered[0] == "T2.8");
  CHECK(ordered[1] == "L5.2");

  CHECK_THROWS_AS(resolve_check_ids({"T99"}), StructureError);
}

TEST_CASE("the suite freezes statuses on a small corpus") {
  SuiteReport report = run_suite(small_corpus(), {"all"}, 1);
  CHECK(report.results.size() == 3 * 72);

  const CheckResult* square = find_row(report, "T5.5(2=>3)", "b4");
  REQUIRE(square != nullptr);
  CHECK(square->status == CheckStatus::violated);
  REQUIRE(square->witness);
  REQUIRE(square->witness->bindings.size() == 1);
  CHECK(square->witness->bindings[0].first == "x");
  CHECK(square->witness->bindings[0].second == "1");
  CHECK(square->family == "b4");

  CHECK(find_row(report, "T5.5(2=>3)", "chain_power(2)")->status == CheckStatus::holds);
  CHECK(find_row(report, "T5.5(2=>3)", "zmod(12)")->status ==
        CheckStatus::hypothesis_unmet);
  CHECK(find_row(report, "T5.5(1=>2)", "b4")->status == CheckStatus::holds);
  CHECK(find_row(report, "T5.5(3=>4)", "b4")->status == CheckStatus::hypothesis_unmet);

  CHECK(find_row(report, "T2.8", "b4")->status == CheckStatus::holds);
  CHECK(find_row(report, "T2.8", "zmod(12)")->status == CheckStatus::holds);
  CHECK(find_row(report, "P2.11(<=)", "chain_power(2)")->status == CheckStatus::holds);
  CHECK(find_row(report, "P2.11(<=)", "b4")->status == CheckStatus::hypothesis_unmet);
  CHECK(find_row(report, "P2.11(=>)", "chain_power(2)")->status == CheckStatus::holds);
  CHECK(find_row(report, "L5.2", "chain_power(2)")->status == CheckStatus::holds);
  CHECK(find_row(report, "L5.2", "b4")->status == CheckStatus::hypothesis_unmet);
  CHECK(find_row(report, "P5.6(1=>2)", "b4")->status == CheckStatus::holds);
  CHECK(find_row(report, "L3.3", "zmod(12)")->status == CheckStatus::holds);
  CHECK(find_row(report, "T4.2", "b4")->status == CheckStatus::hypothesis_unmet);

  for (const char* lattice : {"b4", "zmod(12)", "chain_power(2)"}) {
    CHECK(find_row(report, "kappa-criterion(=>)", lattice)->status == CheckStatus::holds);
    CHECK(find_row(report, "kappa-criterion(<=)", lattice)->status == CheckStatus::holds);
    CHECK(find_row(report, "quotient-SH", lattice)->status == CheckStatus::holds);
    CHECK(find_row(report, "quotient-CSH", lattice)->status == CheckStatus::holds);
    CHECK(find_row(report, "max-hollow-exists", lattice)->status == CheckStatus::holds);
    CHECK(find_row(report, "representation-uniqueness", lattice)->status ==
          CheckStatus::holds);
  }

  const CheckResult* stated = find_row(report, "S3.P1(2-stated)", "chain_power(2)");
  REQUIRE(stated != nullptr);
  CHECK(stated->status == CheckStatus::noted_violated);
  REQUIRE(stated->witness);
  CHECK(find_row(report, "S3.P1(2)", "chain_power(2)")->status == CheckStatus::holds);
  CHECK(find_row(report, "S3.P1(1)", "chain_power(2)")->status == CheckStatus::holds);
  CHECK(find_row(report, "S3.P1(3)", "chain_power(2)")->status == CheckStatus::holds);

  auto bad = report.violations();
  REQUIRE(bad.size() == 1);
  CHECK(bad[0]->check_id == "T5.5(2=>3)");
  CHECK(bad[0]->lattice_name == "b4");
}

TEST_CASE("replay reproduces violations and flags stale witnesses") {
  SuiteReport report = run_suite(small_corpus(), {"T5.5", "T2.8"}, 1);
  const CheckResult* square = find_row(report, "T5.5(2=>3)", "b4");
  REQUIRE(square != nullptr);
  REQUIRE(square->witness);
  CHECK(replay(*square->witness));

  Witness rebuilt{"T5.5(2=>3)", "b4", "b4", {{"x", "1"}}, ""};
  CHECK(replay(rebuilt));

  Witness tampered = *square->witness;
  tampered.bindings[0].second = "m";
  CHECK_FALSE(replay(tampered));

  Witness holding{"T2.8", "b4", "b4", {}, ""};
  CHECK_FALSE(replay(holding));

  Witness unknown{"T9.9", "b4", "b4", {}, ""};
  CHECK_THROWS_AS(replay(unknown), StructureError);

  Witness missing{"T2.8", "b4", "b4", {{"x", "zzz"}}, ""};
  CHECK_THROWS_AS(replay(missing), StructureError);

  Witness unparseable{"T2.8", "b4", "not a family", {}, ""};
  CHECK_THROWS_AS(replay(unparseable), StructureError);
}

TEST_CASE("the allowlist gates the verdict by canonical digest") {
  auto corpus = parse_manifest("b4\nzmod m=6\n");
  SuiteReport report = run_suite(corpus, {"all"}, 1);

  auto bad = report.violations();
  REQUIRE(bad.size() == 2);
  CHECK(bad[0]->check_id == "T5.5(2=>3)");
  CHECK(bad[1]->check_id == "T5.5(2=>3)");
  CHECK(bad[0]->lattice_digest == bad[1]->lattice_digest);

  std::string hex = hex16(canonical_digest(generate("b4")));
  Allowlist allow =
      parse_allowlist("# expected divergence\nT5.5(2=>3) cf:" + hex + "\n");
  CHECK(allow.allows("T5.5(2=>3)", canonical_digest(generate("b4"))));
  CHECK_FALSE(allow.allows("T2.8", canonical_digest(generate("b4"))));
  CHECK(suite_passes(report, allow));
  CHECK_FALSE(suite_passes(report, Allowlist{}));

  CHECK_THROWS_AS(parse_allowlist("T5.5(2=>3)\n"), StructureError);
  CHECK_THROWS_AS(parse_allowlist("T5.5(2=>3) cf:12\n"), StructureError);
  CHECK_THROWS_AS(parse_allowlist("T5.5(2=>3) cf:gggggggggggggggg\n"),
                  StructureError);
  CHECK_THROWS_AS(parse_allowlist("id cf:0123456789abcdef extra\n"), StructureError);
  CHECK(parse_allowlist("\n# only comments\n").entries.empty());
  CHECK_THROWS_AS(load_allowlist("/nonexistent/allow"), StructureError);
}

TEST_CASE("reports are byte identical across worker counts") {
  auto corpus = parse_manifest("b4\nzmod m=12\nchain_power k=2\nzmod m=6\n");
  SuiteReport r1 = run_suite(corpus, {"all"}, 1);
  SuiteReport r4 = run_suite(corpus, {"all"}, 4);

  CHECK(to_machine(r1) == to_machine(r4));

  std::string hex = hex16(canonical_digest(generate("b4")));
  Allowlist allow = parse_allowlist("T5.5(2=>3) cf:" + hex + "\n");
  CHECK(drop_wall_clock(to_text(r1, allow)) == drop_wall_clock(to_text(r4, allow)));

  std::string text = to_text(r1, allow);
  CHECK(text.find("[allowed]") != std::string::npos);
  CHECK(text.find("verdict: pass") != std::string::npos);
  CHECK(text.find("(informational)") != std::string::npos);
  CHECK(text.find("noted:") != std::string::npos);
  CHECK(to_text(r1, Allowlist{}).find("verdict: fail") != std::string::npos);

  std::string machine = to_machine(r1);
  std::string want = "T5.5(2=>3)\tb4\tviolated\tcf=" + hex + " x=1";
  CHECK(machine.find(want) != std::string::npos);
  CHECK(machine.find("noted-violated") != std::string::npos);
}

TEST_CASE("chain corpora satisfy the anchor checks everywhere") {
  std::string manifest;
  for (int k = 1; k <= 6; ++k)
    manifest += "chain_power k=" + std::to_string(k) + "\n";
  SuiteReport report = run_suite(parse_manifest(manifest), {"P5.4", "L5.2"}, 2);
  REQUIRE(report.results.size() == 6 * 3);
  for (const CheckResult& row : report.results) CHECK(row.status == CheckStatus::holds);
}

TEST_CASE("product lattices run the factor checks") {
  auto corpus =
      parse_manifest("product(chain_power(1),chain_power(1))\nproduct(zmod(4),zmod(9))\n");
  SuiteReport report = run_suite(corpus, {"T4.2", "product-representability", "T5.5"}, 1);

  for (const CheckResult& row : report.results) {
    if (row.check_id == "T4.2" || row.check_id.rfind("product-", 0) == 0)
      CHECK(row.status == CheckStatus::holds);
  }

  const CheckResult* square =
      find_row(report, "T5.5(2=>3)", "prod(chain_power(1),chain_power(1))");
  REQUIRE(square != nullptr);
  CHECK(square->status == CheckStatus::violated);
  REQUIRE(square->witness);
  CHECK(square->witness->bindings[0].second == "(1,1)");
  CHECK(square->lattice_digest == canonical_digest(generate("b4")));
  CHECK(replay(*square->witness));

  std::string hex = hex16(canonical_digest(generate("b4")));
  Allowlist allow = parse_allowlist("T5.5(2=>3) cf:" + hex + "\n");
  CHECK(suite_passes(report, allow));
}
