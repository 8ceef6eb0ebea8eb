#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mlat/constructions.hpp"
#include "mlat/core.hpp"
#include "mlat/elements.hpp"
#include "mlat/families.hpp"
#include "mlat/hollow.hpp"
#include "mlat/search.hpp"
#include "mlat/verify.hpp"

namespace py = pybind11;
using namespace mlat;

namespace {

std::vector<FamilySpec> parse_specs(const std::vector<std::string>& texts) {
  std::vector<FamilySpec> specs;
  specs.reserve(texts.size());
  for (const std::string& t : texts) specs.push_back(parse_family(t));
  return specs;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite multiplicative lattice engine";

  py::register_exception<StructureError>(m, "StructureError");

  py::class_<MultLattice>(m, "Lattice")
      .def_readonly("name", &MultLattice::name)
      .def_readonly("n", &MultLattice::n)
      .def_readonly("bottom", &MultLattice::bottom)
      .def_readonly("top", &MultLattice::top)
      .def_readonly("names", &MultLattice::names)
      .def("leq", &MultLattice::leq)
      .def("lt", &MultLattice::lt)
      .def("join", &MultLattice::join)
      .def("meet", &MultLattice::meet)
      .def("mul", &MultLattice::mul)
      .def("name_of",
           [](const MultLattice& L, ElementId a) { return L.name_of(a); })
      .def("resolve",
           [](const MultLattice& L, const std::string& token) {
             return resolve_element(L, token);
           })
      .def("__repr__", [](const MultLattice& L) {
        return "<Lattice " + L.name + " n=" + std::to_string(L.n) + ">";
      });

  m.def("generate",
        [](const std::string& text) { return generate(text); },
        py::arg("spec"));
  m.def("load_file", &load_file, py::arg("path"));
  m.def("save_file", &save_file, py::arg("lattice"), py::arg("path"));
  m.def("from_text", &from_text, py::arg("text"),
        py::arg("origin") = std::string("<text>"));
  m.def("to_text",
        [](const MultLattice& L) { return to_text(L); });
  m.def("parse_manifest", [](const std::string& text) {
    std::vector<std::string> out;
    for (const FamilySpec& s : parse_manifest(text)) out.push_back(to_string(s));
    return out;
  });
  m.def("load_manifest", [](const std::string& path) {
    std::vector<std::string> out;
    for (const FamilySpec& s : load_manifest(path)) out.push_back(to_string(s));
    return out;
  });

  py::class_<AxiomViolation>(m, "AxiomViolation")
      .def_readonly("axiom", &AxiomViolation::axiom)
      .def_readonly("where", &AxiomViolation::where)
      .def_readonly("detail", &AxiomViolation::detail);

  py::class_<AxiomCheck>(m, "AxiomCheck")
      .def_readonly("axiom", &AxiomCheck::axiom)
      .def_readonly("checked", &AxiomCheck::checked)
      .def_readonly("failed", &AxiomCheck::failed)
      .def_readonly("first", &AxiomCheck::first);

  py::class_<AxiomReport>(m, "AxiomReport")
      .def_readonly("ok", &AxiomReport::ok)
      .def_readonly("checks", &AxiomReport::checks)
      .def("violations", &AxiomReport::violations);

  m.def("validate", &validate, py::arg("lattice"));
  m.def("replay_violation", &replay_violation, py::arg("lattice"),
        py::arg("violation"));

  m.def("residual", &residual, py::arg("lattice"), py::arg("a"), py::arg("b"));
  m.def("is_prime", &is_prime, py::arg("lattice"), py::arg("p"));
  m.def("nilradical", &nilradical, py::arg("lattice"));

  py::class_<HollowProfile>(m, "HollowProfile")
      .def_readonly("id", &HollowProfile::id)
      .def_readonly("strongly_hollow", &HollowProfile::strongly_hollow)
      .def_readonly("completely_strongly_hollow",
                    &HollowProfile::completely_strongly_hollow)
      .def_readonly("kappa", &HollowProfile::kappa)
      .def_readonly("kappa_residual", &HollowProfile::kappa_residual)
      .def_readonly("t_set", &HollowProfile::t_set);

  m.def("is_strongly_hollow", &is_strongly_hollow);
  m.def("is_completely_strongly_hollow", &is_completely_strongly_hollow);
  m.def("missed_set", &missed_set);
  m.def("kappa", &kappa);
  m.def("kappa_residual", &kappa_residual);
  m.def("hollow_profile", &hollow_profile);
  m.def("strongly_hollow_elements", &strongly_hollow_elements);
  m.def("completely_strongly_hollow_elements",
        &completely_strongly_hollow_elements);
  m.def("is_representable", &is_representable);
  m.def("minimal_representation", &minimal_representation);

  py::class_<ElementProfile>(m, "ElementProfile")
      .def_readonly("id", &ElementProfile::id)
      .def_readonly("name", &ElementProfile::name)
      .def_readonly("prime", &ElementProfile::prime)
      .def_readonly("maximal", &ElementProfile::maximal)
      .def_readonly("minimal", &ElementProfile::minimal)
      .def_readonly("nilpotent", &ElementProfile::nilpotent)
      .def_readonly("idempotent", &ElementProfile::idempotent)
      .def_readonly("complemented", &ElementProfile::complemented)
      .def_readonly("neutral", &ElementProfile::neutral)
      .def_readonly("uniform", &ElementProfile::uniform)
      .def_readonly("meet_principal", &ElementProfile::meet_principal)
      .def_readonly("join_principal", &ElementProfile::join_principal)
      .def_readonly("principal", &ElementProfile::principal)
      .def_readonly("weak_meet_principal", &ElementProfile::weak_meet_principal)
      .def_readonly("weak_join_principal", &ElementProfile::weak_join_principal)
      .def_readonly("weak_principal", &ElementProfile::weak_principal)
      .def_readonly("cancellation", &ElementProfile::cancellation)
      .def_readonly("strongly_irreducible", &ElementProfile::strongly_irreducible)
      .def_readonly("completely_strongly_irreducible",
                    &ElementProfile::completely_strongly_irreducible)
      .def_readonly("primitive_idempotent", &ElementProfile::primitive_idempotent)
      .def_readonly("complement_list", &ElementProfile::complement_list);

  py::class_<LatticeProfile>(m, "LatticeProfile")
      .def_readonly("maximal_count", &LatticeProfile::maximal_count)
      .def_readonly("jacobson", &LatticeProfile::jacobson)
      .def_readonly("nilradical", &LatticeProfile::nilradical)
      .def_readonly("socle", &LatticeProfile::socle)
      .def_readonly("spec_set", &LatticeProfile::spec_set)
      .def_readonly("minimal_primes", &LatticeProfile::minimal_primes)
      .def_readonly("max_set", &LatticeProfile::max_set)
      .def_readonly("atoms", &LatticeProfile::atoms)
      .def_readonly("quasi_local", &LatticeProfile::quasi_local)
      .def_readonly("semi_local", &LatticeProfile::semi_local)
      .def_readonly("semi_simple", &LatticeProfile::semi_simple)
      .def_readonly("reduced", &LatticeProfile::reduced)
      .def_readonly("domain", &LatticeProfile::domain)
      .def_readonly("gelfand", &LatticeProfile::gelfand)
      .def_readonly("distributive", &LatticeProfile::distributive)
      .def_readonly("boolean_algebra", &LatticeProfile::boolean_algebra)
      .def_readonly("chain", &LatticeProfile::chain)
      .def_readonly("noether", &LatticeProfile::noether)
      .def_readonly("principally_generated",
                    &LatticeProfile::principally_generated)
      .def_readonly("weak_r_lattice", &LatticeProfile::weak_r_lattice)
      .def_readonly("principal_element_lattice",
                    &LatticeProfile::principal_element_lattice)
      .def_readonly("prufer", &LatticeProfile::prufer)
      .def_readonly("zpi", &LatticeProfile::zpi)
      .def_readonly("pi_lattice", &LatticeProfile::pi_lattice)
      .def_readonly("ufd", &LatticeProfile::ufd)
      .def_readonly("special_pel", &LatticeProfile::special_pel)
      .def_readonly("i0", &LatticeProfile::i0);

  m.def("element_profile", &element_profile);
  m.def("element_profiles", &element_profiles);
  m.def(
      "lattice_profile",
      [](const MultLattice& L) { return lattice_profile(L); },
      py::arg("lattice"));
  m.def("element_profile_text",
        [](const MultLattice& L, ElementId a) {
          return to_text(L, element_profile(L, a));
        });
  m.def("lattice_profile_text", [](const MultLattice& L) {
    return to_text(L, lattice_profile(L));
  });

  py::class_<QuotientResult>(m, "QuotientResult")
      .def_readonly("lattice", &QuotientResult::lattice)
      .def_readonly("forward", &QuotientResult::forward);

  py::class_<LocalizationResult>(m, "LocalizationResult")
      .def_readonly("lattice", &LocalizationResult::lattice)
      .def_readonly("saturation", &LocalizationResult::saturation)
      .def_readonly("forward", &LocalizationResult::forward);

  py::class_<ProductResult>(m, "ProductResult")
      .def_readonly("lattice", &ProductResult::lattice)
      .def_readonly("left_n", &ProductResult::left_n)
      .def_readonly("right_n", &ProductResult::right_n)
      .def("pair", &ProductResult::pair)
      .def("left_of", &ProductResult::left_of)
      .def("right_of", &ProductResult::right_of);

  m.def("quotient", &quotient, py::arg("lattice"), py::arg("element"));
  m.def(
      "localize",
      [](const MultLattice& L, const std::vector<ElementId>& S) {
        return localize(L, S);
      },
      py::arg("lattice"), py::arg("s"));
  m.def("localize_at_prime", &localize_at_prime, py::arg("lattice"),
        py::arg("prime"));
  m.def("product", &product, py::arg("left"), py::arg("right"));

  m.def("canonical_digest", &canonical_digest);
  m.def("isomorphic", &isomorphic);
  m.def("relabel", &relabel, py::arg("lattice"), py::arg("seed"));
  m.def("enumerate_mult_lattices", &enumerate_mult_lattices, py::arg("n"));

  py::class_<MineResult>(m, "MineResult")
      .def_readonly("holds", &MineResult::holds)
      .def_readonly("models_checked", &MineResult::models_checked)
      .def_readonly("lattice", &MineResult::lattice)
      .def_readonly("element", &MineResult::element)
      .def_readonly("detail", &MineResult::detail);

  m.def(
      "mine",
      [](const std::string& query, int max_n) { return mine(query, max_n); },
      py::arg("query"), py::arg("max_n"));

  py::class_<CheckInfo>(m, "CheckInfo")
      .def_readonly("id", &CheckInfo::id)
      .def_readonly("summary", &CheckInfo::summary)
      .def_readonly("informational", &CheckInfo::informational);

  py::class_<Witness>(m, "Witness")
      .def_readonly("check_id", &Witness::check_id)
      .def_readonly("lattice_name", &Witness::lattice_name)
      .def_readonly("family", &Witness::family)
      .def_readonly("bindings", &Witness::bindings)
      .def_readonly("detail", &Witness::detail);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("check_id", &CheckResult::check_id)
      .def_readonly("lattice_name", &CheckResult::lattice_name)
      .def_readonly("family", &CheckResult::family)
      .def_readonly("lattice_digest", &CheckResult::lattice_digest)
      .def_property_readonly(
          "status",
          [](const CheckResult& r) { return std::string(to_string(r.status)); })
      .def_readonly("witness", &CheckResult::witness)
      .def_readonly("detail", &CheckResult::detail);

  py::class_<SuiteReport>(m, "SuiteReport")
      .def_readonly("corpus_description", &SuiteReport::corpus_description)
      .def_readonly("check_ids", &SuiteReport::check_ids)
      .def_readonly("results", &SuiteReport::results)
      .def_readonly("wall_clock_ms", &SuiteReport::wall_clock_ms)
      .def("violations", [](const SuiteReport& r) {
        std::vector<CheckResult> out;
        for (const CheckResult* v : r.violations()) out.push_back(*v);
        return out;
      });

  py::class_<Allowlist>(m, "Allowlist")
      .def(py::init<>())
      .def_readonly("entries", &Allowlist::entries)
      .def("allows", &Allowlist::allows);

  m.def("registered_checks", &registered_checks);
  m.def("resolve_check_ids", &resolve_check_ids, py::arg("tokens"));
  m.def(
      "run_suite",
      [](const std::vector<std::string>& specs,
         const std::vector<std::string>& checks, int workers) {
        return run_suite(parse_specs(specs), checks, workers);
      },
      py::arg("corpus"), py::arg("checks") = std::vector<std::string>{},
      py::arg("workers") = 1);
  m.def("replay", &replay, py::arg("witness"));
  m.def("parse_allowlist", &parse_allowlist, py::arg("text"));
  m.def("load_allowlist", &load_allowlist, py::arg("path"));
  m.def("suite_passes", &suite_passes, py::arg("report"), py::arg("allow"));
  m.def(
      "report_text",
      [](const SuiteReport& report, const Allowlist& allow) {
        return to_text(report, allow);
      },
      py::arg("report"), py::arg("allow"));
  m.def("report_machine", &to_machine, py::arg("report"));
}
