#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mlat/constructions.hpp"
#include "mlat/core.hpp"
#include "mlat/elements.hpp"
#include "mlat/families.hpp"
#include "mlat/hollow.hpp"
#include "mlat/search.hpp"
#include "mlat/verify.hpp"

namespace {

using namespace mlat;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

int workers_from_env() {
  const char* env = std::getenv("MLAT_WORKERS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 64) return 1;
  return static_cast<int>(v);
}

ElementId resolve_or_fail(const MultLattice& L, const std::string& token) {
  std::optional<ElementId> id = resolve_element(L, token);
  if (!id)
    throw StructureError("no element named " + token + " in " + L.name);
  return *id;
}

void emit_lattice(const MultLattice& L, const std::string& out_path) {
  if (out_path.empty())
    std::cout << to_text(L);
  else
    save_file(L, out_path);
}

std::string name_set(const MultLattice& L, const std::vector<ElementId>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += L.name_of(xs[i]);
  }
  return s + "}";
}

int run_gen(const std::vector<std::string>& spec_tokens,
            const std::string& out_path) {
  std::string text;
  for (const std::string& t : spec_tokens) {
    if (!text.empty()) text += " ";
    text += t;
  }
  emit_lattice(generate(parse_family(text)), out_path);
  return kExitOk;
}

int run_classify(const std::string& path) {
  MultLattice L = load_file(path);
  std::cout << to_text(L, lattice_profile(L));
  return kExitOk;
}

int run_hollow(const std::string& path) {
  MultLattice L = load_file(path);
  std::cout << "lattice " << L.name << " n=" << L.n << "\n";
  std::cout << "strongly hollow: " << name_set(L, strongly_hollow_elements(L))
            << "\n";
  std::cout << "completely strongly hollow: "
            << name_set(L, completely_strongly_hollow_elements(L)) << "\n";
  for (ElementId a = 0; a < L.n; ++a) {
    HollowProfile p = hollow_profile(L, a);
    std::cout << L.name_of(a) << ": SH=" << (p.strongly_hollow ? "yes" : "no")
              << " CSH=" << (p.completely_strongly_hollow ? "yes" : "no")
              << " kappa=" << L.name_of(p.kappa)
              << " residual=" << L.name_of(p.kappa_residual)
              << " misses=" << name_set(L, p.t_set);
    if (auto rep = minimal_representation(L, a))
      std::cout << " representation=" << name_set(L, *rep);
    else
      std::cout << " representation=none";
    std::cout << "\n";
  }
  return kExitOk;
}

int run_residual(const std::string& path, const std::string& a,
                 const std::string& b) {
  MultLattice L = load_file(path);
  std::cout << L.name_of(residual(L, resolve_or_fail(L, a),
                                  resolve_or_fail(L, b)))
            << "\n";
  return kExitOk;
}

int run_quotient(const std::string& path, const std::string& at,
                 const std::string& out_path) {
  MultLattice L = load_file(path);
  emit_lattice(quotient(L, resolve_or_fail(L, at)).lattice, out_path);
  return kExitOk;
}

int run_localize(const std::string& path, const std::string& prime,
                 const std::string& out_path) {
  MultLattice L = load_file(path);
  emit_lattice(localize_at_prime(L, resolve_or_fail(L, prime)).lattice,
               out_path);
  return kExitOk;
}

int run_product(const std::string& left_path, const std::string& right_path,
                const std::string& out_path) {
  MultLattice A = load_file(left_path);
  MultLattice B = load_file(right_path);
  emit_lattice(product(A, B).lattice, out_path);
  return kExitOk;
}

int run_verify(const std::string& corpus_path,
               const std::vector<std::string>& check_args,
               const std::string& allow_path, bool machine, int workers) {
  std::vector<std::string> tokens;
  for (const std::string& arg : check_args) {
    std::size_t start = 0;
    while (start <= arg.size()) {
      std::size_t comma = arg.find(',', start);
      std::string piece = arg.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!piece.empty()) tokens.push_back(piece);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  std::vector<FamilySpec> corpus = load_manifest(corpus_path);
  Allowlist allow;
  if (!allow_path.empty()) allow = load_allowlist(allow_path);
  SuiteReport report = run_suite(corpus, tokens, workers);
  if (machine)
    std::cout << to_machine(report);
  else
    std::cout << to_text(report, allow);
  return suite_passes(report, allow) ? kExitOk : kExitViolation;
}

int run_search(int max_n, const std::string& out_dir) {
  long long total = 0;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<MultLattice> models = enumerate_mult_lattices(n);
    total += static_cast<long long>(models.size());
    std::cout << "n=" << n << " multiplicative_lattices=" << models.size()
              << "\n";
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      for (const MultLattice& L : models)
        save_file(L, out_dir + "/" + L.name + ".lat");
    }
  }
  std::cout << "total " << total << "\n";
  if (!out_dir.empty())
    std::cerr << "wrote " << total << " models to " << out_dir << "\n";
  return kExitOk;
}

int run_mine(const std::string& query, int max_n) {
  MineResult res = mine(query, max_n);
  if (res.holds) {
    std::cout << "holds up to n=" << max_n << " (" << res.models_checked
              << " models checked)\n";
    return kExitOk;
  }
  std::cout << "counterexample: " << res.detail << "\n";
  std::cout << to_text(res.lattice);
  return kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite multiplicative lattice engine"};
  app.require_subcommand(1);
  app.fallthrough();
  app.failure_message(CLI::FailureMessage::help);

  int workers = workers_from_env();
  app.add_option("--workers", workers, "worker threads (env MLAT_WORKERS)")
      ->check(CLI::Range(1, 64));
  std::uint64_t seed = 0;
  app.add_option("--seed", seed,
                 "reserved for relabeling stress harnesses; results never "
                 "depend on it");

  std::vector<std::string> gen_spec;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a family member");
  gen->add_option("spec", gen_spec, "family spec, e.g. 'zmod m=12'")
      ->required()
      ->take_all();
  gen->add_option("-o,--out", gen_out, "write to file instead of stdout");

  std::string classify_path;
  CLI::App* classify = app.add_subcommand("classify", "print the lattice profile");
  classify->add_option("file", classify_path, "lattice file")->required();

  std::string hollow_path;
  CLI::App* hollow = app.add_subcommand("hollow", "print hollow profiles");
  hollow->add_option("file", hollow_path, "lattice file")->required();

  std::string res_path, res_a, res_b;
  CLI::App* res = app.add_subcommand("residual", "print the residual (a:b)");
  res->add_option("file", res_path, "lattice file")->required();
  res->add_option("a", res_a, "numerator element (name or id)")->required();
  res->add_option("b", res_b, "denominator element (name or id)")->required();

  std::string quot_path, quot_at, quot_out;
  CLI::App* quot = app.add_subcommand("quotient", "emit the interval above an element");
  quot->add_option("file", quot_path, "lattice file")->required();
  quot->add_option("element", quot_at, "bottom of the interval")->required();
  quot->add_option("-o,--out", quot_out, "write to file instead of stdout");

  std::string loc_path, loc_prime, loc_out;
  CLI::App* loc = app.add_subcommand("localize", "emit the localization at a prime");
  loc->add_option("file", loc_path, "lattice file")->required();
  loc->add_option("prime", loc_prime, "prime element (name or id)")->required();
  loc->add_option("-o,--out", loc_out, "write to file instead of stdout");

  std::string prod_left, prod_right, prod_out;
  CLI::App* prod = app.add_subcommand("product", "emit the direct product");
  prod->add_option("left", prod_left, "left factor file")->required();
  prod->add_option("right", prod_right, "right factor file")->required();
  prod->add_option("-o,--out", prod_out, "write to file instead of stdout");

  std::string verify_corpus, verify_allow;
  std::vector<std::string> verify_checks;
  bool verify_machine = false;
  CLI::App* verify = app.add_subcommand("verify", "run the theorem suite");
  verify->add_option("--corpus", verify_corpus, "corpus manifest")->required();
  verify->add_option("--checks", verify_checks,
                     "check ids or prefixes, comma separated (default all)");
  verify->add_option("--allow", verify_allow, "expected-discrepancy allowlist");
  verify->add_flag("--machine", verify_machine, "line-oriented output");

  int search_max_n = 4;
  std::string search_out;
  CLI::App* search = app.add_subcommand("search", "enumerate models up to isomorphism");
  search->add_option("--max-n", search_max_n, "largest element count")
      ->required()
      ->check(CLI::Range(1, 6));
  search->add_option("-o,--out", search_out, "directory for one file per model");

  std::string mine_query;
  int mine_max_n = 4;
  CLI::App* miner = app.add_subcommand("mine", "test an implication over enumerated models");
  miner->add_option("--query", mine_query, "implication query")->required();
  miner->add_option("--max-n", mine_max_n, "largest element count")
      ->required()
      ->check(CLI::Range(1, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_spec, gen_out);
    if (classify->parsed()) return run_classify(classify_path);
    if (hollow->parsed()) return run_hollow(hollow_path);
    if (res->parsed()) return run_residual(res_path, res_a, res_b);
    if (quot->parsed()) return run_quotient(quot_path, quot_at, quot_out);
    if (loc->parsed()) return run_localize(loc_path, loc_prime, loc_out);
    if (prod->parsed()) return run_product(prod_left, prod_right, prod_out);
    if (verify->parsed())
      return run_verify(verify_corpus, verify_checks, verify_allow,
                        verify_machine, workers);
    if (search->parsed()) return run_search(search_max_n, search_out);
    if (miner->parsed()) return run_mine(mine_query, mine_max_n);
  } catch (const StructureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
