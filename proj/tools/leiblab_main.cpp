// leiblab: exact analysis of finite-dimensional Leibniz algebras from
// structure-constant files.  Exit codes: 0 analysis completed (a failed
// certificate is data, not an error), 1 usage/IO/validation error,
// 2 oracle budget refusal.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "leiblab/io.hpp"

using namespace leiblab;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FieldDescriptor parse_field_flag(const std::string& s) {
  if (s == "Q") return FieldDescriptor::rationals();
  if (s == "Q(i)" || s == "Qi") return FieldDescriptor::gaussian_rationals();
  if (s.rfind("GF(", 0) == 0 && s.back() == ')')
    return FieldDescriptor::prime_field(std::stoull(s.substr(3, s.size() - 4)));
  throw std::invalid_argument("unknown field '" + s + "' (use Q, Q(i) or GF(p))");
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("LEIBNIZ_LAB_BUDGET")) return std::stoull(env);
  return oracle::EnumerationBudget{}.max_subspaces;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LoadError(path + ": cannot open for writing");
  out << text;
}

struct OracleArgs {
  std::string file;
  std::uint64_t budget = default_budget();
  std::string subalgebra;
  unsigned jobs = 1;  // accepted as a hint; output is independent of it
  std::string json_path;
};

int run_oracle(const std::string& kind, const OracleArgs& args) {
  LeibnizAlgebra a = load_algebra(args.file);
  oracle::EnumerationBudget budget{args.budget};
  nlohmann::ordered_json j;
  j["schema"] = "leibniz-report/1";
  j["input_digest"] = "fnv1a64:" + fnv1a64_hex(read_file(args.file));
  j["oracle"] = nlohmann::ordered_json{{"kind", kind}, {"budget", args.budget}};

  auto rows_json = [](const Subspace& s) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& row : s.basis()) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const auto& c : row) r.push_back(c.str());
      out.push_back(r);
    }
    return out;
  };

  if (kind == "minimality") {
    oracle::MinimalityOutcome out = oracle::minimality_check(a, budget);
    switch (out.kind) {
      case oracle::MinimalityOutcome::Kind::Pass:
        std::cout << "minimality: PASS\n";
        break;
      case oracle::MinimalityOutcome::Kind::Fail:
        std::cout << "minimality: FAIL\n";
        std::cout << "witness subalgebra: " << subspace_to_text(*out.witness) << "\n";
        break;
      case oracle::MinimalityOutcome::Kind::HypothesisFail:
        std::cout << "minimality: HYPOTHESIS FAIL (" << out.note << ")\n";
        break;
    }
    std::cout << "census: " << out.subspaces << " subspaces, " << out.subalgebras
              << " proper subalgebras, " << out.nilpotent_subalgebras << " nilpotent\n";
    j["oracle"]["outcome"] = out.pass() ? "pass"
                             : out.kind == oracle::MinimalityOutcome::Kind::Fail ? "fail"
                                                                                 : "hypothesis-fail";
    j["oracle"]["census"] = nlohmann::ordered_json{{"subspaces", out.subspaces},
                                                   {"subalgebras", out.subalgebras},
                                                   {"nilpotent_subalgebras", out.nilpotent_subalgebras}};
    if (out.witness) j["oracle"]["witness"] = rows_json(*out.witness);
  } else if (kind == "nilradical") {
    Subspace nr = oracle::bruteforce_nilradical(a, budget);
    std::cout << "nilradical: " << subspace_to_text(nr) << "  (dim " << nr.dim() << ")\n";
    j["oracle"]["nilradical"] = rows_json(nr);
  } else if (kind == "frattini") {
    Subspace fr = oracle::frattini_ideal(a, budget);
    std::cout << "frattini ideal: " << subspace_to_text(fr) << "  (dim " << fr.dim() << ")\n";
    j["oracle"]["frattini_ideal"] = rows_json(fr);
  } else if (kind == "core") {
    if (args.subalgebra.empty())
      throw std::invalid_argument("oracle core requires --subalgebra ROWS");
    Subspace m = Subspace::span(a.field(), a.dim(), parse_rows(args.subalgebra, a.field(), a.dim()));
    Subspace brute = oracle::bruteforce_largest_ideal(a, m, budget);
    Subspace fast = core_of(a, m);
    std::cout << "core (fixed-point): " << subspace_to_text(fast) << "\n";
    std::cout << "core (brute force): " << subspace_to_text(brute) << "\n";
    std::cout << "agreement: " << (fast == brute ? "yes" : "NO") << "\n";
    j["oracle"]["core"] = rows_json(brute);
    j["oracle"]["agreement"] = (fast == brute);
  } else if (kind == "minimal-ideals") {
    std::vector<Subspace> mins = oracle::minimal_ideals(a, budget);
    std::cout << "minimal ideals: " << mins.size() << "\n";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& m : mins) {
      std::cout << "  " << subspace_to_text(m) << "\n";
      arr.push_back(rows_json(m));
    }
    j["oracle"]["minimal_ideals"] = arr;
  } else {
    throw std::invalid_argument("unknown oracle subcommand '" + kind + "'");
  }
  if (!args.json_path.empty()) write_text_file(args.json_path, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure analysis of finite-dimensional Leibniz algebras"};
  app.require_subcommand(1);

  // validate
  std::string v_file;
  CLI::App* validate = app.add_subcommand("validate", "check the Leibniz identity on a file");
  validate->add_option("file", v_file, "algebra file")->required();

  // analyze
  std::string a_file, a_json;
  std::uint64_t a_seed = 0;
  CLI::App* analyze = app.add_subcommand("analyze", "full structural report and theorem check");
  analyze->add_option("file", a_file, "algebra file")->required();
  analyze->add_option("--json", a_json, "write the machine-readable report here");
  analyze->add_option("--seed", a_seed, "seed for deterministic candidate searches");

  // construct standard|chain|cyclic
  CLI::App* construct = app.add_subcommand("construct", "build one of the classified families");
  construct->require_subcommand(1);
  std::string c_field = "Q", c_out, c_coeffs, c_top;
  std::size_t c_j = 1, c_k = 1, c_dim = 2;
  CLI::App* cs = construct->add_subcommand("standard", "x a_i = a_{i+1}, x a_k = sum c_i a_i");
  cs->add_option("--coeffs", c_coeffs, "c_0,c_1,..,c_k (c_0 nonzero)")->required();
  cs->add_option("--field", c_field, "Q, Q(i) or GF(p)");
  cs->add_option("-o,--output", c_out, "output file")->required();
  CLI::App* cc = construct->add_subcommand("chain", "two power chains with xa = a = -ax");
  cc->add_option("--j", c_j, "length of the x chain")->required();
  cc->add_option("--k", c_k, "length of the a chain")->required();
  cc->add_option("--field", c_field, "Q, Q(i) or GF(p)");
  cc->add_option("-o,--output", c_out, "output file")->required();
  CLI::App* cy = construct->add_subcommand("cyclic", "one generator, z z^d given by --top");
  cy->add_option("--dim", c_dim, "dimension d")->required();
  cy->add_option("--top", c_top, "t_1,..,t_d: coefficients of z z^d")->required();
  cy->add_option("--field", c_field, "Q, Q(i) or GF(p)");
  cy->add_option("-o,--output", c_out, "output file")->required();

  // quotient
  std::string q_file, q_ideal, q_out;
  CLI::App* quot = app.add_subcommand("quotient", "quotient by an ideal");
  quot->add_option("file", q_file, "algebra file")->required();
  quot->add_option("--ideal", q_ideal, "ideal rows, e.g. \"0,1;1,0\"")->required();
  quot->add_option("-o,--output", q_out, "output file")->required();

  // closure
  std::string cl_file, cl_elems;
  bool cl_ideal = false;
  CLI::App* closure = app.add_subcommand("closure", "subalgebra or ideal closure of elements");
  closure->add_option("file", cl_file, "algebra file")->required();
  closure->add_option("--elements", cl_elems, "generator rows")->required();
  closure->add_flag("--ideal", cl_ideal, "ideal closure instead of subalgebra closure");

  // oracle
  OracleArgs o_args;
  CLI::App* orc = app.add_subcommand("oracle", "exhaustive finite-field ground truth");
  orc->require_subcommand(1);
  std::vector<std::string> oracle_kinds = {"minimality", "nilradical", "frattini", "core", "minimal-ideals"};
  for (const auto& kind : oracle_kinds) {
    CLI::App* sub = orc->add_subcommand(kind);
    sub->add_option("file", o_args.file, "algebra file")->required();
    sub->add_option("--budget", o_args.budget, "maximum subspace count");
    sub->add_option("--jobs", o_args.jobs, "worker hint; never changes output");
    sub->add_option("--json", o_args.json_path, "write the oracle report here");
    if (kind == "core") sub->add_option("--subalgebra", o_args.subalgebra, "rows of M")->required();
  }

  // transplant
  std::string t_file, t_out;
  std::uint64_t t_p = 0;
  CLI::App* trans = app.add_subcommand("transplant", "reinterpret a Q-algebra mod p");
  trans->add_option("file", t_file, "algebra file")->required();
  trans->add_option("--to-gf", t_p, "target prime p")->required();
  trans->add_option("-o,--output", t_out, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  auto started = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (*validate) {
      LeibnizAlgebra a = load_algebra(v_file);
      (void)a;
      std::cout << "Leibniz identity: PASS\n";
    } else if (*analyze) {
      std::string bytes = read_file(a_file);
      LeibnizAlgebra a = algebra_from_json_text(bytes, a_file);
      AnalysisReport rep = analyze_algebra(a, fnv1a64_hex(bytes), a_seed);
      std::cout << report_to_text(rep);
      if (!a_json.empty()) write_text_file(a_json, report_to_json(rep));
    } else if (*construct) {
      FieldDescriptor f = parse_field_flag(c_field);
      if (*cs) {
        StandardAlgebra sa = construct_standard(f, parse_scalar_list(c_coeffs, f));
        save_algebra(sa.algebra, c_out);
        std::cout << "wrote " << c_out << "  (dim " << sa.algebra.dim()
                  << ", p coefficients " << sa.p.str() << ")\n";
      } else if (*cc) {
        LeibnizAlgebra a = construct_chain(f, c_j, c_k);
        save_algebra(a, c_out);
        std::cout << "wrote " << c_out << "  (dim " << a.dim() << ")\n";
      } else {
        CyclicConstruction out = construct_cyclic(f, c_dim, parse_scalar_list(c_top, f));
        if (out.violation) {
          std::cout << "Leibniz identity: FAIL at basis triple " << out.violation->str() << "\n";
          return 1;
        }
        std::cout << "Leibniz identity: PASS\n";
        save_algebra(out.algebra, c_out);
        std::cout << "wrote " << c_out << "  (dim " << out.algebra.dim() << ")\n";
      }
    } else if (*quot) {
      LeibnizAlgebra a = load_algebra(q_file);
      Subspace ideal = Subspace::span(a.field(), a.dim(), parse_rows(q_ideal, a.field(), a.dim()));
      LeibnizAlgebra::Quotient q = a.quotient(ideal);
      save_algebra(q.algebra, q_out);
      std::cout << "wrote " << q_out << "  (dim " << q.algebra.dim() << ")\n";
    } else if (*closure) {
      LeibnizAlgebra a = load_algebra(cl_file);
      std::vector<Vec> gens = parse_rows(cl_elems, a.field(), a.dim());
      Subspace c = cl_ideal ? a.ideal_closure(gens) : a.subalgebra_closure(gens);
      std::cout << (cl_ideal ? "ideal closure: " : "subalgebra closure: ") << subspace_to_text(c)
                << "  (dim " << c.dim() << ")\n";
    } else if (*orc) {
      for (const auto& kind : oracle_kinds)
        if (orc->get_subcommand(kind)->parsed()) {
          rc = run_oracle(kind, o_args);
          break;
        }
    } else if (*trans) {
      LeibnizAlgebra a = load_algebra(t_file);
      LeibnizAlgebra out = transplant_to_gf(a, t_p);
      save_algebra(out, t_out);
      std::cout << "wrote " << t_out << "  (field " << out.field().name() << ")\n";
    }
  } catch (const oracle::BudgetExceeded& e) {
    std::cerr << "budget refusal: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  std::cerr << "elapsed_ms: " << elapsed << "\n";
  return rc;
}
