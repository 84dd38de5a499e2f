#include "leiblab/io.hpp"

#include <fstream>
#include <sstream>

#include "json_util.hpp"

namespace leiblab {

using detail::json;
using ordered_json = nlohmann::ordered_json;

LeibnizAlgebra algebra_from_json_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw LoadError(origin + ": JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  try {
    if (!j.is_object()) throw LoadError(origin + ": top level must be an object");
    if (!j.contains("field")) throw LoadError(origin + ": missing \"field\"");
    FieldDescriptor f = detail::field_from_json(j["field"]);
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
      throw LoadError(origin + ": missing or malformed \"dim\"");
    std::size_t dim = j["dim"].get<std::size_t>();
    if (dim == 0) throw LoadError(origin + ": dimension 0 is rejected");

    std::vector<std::string> labels;
    if (j.contains("basis")) {
      for (const auto& b : j["basis"]) labels.push_back(b.get<std::string>());
      if (labels.size() != dim)
        throw LoadError(origin + ": basis has " + std::to_string(labels.size()) +
                        " labels for dimension " + std::to_string(dim));
    }

    LeibnizAlgebra::ProductTable table;
    if (j.contains("products")) {
      for (const auto& prod : j["products"]) {
        if (!prod.contains("left") || !prod.contains("right") || !prod.contains("result"))
          throw LoadError(origin + ": each product needs \"left\", \"right\", \"result\"");
        std::size_t l = prod["left"].get<std::size_t>();
        std::size_t r = prod["right"].get<std::size_t>();
        if (l >= dim || r >= dim)
          throw LoadError(origin + ": product index (" + std::to_string(l) + "," +
                          std::to_string(r) + ") out of range for dimension " + std::to_string(dim));
        if (table.count({l, r}))
          throw LoadError(origin + ": duplicate product (" + std::to_string(l) + "," +
                          std::to_string(r) + ")");
        Vec row = zero_vec(f, dim);
        for (const auto& [key, val] : prod["result"].items()) {
          std::size_t k = 0;
          try {
            k = static_cast<std::size_t>(std::stoul(key));
          } catch (...) {
            throw LoadError(origin + ": result key '" + key + "' is not an index");
          }
          if (k >= dim)
            throw LoadError(origin + ": result index " + key + " out of range");
          try {
            row[k] = Scalar::parse(val.get<std::string>(), f);
          } catch (const std::exception& e) {
            throw LoadError(origin + ": scalar '" + val.get<std::string>() + "' invalid over " +
                            f.name() + ": " + e.what());
          }
        }
        table[{l, r}] = std::move(row);
      }
    }

    LeibnizAlgebra a(f, dim, labels, table);
    if (auto w = a.validate())
      throw LoadError(origin + ": Leibniz identity fails at basis triple " + w->str());
    return a;
  } catch (const LoadError&) {
    throw;
  } catch (const std::exception& e) {
    throw LoadError(origin + ": " + e.what());
  }
}

LeibnizAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return algebra_from_json_text(ss.str(), path);
}

std::string algebra_to_json_text(const LeibnizAlgebra& a, int indent) {
  ordered_json j;
  j["field"] = ordered_json::parse(detail::field_to_json(a.field()).dump());
  j["dim"] = a.dim();
  j["basis"] = a.labels();
  ordered_json products = ordered_json::array();
  for (const auto& [key, row] : a.sparse_table()) {
    ordered_json p;
    p["left"] = key.first;
    p["right"] = key.second;
    ordered_json result;
    for (std::size_t k = 0; k < row.size(); ++k)
      if (!row[k].is_zero()) result[std::to_string(k)] = row[k].str();
    p["result"] = result;
    products.push_back(p);
  }
  j["products"] = products;
  return j.dump(indent) + "\n";
}

void save_algebra(const LeibnizAlgebra& a, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LoadError(path + ": cannot open for writing");
  out << algebra_to_json_text(a);
}

LeibnizAlgebra transplant_to_gf(const LeibnizAlgebra& a, std::uint64_t p) {
  if (a.field().kind != FieldKind::Rationals)
    throw LoadError("transplant: only Q-algebras can be transplanted (got " + a.field().name() + ")");
  FieldDescriptor gf = FieldDescriptor::prime_field(p);
  LeibnizAlgebra::ProductTable table;
  for (const auto& [key, row] : a.sparse_table()) {
    Vec out = zero_vec(gf, a.dim());
    for (std::size_t k = 0; k < row.size(); ++k) {
      const mpq_class& q = row[k].rational();
      mpz_class den = q.get_den();
      if (den % static_cast<long>(p) == 0)
        throw LoadError("transplant: denominator of coefficient " + q.get_str() +
                        " is not a unit mod " + std::to_string(p));
      mpz_class num = q.get_num() % static_cast<long>(p);
      if (num < 0) num += static_cast<long>(p);
      mpz_class d = den % static_cast<long>(p);
      Scalar s = Scalar::from_residue(p, num.get_ui()) / Scalar::from_residue(p, d.get_ui());
      out[k] = s;
    }
    table[key] = std::move(out);
  }
  LeibnizAlgebra t(gf, a.dim(), a.labels(), table);
  if (auto w = t.validate())
    throw LoadError("transplant: Leibniz identity fails mod " + std::to_string(p) +
                    " at basis triple " + w->str());
  return t;
}

std::vector<Vec> parse_rows(const std::string& text, FieldDescriptor f, std::size_t dim) {
  std::vector<Vec> rows;
  std::string part;
  std::istringstream is(text);
  while (std::getline(is, part, ';')) {
    Vec row;
    std::string tok;
    std::istringstream rs(part);
    while (std::getline(rs, tok, ',')) row.push_back(Scalar::parse(tok, f));
    if (row.size() != dim)
      throw std::invalid_argument("row '" + part + "' has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(dim));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("no rows given");
  return rows;
}

Vec parse_scalar_list(const std::string& text, FieldDescriptor f) {
  Vec out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) out.push_back(Scalar::parse(tok, f));
  if (out.empty()) throw std::invalid_argument("empty scalar list");
  return out;
}

std::string rows_to_text(const std::vector<Vec>& rows) {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) os << " ; ";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) os << ",";
      os << rows[r][c].str();
    }
  }
  return os.str();
}

std::string subspace_to_text(const Subspace& s) {
  if (s.is_zero()) return "0";
  return "span{ " + rows_to_text(s.basis()) + " }";
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xf);
  return os.str();
}

AnalysisReport analyze_algebra(const LeibnizAlgebra& a, const std::string& digest,
                               std::uint64_t seed) {
  AnalysisReport r;
  r.digest = digest;
  r.field = a.field();
  r.dim = a.dim();
  r.labels = a.labels();
  r.lie = a.is_lie();
  r.lower_central = a.series(SeriesKind::LowerCentral);
  r.derived = a.series(SeriesKind::Derived);
  r.nilpotent = r.lower_central.terminates_at_zero;
  r.solvable = r.derived.terminates_at_zero;
  r.leibniz_kernel = a.leibniz_kernel();
  r.verdict = verify_theorem(a, seed);
  r.seed = seed;
  return r;
}

namespace {

ordered_json series_to_json(const SeriesReport& s) {
  ordered_json j;
  ordered_json dims = ordered_json::array();
  for (std::size_t d : s.dims()) dims.push_back(d);
  j["dims"] = dims;
  j["stabilized_at"] = s.stabilized_at;
  j["terminates_at_zero"] = s.terminates_at_zero;
  return j;
}

std::string series_text(const SeriesReport& s) {
  std::ostringstream os;
  auto ds = s.dims();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) os << " -> ";
    os << ds[i];
  }
  os << (s.terminates_at_zero ? "  (reaches zero)" : "  (stabilizes nonzero)");
  return os.str();
}

}  // namespace

std::string report_to_json(const AnalysisReport& r, int indent) {
  ordered_json j;
  j["schema"] = "leibniz-report/1";
  j["input_digest"] = "fnv1a64:" + r.digest;
  j["field"] = ordered_json::parse(detail::field_to_json(r.field).dump());
  j["dim"] = r.dim;
  j["basis"] = r.labels;
  j["validation"] = ordered_json{{"pass", true}};
  j["flags"] = ordered_json{{"lie", r.lie}, {"nilpotent", r.nilpotent}, {"solvable", r.solvable}};
  ordered_json lk = ordered_json::array();
  for (const auto& row : r.leibniz_kernel.basis()) {
    ordered_json jr = ordered_json::array();
    for (const auto& c : row) jr.push_back(c.str());
    lk.push_back(jr);
  }
  j["leibniz_kernel"] = lk;
  j["series"] = ordered_json{{"lower_central", series_to_json(r.lower_central)},
                             {"derived", series_to_json(r.derived)}};
  if (std::holds_alternative<MinNonCertificate>(r.verdict)) {
    j["certificate"] =
        ordered_json::parse(certificate_to_json(std::get<MinNonCertificate>(r.verdict), -1));
    j["certificate_failure"] = nullptr;
  } else {
    const auto& f = std::get<VerifyFailure>(r.verdict);
    j["certificate"] = nullptr;
    j["certificate_failure"] = ordered_json{{"stage", f.stage}, {"detail", f.detail}};
  }
  j["oracle"] = nullptr;
  j["seed"] = r.seed;
  return j.dump(indent) + "\n";
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "leibniz-lab report (leibniz-report/1)\n";
  os << "input digest: fnv1a64:" << r.digest << "\n";
  os << "field: " << r.field.name() << "   dim: " << r.dim << "   basis:";
  for (const auto& l : r.labels) os << " " << l;
  os << "\n";
  os << "Leibniz identity: PASS\n";
  os << "lie: " << (r.lie ? "yes" : "no") << "\n";
  os << "nilpotent: " << (r.nilpotent ? "yes" : "no") << "\n";
  os << "solvable: " << (r.solvable ? "yes" : "no") << "\n";
  os << "Leib(L): " << subspace_to_text(r.leibniz_kernel) << "\n";
  os << "lower central series dims: " << series_text(r.lower_central) << "\n";
  os << "derived series dims: " << series_text(r.derived) << "\n";
  if (std::holds_alternative<MinNonCertificate>(r.verdict)) {
    const auto& c = std::get<MinNonCertificate>(r.verdict);
    os << "theorem check: SUCCESS\n";
    os << "  x: " << rows_to_text({c.x}) << "\n";
    os << "  N: " << subspace_to_text(c.N) << "  (dim " << c.N.dim() << ")\n";
    os << "  L1: " << subspace_to_text(c.L1) << "  (dim " << c.L1.dim() << ")\n";
    os << "  F: " << subspace_to_text(c.F) << "\n";
    os << "  A: " << subspace_to_text(c.A) << "  (dim " << c.A.dim() << ")\n";
    os << "  companion chain: " << rows_to_text(c.companion) << "\n";
    os << "  p(lambda) coefficients: " << c.p.str() << "  ("
       << irreducible_outcome_name(c.p_irreducible) << ")\n";
    os << "  x^2 in N: " << (c.x_squared_in_N ? "yes" : "no") << "\n";
    os << "  N formula holds: " << (c.N_formula_holds ? "yes" : "no") << "\n";
    os << "  A is nilradical: " << (c.A_is_nilradical ? "yes" : "no") << "\n";
    os << "  A^3 in Leib: " << (c.A_cubed_in_leib ? "yes" : "no") << "\n";
    os << "  decomposition L = N + L1 + F: " << (c.decomposition_ok ? "yes" : "no") << "\n";
    os << "  dichotomy: " << dichotomy_name(c.dichotomy);
    if (c.generator) os << ", generator " << rows_to_text({*c.generator});
    os << "\n";
  } else {
    const auto& f = std::get<VerifyFailure>(r.verdict);
    os << "theorem check: FAILURE\n";
    os << "  stage: " << f.stage << "\n";
    os << "  detail: " << f.detail << "\n";
  }
  return os.str();
}

}  // namespace leiblab
