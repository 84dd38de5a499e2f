#pragma once

#include "leiblab/classify.hpp"
#include "leiblab/oracle.hpp"

namespace leiblab {

/// Raised on malformed algebra files, including Leibniz-identity failures.
struct LoadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads and fully validates an algebra file (JSON; see README for the
/// schema).  Any defect (parse error, bad index, scalar in the wrong
/// field, dim 0, Leibniz violation) raises LoadError.
LeibnizAlgebra load_algebra(const std::string& path);
LeibnizAlgebra algebra_from_json_text(const std::string& text, const std::string& origin);

/// Canonical serialization: sorted nonzero products, canonical scalars.
std::string algebra_to_json_text(const LeibnizAlgebra& a, int indent = 2);
void save_algebra(const LeibnizAlgebra& a, const std::string& path);

/// Reinterprets rational structure constants mod p.  Requires a
/// Q-algebra whose coefficient denominators are all units mod p; the
/// result is re-validated from scratch.
LeibnizAlgebra transplant_to_gf(const LeibnizAlgebra& a, std::uint64_t p);

/// Rows in the CLI text form "1,0;0,1".
std::vector<Vec> parse_rows(const std::string& text, FieldDescriptor f, std::size_t dim);
/// A single comma-separated scalar list of any length.
Vec parse_scalar_list(const std::string& text, FieldDescriptor f);
std::string rows_to_text(const std::vector<Vec>& rows);
std::string subspace_to_text(const Subspace& s);

std::string fnv1a64_hex(const std::string& bytes);

/// Everything `analyze` reports; deterministic given input and seed.
struct AnalysisReport {
  std::string digest;
  FieldDescriptor field = FieldDescriptor::rationals();
  std::size_t dim = 0;
  std::vector<std::string> labels;
  bool lie = false;
  bool nilpotent = false;
  bool solvable = false;
  Subspace leibniz_kernel{FieldDescriptor::rationals(), 0};
  SeriesReport lower_central;
  SeriesReport derived;
  VerifyResult verdict = VerifyFailure{};
  std::uint64_t seed = 0;
};

AnalysisReport analyze_algebra(const LeibnizAlgebra& a, const std::string& digest,
                               std::uint64_t seed);
std::string report_to_json(const AnalysisReport& r, int indent = 2);
std::string report_to_text(const AnalysisReport& r);

}  // namespace leiblab
