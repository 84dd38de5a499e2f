#include "leiblab/structure.hpp"

#include <random>

namespace leiblab {

FittingPair fitting_wrt(const LeibnizAlgebra& a, const Vec& x) {
  FittingSplit s = fitting_split(a.left_mult_matrix(x));
  return FittingPair{x, std::move(s.null_component), std::move(s.one_component)};
}

Subspace core_of(const LeibnizAlgebra& a, const Subspace& m) {
  if (!a.is_subalgebra(m)) throw std::invalid_argument("core_of: M is not a subalgebra");
  Subspace cur = m;
  while (true) {
    if (cur.is_zero()) return cur;
    // v = c . basis(cur); require [e_i, v] and [v, e_i] in cur for all i
    std::size_t d = cur.dim(), n = a.dim();
    std::vector<Vec> constraint_rows;
    for (std::size_t i = 0; i < n; ++i) {
      Vec ei = unit_vec(a.field(), n, i);
      for (int side = 0; side < 2; ++side) {
        // residues of [e_i, b_j] (or [b_j, e_i]) mod cur, as columns over c
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < d; ++j) {
          Vec w = side == 0 ? a.bracket(ei, cur.basis()[j]) : a.bracket(cur.basis()[j], ei);
          cols.push_back(cur.reduce(w));
        }
        for (std::size_t r = 0; r < n; ++r) {
          Vec row = zero_vec(a.field(), d);
          bool any = false;
          for (std::size_t j = 0; j < d; ++j) {
            row[j] = cols[j][r];
            any = any || !row[j].is_zero();
          }
          if (any) constraint_rows.push_back(std::move(row));
        }
      }
    }
    if (constraint_rows.empty()) return cur;  // already an ideal
    Matrix constraints = Matrix::from_rows(a.field(), constraint_rows, d);
    std::vector<Vec> coeff_basis = constraints.kernel();
    std::vector<Vec> rows;
    for (const Vec& c : coeff_basis) {
      Vec w = zero_vec(a.field(), n);
      for (std::size_t j = 0; j < d; ++j) w = add(w, scale(c[j], cur.basis()[j]));
      rows.push_back(std::move(w));
    }
    Subspace next = Subspace::span(a.field(), n, rows);
    if (next.dim() == cur.dim()) return cur;
    cur = next;
  }
}

namespace {

Scalar lift_small_int(FieldDescriptor f, long v) { return Scalar::from_int(f, v); }

}  // namespace

std::vector<Vec> candidate_rows(FieldDescriptor f, std::size_t n, std::uint64_t seed,
                                bool with_differences, std::size_t random_count) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vec(f, n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.push_back(add(unit_vec(f, n, i), unit_vec(f, n, j)));
  if (with_differences)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) out.push_back(sub(unit_vec(f, n, i), unit_vec(f, n, j)));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-2, 2);
  for (std::size_t t = 0; t < random_count; ++t) {
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(lift_small_int(f, dist(rng)));
    if (!is_zero_vec(v)) out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> candidate_elements(const LeibnizAlgebra& a, std::uint64_t seed,
                                    bool with_differences, std::size_t random_count) {
  return candidate_rows(a.field(), a.dim(), seed, with_differences, random_count);
}

std::optional<Vec> find_nonnilpotent_element(const LeibnizAlgebra& a, std::uint64_t seed) {
  for (const Vec& v : candidate_elements(a, seed)) {
    if (is_zero_vec(v)) continue;
    if (!is_nilpotent_operator(a.left_mult_matrix(v))) return v;
  }
  return std::nullopt;
}

CartanSearch find_cartan(const LeibnizAlgebra& a, std::uint64_t seed) {
  auto x = find_nonnilpotent_element(a, seed);
  if (!x) return {std::nullopt, "no element with nonnilpotent left multiplication found"};
  FittingPair fp = fitting_wrt(a, *x);
  const Subspace& l0 = fp.null_component;
  if (!a.is_subalgebra(l0)) return {std::nullopt, "Fitting null component is not a subalgebra"};
  if (!a.is_nilpotent(l0)) return {std::nullopt, "Fitting null component is not nilpotent"};
  if (!(a.normalizer(l0) == l0)) return {std::nullopt, "Fitting null component is not self-normalizing"};
  return {l0, ""};
}

NilradicalCertificate is_nilradical_codim1(const LeibnizAlgebra& a, const Subspace& i) {
  if (i.ambient_dim() != a.dim() || i.dim() + 1 != a.dim())
    throw std::invalid_argument("is_nilradical_codim1: subspace must have codimension 1");
  NilradicalCertificate cert;
  cert.is_ideal = a.is_ideal(i);
  cert.ideal_nilpotent = cert.is_ideal && (i.is_zero() || a.is_nilpotent(i));
  cert.algebra_nonnilpotent = !a.is_nilpotent();
  cert.certified = cert.is_ideal && cert.ideal_nilpotent && cert.algebra_nonnilpotent;
  if (cert.certified)
    cert.justification =
        "I is a nilpotent ideal, so nilrad(L) contains I; any nilpotent ideal "
        "strictly above a codimension-1 ideal would be L itself, which is not nilpotent";
  return cert;
}

CyclicSearch is_cyclic(const LeibnizAlgebra& a, std::uint64_t seed) {
  std::size_t n = a.dim();
  FieldDescriptor f = a.field();
  std::vector<Vec> candidates = candidate_elements(a, seed);
  if (f.kind == FieldKind::GaussianRationals) {
    Scalar im = Scalar::from_gaussian(0, 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) candidates.push_back(add(unit_vec(f, n, i), scale(im, unit_vec(f, n, j))));
  }

  bool exhaustive = false;
  if (f.finite()) {
    // full enumeration when the element count is small
    double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(f.characteristic);
    if (total <= 1'000'000.0) {
      exhaustive = true;
      candidates.clear();
      std::vector<std::uint64_t> digits(n, 0);
      while (true) {
        Vec v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar::from_residue(f.characteristic, digits[i]));
        if (!is_zero_vec(v)) candidates.push_back(std::move(v));
        std::size_t pos = 0;
        while (pos < n && ++digits[pos] == f.characteristic) digits[pos++] = 0;
        if (pos == n) break;
      }
    }
  }

  for (const Vec& v : candidates) {
    if (is_zero_vec(v)) continue;
    if (a.subalgebra_closure({v}).is_full()) return {v, exhaustive};
  }
  return {std::nullopt, exhaustive};
}

Matrix restriction_matrix(const LeibnizAlgebra& a, const Vec& x, const Subspace& w) {
  std::size_t d = w.dim();
  Matrix m(a.field(), d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec img = a.bracket(x, w.basis()[j]);
    if (!w.contains(img))
      throw std::invalid_argument("restriction_matrix: subspace is not invariant under l_x");
    for (std::size_t r = 0; r < d; ++r) m.at(r, j) = img[w.pivots()[r]];
  }
  return m;
}

IrreducibleOutcome action_irreducible(const LeibnizAlgebra& a, const Vec& x, const Subspace& w) {
  if (w.is_zero()) throw std::invalid_argument("action_irreducible: zero subspace");
  Matrix m = restriction_matrix(a, x, w);
  return poly_irreducible(char_poly(m)).outcome;
}

}  // namespace leiblab
