#include "leiblab/oracle.hpp"

#include <algorithm>

namespace leiblab::oracle {

mpz_class count_subspaces(std::uint64_t p, std::size_t n) {
  mpz_class q(static_cast<unsigned long>(p));
  mpz_class total = 0;
  for (std::size_t d = 0; d <= n; ++d) {
    mpz_class num = 1, den = 1;
    for (std::size_t i = 0; i < d; ++i) {
      mpz_class qn, qd;
      mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n - i));
      mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(i + 1));
      num *= qn - 1;
      den *= qd - 1;
    }
    total += num / den;
  }
  return total;
}

namespace {

// next k-combination of {0..n-1} in lexicographic order; false at the end
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  std::size_t k = c.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i-- > 0) {
    if (c[i] + (k - i) < n) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

void for_each_subspace(std::uint64_t p, std::size_t n, const EnumerationBudget& budget,
                       const std::function<bool(const Subspace&)>& visit) {
  FieldDescriptor f = FieldDescriptor::prime_field(p);
  mpz_class total = count_subspaces(p, n);
  if (total > budget.max_subspaces) throw BudgetExceeded(total, budget.max_subspaces);

  for (std::size_t d = 0; d <= n; ++d) {
    if (d == 0) {
      if (!visit(Subspace::zero(f, n))) return;
      continue;
    }
    std::vector<std::size_t> pivots(d);
    for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
    do {
      // free slots: (row r, col c) with c > pivots[r] and c not a pivot
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      std::vector<bool> is_pivot(n, false);
      for (std::size_t c : pivots) is_pivot[c] = true;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = pivots[r] + 1; c < n; ++c)
          if (!is_pivot[c]) slots.emplace_back(r, c);

      std::vector<std::uint64_t> vals(slots.size(), 0);
      while (true) {
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < d; ++r) rows.push_back(zero_vec(f, n));
        for (std::size_t r = 0; r < d; ++r) rows[r][pivots[r]] = Scalar::one(f);
        for (std::size_t s = 0; s < slots.size(); ++s)
          rows[slots[s].first][slots[s].second] = Scalar::from_residue(p, vals[s]);
        if (!visit(Subspace::span(f, n, rows))) return;

        std::size_t pos = 0;
        while (pos < vals.size() && ++vals[pos] == p) vals[pos++] = 0;
        if (pos == vals.size()) break;
      }
    } while (next_combination(pivots, n));
  }
}

std::vector<Subspace> enumerate_subspaces(std::uint64_t p, std::size_t n,
                                          const EnumerationBudget& budget) {
  std::vector<Subspace> out;
  for_each_subspace(p, n, budget, [&](const Subspace& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

namespace {

std::uint64_t finite_characteristic(const LeibnizAlgebra& a, const char* who) {
  if (!a.field().finite())
    throw std::invalid_argument(std::string(who) + ": requires a finite prime field");
  return a.field().characteristic;
}

}  // namespace

std::vector<Subspace> enumerate_subalgebras(const LeibnizAlgebra& a, const EnumerationBudget& budget) {
  std::uint64_t p = finite_characteristic(a, "enumerate_subalgebras");
  std::vector<Subspace> out;
  for_each_subspace(p, a.dim(), budget, [&](const Subspace& s) {
    if (a.is_subalgebra(s)) out.push_back(s);
    return true;
  });
  return out;
}

std::vector<Subspace> enumerate_ideals(const LeibnizAlgebra& a, const EnumerationBudget& budget) {
  std::uint64_t p = finite_characteristic(a, "enumerate_ideals");
  std::vector<Subspace> out;
  for_each_subspace(p, a.dim(), budget, [&](const Subspace& s) {
    if (a.is_ideal(s)) out.push_back(s);
    return true;
  });
  return out;
}

bool is_nilpotent_normalizer(const LeibnizAlgebra& a, const EnumerationBudget& budget) {
  std::uint64_t p = finite_characteristic(a, "is_nilpotent_normalizer");
  bool nilpotent = true;
  for_each_subspace(p, a.dim(), budget, [&](const Subspace& s) {
    if (s.is_full() || !a.is_subalgebra(s)) return true;
    if (a.normalizer(s) == s) {
      nilpotent = false;
      return false;
    }
    return true;
  });
  return nilpotent;
}

MinimalityOutcome minimality_check(const LeibnizAlgebra& a, const EnumerationBudget& budget) {
  std::uint64_t p = finite_characteristic(a, "minimality_check");
  MinimalityOutcome out;
  if (a.is_nilpotent()) {
    out.kind = MinimalityOutcome::Kind::HypothesisFail;
    out.note = "algebra is nilpotent";
    return out;
  }
  if (!a.is_solvable()) {
    out.kind = MinimalityOutcome::Kind::HypothesisFail;
    out.note = "algebra is not solvable";
    return out;
  }
  for_each_subspace(p, a.dim(), budget, [&](const Subspace& s) {
    ++out.subspaces;
    if (s.is_full() || !a.is_subalgebra(s)) return true;
    ++out.subalgebras;
    if (s.is_zero() || a.is_nilpotent(s)) {
      ++out.nilpotent_subalgebras;
      return true;
    }
    out.kind = MinimalityOutcome::Kind::Fail;
    out.witness = s;
    out.note = "nonnilpotent proper subalgebra of dimension " + std::to_string(s.dim());
    return false;
  });
  return out;
}

Subspace bruteforce_largest_ideal(const LeibnizAlgebra& a, const Subspace& m,
                                  const EnumerationBudget& budget) {
  std::uint64_t p = finite_characteristic(a, "bruteforce_largest_ideal");
  if (!a.is_subalgebra(m)) throw std::invalid_argument("bruteforce_largest_ideal: M is not a subalgebra");
  Subspace best = Subspace::zero(a.field(), a.dim());
  // enumerate subspaces of M in M-coordinates, map up, filter ideals of L
  for_each_subspace(p, m.dim(), budget, [&](const Subspace& inner) {
    std::vector<Vec> rows;
    for (const Vec& c : inner.basis()) {
      Vec w = zero_vec(a.field(), a.dim());
      for (std::size_t i = 0; i < m.dim(); ++i) w = add(w, scale(c[i], m.basis()[i]));
      rows.push_back(std::move(w));
    }
    Subspace cand = Subspace::span(a.field(), a.dim(), rows);
    if (cand.dim() > best.dim() && a.is_ideal(cand)) best = cand;
    return true;
  });
  return best;
}

Subspace frattini_ideal(const LeibnizAlgebra& a, const EnumerationBudget& budget) {
  std::vector<Subspace> subs = enumerate_subalgebras(a, budget);
  std::vector<Subspace> proper;
  for (const auto& s : subs)
    if (!s.is_full()) proper.push_back(s);
  std::vector<Subspace> maximal;
  for (const auto& s : proper) {
    bool is_max = true;
    for (const auto& t : proper)
      if (t.dim() > s.dim() && t.contains(s)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(s);
  }
  Subspace phi = Subspace::full(a.field(), a.dim());
  for (const auto& s : maximal) phi = phi.intersect(s);
  return bruteforce_largest_ideal(a, phi, budget);
}

std::vector<Subspace> minimal_ideals(const LeibnizAlgebra& a, const EnumerationBudget& budget) {
  std::vector<Subspace> ideals = enumerate_ideals(a, budget);
  std::vector<Subspace> nonzero;
  for (const auto& i : ideals)
    if (!i.is_zero()) nonzero.push_back(i);
  std::vector<Subspace> out;
  for (const auto& i : nonzero) {
    bool minimal = true;
    for (const auto& j : nonzero)
      if (j.dim() < i.dim() && i.contains(j)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(i);
  }
  return out;
}

Subspace bruteforce_nilradical(const LeibnizAlgebra& a, const EnumerationBudget& budget) {
  Subspace sum = Subspace::zero(a.field(), a.dim());
  for (const Subspace& i : enumerate_ideals(a, budget)) {
    if (i.is_zero()) continue;
    if (a.is_nilpotent(i)) sum = sum + i;
  }
  if (!sum.is_zero() && !a.is_nilpotent(sum))
    throw std::logic_error("bruteforce_nilradical: sum of nilpotent ideals is not nilpotent");
  return sum;
}

bool semidirect_check(const LeibnizAlgebra& a, const Subspace& n, const Subspace& part1,
                      const Subspace& part2) {
  if (!a.is_ideal(n)) throw std::invalid_argument("semidirect_check: N is not an ideal");
  LeibnizAlgebra::Quotient q = a.quotient(n);
  std::size_t m = q.algebra.dim();
  if (part1.ambient_dim() != m || part2.ambient_dim() != m)
    throw std::invalid_argument("semidirect_check: parts must be given in quotient coordinates");
  if (!q.algebra.is_ideal(part1)) return false;
  if (!q.algebra.is_subalgebra(part2)) return false;
  if (!part1.intersect(part2).is_zero()) return false;
  return (part1 + part2).is_full();
}

}  // namespace leiblab::oracle
