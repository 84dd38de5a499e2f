#pragma once

#include "leiblab/classify.hpp"

// Shared corpus for the test suites: the two-dimensional cyclic algebra
// z z = z^2, z z^2 = z^2 and friends.

namespace fixtures {

using namespace leiblab;

inline FieldDescriptor Q() { return FieldDescriptor::rationals(); }
inline FieldDescriptor Qi() { return FieldDescriptor::gaussian_rationals(); }
inline FieldDescriptor GF(std::uint64_t p) { return FieldDescriptor::prime_field(p); }

inline Scalar sc(FieldDescriptor f, long n) { return Scalar::from_int(f, n); }

inline Vec vec(FieldDescriptor f, std::initializer_list<long> entries) {
  Vec v;
  for (long e : entries) v.push_back(sc(f, e));
  return v;
}

inline Subspace span_of(FieldDescriptor f, std::size_t n,
                        std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec> rs;
  for (const auto& r : rows) {
    Vec v;
    for (long e : r) v.push_back(sc(f, e));
    rs.push_back(std::move(v));
  }
  return Subspace::span(f, n, rs);
}

// z z = z^2, z z^2 = z^2 (cyclic, nonnilpotent, solvable)
inline LeibnizAlgebra example1(FieldDescriptor f = Q()) {
  LeibnizAlgebra::ProductTable t;
  t[{0, 0}] = vec(f, {0, 1});
  t[{0, 1}] = vec(f, {0, 1});
  return LeibnizAlgebra::checked(f, 2, {"z", "z^2"}, t);
}

// basis {x, x^2, a, a^2, a^3}
inline LeibnizAlgebra example2_j2k3(FieldDescriptor f = Q()) { return construct_chain(f, 2, 3); }

// the Gaussian cyclic algebra with z z^3 = z^2 + 2i z^3
inline LeibnizAlgebra counterexample() {
  FieldDescriptor f = Qi();
  Vec top{Scalar::zero(f), Scalar::one(f), Scalar::from_gaussian(0, 2)};
  CyclicConstruction c = construct_cyclic(f, 3, top);
  if (c.violation) throw std::logic_error("counterexample fixture failed to validate");
  return c.algebra;
}

inline LeibnizAlgebra standard_q_2_0() {
  return construct_standard(Q(), vec(Q(), {2, 0})).algebra;
}

inline LeibnizAlgebra zero_algebra(FieldDescriptor f, std::size_t dim) {
  return LeibnizAlgebra(f, dim, {}, {});
}

}  // namespace fixtures
