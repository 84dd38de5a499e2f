#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace leiblab;
using fixtures::GF;
using fixtures::Q;
using fixtures::Qi;
using fixtures::sc;
using fixtures::vec;

namespace {

Matrix rand_matrix(FieldDescriptor f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-2, 2);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = sc(f, dist(rng));
  return m;
}

// restriction of T to an invariant subspace, in basis coordinates
Matrix restrict_to(const Matrix& t, const Subspace& s) {
  Matrix r(t.field(), s.dim(), s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) {
    Vec img = t.apply(s.basis()[j]);
    REQUIRE(s.contains(img));
    for (std::size_t i = 0; i < s.dim(); ++i) r.at(i, j) = img[s.pivots()[i]];
  }
  return r;
}

}  // namespace

TEST_CASE("characteristic polynomials of small matrices") {
  // zero 2x2 -> lambda^2
  CHECK(char_poly(Matrix(Q(), 2, 2)) == Polynomial::parse("0,0,1", Q()));
  // companion of lambda^2 - 2, expanded by hand: det(lI - T) = l^2 - 2
  Matrix t(Q(), 2, 2);
  t.at(0, 1) = sc(Q(), 2);
  t.at(1, 0) = sc(Q(), 1);
  CHECK(char_poly(t) == Polynomial::parse("-2,0,1", Q()));
  // 1x1 identity -> lambda - 1
  CHECK(char_poly(Matrix::identity(Q(), 1)) == Polynomial::parse("-1,1", Q()));
  CHECK_THROWS_AS(char_poly(Matrix(Q(), 2, 3)), std::invalid_argument);
}

TEST_CASE("nilpotency of operators") {
  Matrix upper(Q(), 3, 3);
  upper.at(0, 1) = sc(Q(), 5);
  upper.at(1, 2) = sc(Q(), -7);
  upper.at(0, 2) = sc(Q(), 3);
  CHECK(is_nilpotent_operator(upper));
  CHECK_FALSE(is_nilpotent_operator(Matrix::identity(Q(), 2)));
  // left multiplication by z - z^2 in the 2-dim cyclic algebra: columns (0,1),(0,1)
  Matrix lx(Q(), 2, 2);
  lx.at(1, 0) = sc(Q(), 1);
  lx.at(1, 1) = sc(Q(), 1);
  CHECK_FALSE(is_nilpotent_operator(lx));
}

TEST_CASE("Cayley-Hamilton on random exact matrices") {
  std::mt19937_64 rng(2024);
  for (FieldDescriptor f : {Q(), Qi(), GF(3)})
    for (std::size_t n : {2u, 3u})
      for (int t = 0; t < 25; ++t) {
        Matrix m = rand_matrix(f, n, rng);
        CHECK(eval_poly_at(char_poly(m), m).is_zero());
      }
}

TEST_CASE("determinant agrees with the characteristic polynomial") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {2u, 3u, 4u})
    for (int t = 0; t < 20; ++t) {
      Matrix m = rand_matrix(Q(), n, rng);
      Polynomial p = char_poly(m);
      Scalar via_poly = p.coeff(0);  // det(-T) = (-1)^n det T
      if (n % 2 == 1) via_poly = -via_poly;
      CHECK(m.determinant() == via_poly);
    }
}

TEST_CASE("kernel solves the homogeneous system") {
  Matrix m(Q(), 2, 3);
  m.at(0, 0) = sc(Q(), 1);
  m.at(0, 2) = sc(Q(), -1);
  m.at(1, 1) = sc(Q(), 2);
  auto basis = m.kernel();
  REQUIRE(basis.size() == 1);
  for (const auto& v : basis) CHECK(is_zero_vec(m.apply(v)));
}

TEST_CASE("companion basis (Krylov chains)") {
  // 1x1 identity, seed (1): chain {(1)}, dependence 1
  auto k1 = companion_basis(Matrix::identity(Q(), 1), vec(Q(), {1}));
  REQUIRE(k1);
  CHECK(k1->basis.size() == 1);
  CHECK(k1->dependence == vec(Q(), {1}));
  CHECK(k1->spans_all);

  // companion of lambda^2 - 2: T^2 s = 2s
  Matrix t(Q(), 2, 2);
  t.at(0, 1) = sc(Q(), 2);
  t.at(1, 0) = sc(Q(), 1);
  auto k2 = companion_basis(t, vec(Q(), {1, 0}));
  REQUIRE(k2);
  CHECK(k2->basis == std::vector<Vec>{vec(Q(), {1, 0}), vec(Q(), {0, 1})});
  CHECK(k2->dependence == vec(Q(), {2, 0}));

  // zero 2x2: T s = 0 immediately
  auto k3 = companion_basis(Matrix(Q(), 2, 2), vec(Q(), {1, 0}));
  REQUIRE(k3);
  CHECK(k3->basis.size() == 1);
  CHECK(k3->dependence == vec(Q(), {0}));
  CHECK_FALSE(k3->spans_all);
  CHECK_FALSE(companion_basis(Matrix(Q(), 2, 2), vec(Q(), {1, 0}), true).has_value());

  CHECK_THROWS_AS(companion_basis(t, vec(Q(), {0, 0})), std::invalid_argument);
}

TEST_CASE("fitting split") {
  // nilpotent -> (everything, 0)
  Matrix nil(Q(), 2, 2);
  nil.at(0, 1) = sc(Q(), 1);
  FittingSplit fs = fitting_split(nil);
  CHECK(fs.null_component.is_full());
  CHECK(fs.one_component.is_zero());

  // invertible -> (0, everything)
  FittingSplit fi = fitting_split(Matrix::identity(Q(), 3));
  CHECK(fi.null_component.is_zero());
  CHECK(fi.one_component.is_full());

  // l_{z-z^2} on the 2-dim cyclic algebra
  Matrix lx(Q(), 2, 2);
  lx.at(1, 0) = sc(Q(), 1);
  lx.at(1, 1) = sc(Q(), 1);
  FittingSplit fe = fitting_split(lx);
  CHECK(fe.null_component == fixtures::span_of(Q(), 2, {{1, -1}}));
  CHECK(fe.one_component == fixtures::span_of(Q(), 2, {{0, 1}}));
}

TEST_CASE("fitting invariants on seeded random matrices") {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (FieldDescriptor f : {Q(), GF(2), GF(5)})
    for (std::size_t n : {2u, 3u, 4u})
      for (int t = 0; t < 12; ++t) {
        Matrix m = rand_matrix(f, n, rng);
        FittingSplit fs = fitting_split(m);
        CHECK(fs.null_component.dim() + fs.one_component.dim() == n);
        CHECK(fs.null_component.intersect(fs.one_component).is_zero());
        for (const auto& v : fs.null_component.basis())
          CHECK(fs.null_component.contains(m.apply(v)));
        for (const auto& v : fs.one_component.basis())
          CHECK(fs.one_component.contains(m.apply(v)));
        if (!fs.one_component.is_zero())
          CHECK_FALSE(restrict_to(m, fs.one_component).determinant().is_zero());
        ++checked;
      }
  CHECK(checked == 108);
}
