#include <benchmark/benchmark.h>

#include <random>

#include "leiblab/classify.hpp"
#include "leiblab/oracle.hpp"

using namespace leiblab;

namespace {

Matrix random_matrix(FieldDescriptor f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-2, 2);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Scalar::from_int(f, dist(rng));
  return m;
}

LeibnizAlgebra chain_gf5() { return construct_chain(FieldDescriptor::prime_field(5), 2, 2); }

void bm_rref_gf5(benchmark::State& state) {
  FieldDescriptor f = FieldDescriptor::prime_field(5);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> dist(0, 4);
  std::vector<Vec> rows;
  for (int r = 0; r < 16; ++r) {
    Vec v;
    for (int c = 0; c < 32; ++c) v.push_back(Scalar::from_int(f, dist(rng)));
    rows.push_back(std::move(v));
  }
  for (auto _ : state) {
    auto copy = rows;
    benchmark::DoNotOptimize(rref_rows(copy));
  }
}
BENCHMARK(bm_rref_gf5);

void bm_char_poly_q6(benchmark::State& state) {
  Matrix m = random_matrix(FieldDescriptor::rationals(), 6, 7);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(bm_char_poly_q6);

void bm_irreducible_quartic_q(benchmark::State& state) {
  Polynomial p = Polynomial::parse("1,0,0,0,1", FieldDescriptor::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(poly_irreducible(p));
}
BENCHMARK(bm_irreducible_quartic_q);

void bm_subspace_enumeration_gf3_4(benchmark::State& state) {
  for (auto _ : state) {
    std::uint64_t count = 0;
    oracle::for_each_subspace(3, 4, {}, [&](const Subspace&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(bm_subspace_enumeration_gf3_4);

void bm_minimality_chain_gf5(benchmark::State& state) {
  LeibnizAlgebra a = chain_gf5();
  for (auto _ : state) benchmark::DoNotOptimize(oracle::minimality_check(a));
}
BENCHMARK(bm_minimality_chain_gf5);

void bm_verify_theorem_chain(benchmark::State& state) {
  LeibnizAlgebra a = construct_chain(FieldDescriptor::rationals(), 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(a));
}
BENCHMARK(bm_verify_theorem_chain);

}  // namespace

BENCHMARK_MAIN();
