#include <benchmark/benchmark.h>

#include "homlie/bialgebra.hpp"
#include "homlie/coboundary.hpp"
#include "homlie/corpus.hpp"
#include "homlie/fuzz.hpp"
#include "homlie/linalg.hpp"
#include "homlie/operators.hpp"

using namespace homlie;

namespace {

// sl2 direct sum with itself k times gives dimension 3k.
HomLieAlgebra sl2_power(std::size_t k) {
  HomLieAlgebra s = builtin_algebra("sl2yau");
  const std::size_t n = 3 * k;
  Tensor3 c(n);
  Matrix phi(n, n);
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        phi(3 * b + i, 3 * b + j) = s.twist()(i, j);
        for (std::size_t l = 0; l < 3; ++l) c(3 * b + i, 3 * b + j, 3 * b + l) = s.bracket()(i, j, l);
      }
  return HomLieAlgebra("sl2^" + std::to_string(k), c, phi);
}

void BM_ValidateHomLie(benchmark::State& state) {
  HomLieAlgebra a = sl2_power(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(validate_hom_lie(a));
  state.SetLabel("dim " + std::to_string(a.dim()));
}
BENCHMARK(BM_ValidateHomLie)->Arg(1)->Arg(2);

void BM_RSquareBracket(benchmark::State& state) {
  HomLieAlgebra a = sl2_power(state.range(0));
  Fuzzer fz(1);
  Matrix r = fz.r_matrix(a.dim());
  for (auto _ : state) benchmark::DoNotOptimize(r_square_bracket(a, r));
  state.SetLabel("dim " + std::to_string(a.dim()));
}
BENCHMARK(BM_RSquareBracket)->Arg(1)->Arg(2);

void BM_CoboundaryAnalysis(benchmark::State& state) {
  HomLieAlgebra a = sl2_power(state.range(0));
  Fuzzer fz(2);
  Matrix r = fz.skew_twist_compatible_r(a);
  for (auto _ : state) benchmark::DoNotOptimize(coboundary_analysis(a, r));
  state.SetLabel("dim " + std::to_string(a.dim()));
}
BENCHMARK(BM_CoboundaryAnalysis)->Arg(1)->Arg(2);

void BM_TripleEquivalence(benchmark::State& state) {
  HomLieBialgebra bi = builtin("aff2-triangular")->require_bialgebra();
  for (auto _ : state) benchmark::DoNotOptimize(check_triple_equivalence(bi));
}
BENCHMARK(BM_TripleEquivalence);

void BM_HomDouble(benchmark::State& state) {
  HomLieBialgebra bi = builtin("aff2-triangular")->require_bialgebra();
  for (auto _ : state) benchmark::DoNotOptimize(hom_double(bi));
}
BENCHMARK(BM_HomDouble);

void BM_ROfOOperator(benchmark::State& state) {
  OOperatorCandidate c{left_mult_rep(builtin_lsa("lsa2psi")), Matrix::identity(2)};
  for (auto _ : state) benchmark::DoNotOptimize(r_from_o_operator(c));
}
BENCHMARK(BM_ROfOOperator);

void BM_Nullspace(benchmark::State& state) {
  Fuzzer fz(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m = fz.matrix(n, n + 2);
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_Nullspace)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
