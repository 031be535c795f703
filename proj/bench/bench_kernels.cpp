// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <random>

#include "equibundle/kernels.hpp"
#include "equibundle/topospace.hpp"

using namespace equibundle;

namespace {

kernels::IntMatrix random_int_matrix(std::size_t n, long bound, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<long> d(-bound, bound);
    kernels::IntMatrix m(n, n, mpz_class(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(gen);
    return m;
}

kernels::ModMatrix random_mod_matrix(std::size_t n, std::uint64_t seed) {
    return kernels::reduce_mod(random_int_matrix(n, 1000, seed), 2147483629u);
}

Matrix<Scalar> random_rational_matrix(std::size_t n, std::uint64_t seed) {
    const auto m = random_int_matrix(n, 50, seed);
    Matrix<Scalar> out(n, n, Field::rationals().zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = Scalar(mpq_class(m(i, j), (i + j) % 3 + 1));
    return out;
}

std::vector<FinitePoset> small_posets(std::size_t max) {
    std::vector<FinitePoset> out;
    for (std::size_t n = 0; n <= max; ++n)
        for (auto& p : posets_up_to_isomorphism(n)) out.push_back(p);
    return out;
}

template <std::size_t (*Rank)(kernels::ModMatrix)>
void bm_rank_mod_p(benchmark::State& st) {
    const auto m = random_mod_matrix(static_cast<std::size_t>(st.range(0)), 1);
    for (auto _ : st) benchmark::DoNotOptimize(Rank(m));
}

template <std::size_t (*Rank)(const kernels::IntMatrix&)>
void bm_rank_rational(benchmark::State& st) {
    const auto m = random_int_matrix(static_cast<std::size_t>(st.range(0)), 1000, 2);
    for (auto _ : st) benchmark::DoNotOptimize(Rank(m));
}

template <Matrix<Scalar> (*Mul)(const Matrix<Scalar>&, const Matrix<Scalar>&)>
void bm_matmul_rational(benchmark::State& st) {
    const auto n = static_cast<std::size_t>(st.range(0));
    const auto a = random_rational_matrix(n, 3), b = random_rational_matrix(n, 4);
    for (auto _ : st) benchmark::DoNotOptimize(Mul(a, b));
}

template <PropB3Survey (*Survey)(const std::vector<FinitePoset>&)>
void bm_survey(benchmark::State& st) {
    const auto posets = small_posets(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(Survey(posets));
}

}  // namespace

BENCHMARK(bm_rank_mod_p<kernels::serial::rank_mod_p>)->Name("rank_mod_p/serial")->Arg(64)->Arg(256);
BENCHMARK(bm_rank_mod_p<kernels::parallel::rank_mod_p>)->Name("rank_mod_p/parallel")->Arg(64)->Arg(256);
BENCHMARK(bm_rank_rational<kernels::serial::rank_rational>)->Name("rank_rational/serial")->Arg(16)->Arg(48);
BENCHMARK(bm_rank_rational<kernels::parallel::rank_rational>)->Name("rank_rational/parallel")->Arg(16)->Arg(48);
BENCHMARK(bm_matmul_rational<kernels::serial::matmul<Scalar>>)->Name("matmul_rational/serial")->Arg(16)->Arg(48);
BENCHMARK(bm_matmul_rational<kernels::parallel::matmul<Scalar>>)->Name("matmul_rational/parallel")->Arg(16)->Arg(48);
BENCHMARK(bm_survey<serial::survey_prop_b3>)->Name("survey_prop_b3/serial")->Arg(3)->Arg(4);
BENCHMARK(bm_survey<parallel::survey_prop_b3>)->Name("survey_prop_b3/parallel")->Arg(3)->Arg(4);

BENCHMARK_MAIN();
