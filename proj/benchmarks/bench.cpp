#include "qhankel/carlitz.hpp"
#include "qhankel/functionals.hpp"
#include "qhankel/hankel.hpp"
#include "qhankel/qpoly.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qhankel;

namespace {

const SeqId kEuler{SeqKind::qeuler, 0};

QPoly random_poly(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<long> coef(-50, 50);
    std::vector<mpz_class> c(degree + 1);
    for (auto& x : c) x = coef(rng);
    if (c.back() == 0) c.back() = 1;
    return QPoly(c);
}

// Pairs sharing a common factor of degree `d / 2`.
std::pair<QPoly, QPoly> gcd_pair(int d) {
    std::mt19937_64 rng(7);
    QPoly g = random_poly(rng, d / 2);
    return {g * random_poly(rng, d), g * random_poly(rng, d)};
}

void BM_gcd_modular(benchmark::State& st) {
    auto [a, b] = gcd_pair(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_gcd_modular)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_gcd_subresultant(benchmark::State& st) {
    auto [a, b] = gcd_pair(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(gcd_subresultant(a, b));
}
BENCHMARK(BM_gcd_subresultant)->Arg(8)->Arg(16)->Arg(32);

void BM_q_euler_sequence(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(q_euler_sequence(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_q_euler_sequence)->Arg(8)->Arg(14)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_det_exact(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    auto m = hankel_matrix(make_moment_seq(kEuler, 2 * n), 0, n);
    for (auto _ : st) benchmark::DoNotOptimize(det_exact(m));
}
BENCHMARK(BM_det_exact)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_det_heilermann(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    auto jf = jfraction_for_eps(0);
    for (auto _ : st) benchmark::DoNotOptimize(det_heilermann(jf, n));
}
BENCHMARK(BM_det_heilermann)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_closed_form_theorem1(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(closed_form_theorem1(0, n));
}
BENCHMARK(BM_closed_form_theorem1)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_jfraction_from_moments(benchmark::State& st) {
    int d = static_cast<int>(st.range(0));
    auto mu = q_euler_sequence(2 * d);
    for (auto _ : st) benchmark::DoNotOptimize(jfraction_from_moments(mu));
}
BENCHMARK(BM_jfraction_from_moments)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
