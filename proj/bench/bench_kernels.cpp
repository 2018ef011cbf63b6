#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "ga/algebra.hpp"
#include "ga/batch.hpp"

using namespace ga;

namespace {

const Signature g3 = Signature::euclidean(3);

Multivector random_unit(std::mt19937_64 &rng) {
  std::normal_distribution<double> n;
  for (;;) {
    const Multivector v = Multivector::vector(g3, {n(rng), n(rng), n(rng)});
    const double len = norm(v);
    if (len > 1e-3) return v / len;
  }
}

std::vector<Multivector> random_multivectors(const Signature &sig, std::size_t count,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Multivector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> dense(sig.blade_count());
    for (double &x : dense) x = u(rng);
    out.push_back(Multivector::from_dense(sig, dense));
  }
  return out;
}

std::vector<SpherePoint> sphere_points(std::size_t count) {
  std::mt19937_64 rng(3);
  std::vector<SpherePoint> out;
  out.reserve(count);
  while (out.size() < count) {
    const Multivector v = random_unit(rng);
    if (v.coefficient(Blade{4}) > -0.99) out.emplace_back(v);
  }
  return out;
}

template <bool Parallel>
void BM_cayley(benchmark::State &state) {
  const Signature sig(static_cast<int>(state.range(0)), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? cayley_table(sig) : serial::cayley_table(sig));
  }
}

template <auto Fn>
void BM_product(benchmark::State &state) {
  const Signature sig(5, 0);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto lhs = random_multivectors(sig, n, 1), rhs = random_multivectors(sig, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(lhs, rhs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_rotate(benchmark::State &state) {
  std::mt19937_64 rng(4);
  const Rotor r = rotor_between(random_unit(rng), random_unit(rng));
  std::vector<Multivector> xs;
  for (int i = 0; i < state.range(0); ++i) xs.push_back(random_unit(rng));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(xs, r));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_stereo(benchmark::State &state) {
  const auto points = sphere_points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(points));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Fn>
void BM_unstereo(benchmark::State &state) {
  const auto planes = serial::stereo_project_batch(sphere_points(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(planes));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_cayley<false>)->Name("cayley/serial")->DenseRange(3, 6);
BENCHMARK(BM_cayley<true>)->Name("cayley/omp")->DenseRange(3, 6);
BENCHMARK(BM_product<serial::geometric_product_batch>)->Name("product/serial")->Range(256, 16384);
BENCHMARK(BM_product<geometric_product_batch>)->Name("product/omp")->Range(256, 16384);
BENCHMARK(BM_rotate<serial::rotate_batch>)->Name("rotate/serial")->Range(1024, 65536);
BENCHMARK(BM_rotate<rotate_batch>)->Name("rotate/omp")->Range(1024, 65536);
BENCHMARK(BM_stereo<serial::stereo_project_batch>)->Name("stereo/serial")->Range(1024, 65536);
BENCHMARK(BM_stereo<stereo_project_batch>)->Name("stereo/omp")->Range(1024, 65536);
BENCHMARK(BM_unstereo<serial::stereo_unproject_batch>)->Name("unstereo/serial")->Range(1024, 65536);
BENCHMARK(BM_unstereo<stereo_unproject_batch>)->Name("unstereo/omp")->Range(1024, 65536);

BENCHMARK_MAIN();
