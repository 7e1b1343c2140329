// Copyright 2026 The stieltjes-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>
#include <gmpxx.h>

#include <random>
#include <string>

#include "stieltjes/alpha.hpp"
#include "stieltjes/bigreal.hpp"
#include "stieltjes/cfstats.hpp"
#include "stieltjes/contfrac.hpp"
#include "stieltjes/gamma.hpp"
#include "stieltjes/normality.hpp"
#include "stieltjes/phi_table.hpp"
#include "stieltjes/sha256.hpp"
#include "stieltjes/zeta.hpp"

namespace {

using stieltjes::BigReal;

std::string random_digits(unsigned seed, long count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, 9);
  std::string s;
  s.reserve(static_cast<size_t>(count));
  s.push_back(static_cast<char>('1' + d(rng) % 9));
  for (long i = 1; i < count; ++i) s.push_back(static_cast<char>('0' + d(rng)));
  return s;
}

void BM_zeta_real(benchmark::State& state) {
  const long digits = state.range(0);
  const mpq_class s(3, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stieltjes::zeta_real(s, digits));
  }
}
BENCHMARK(BM_zeta_real)->Arg(50)->Arg(200)->Arg(1000)
    ->Unit(benchmark::kMillisecond);

void BM_phi_table(benchmark::State& state) {
  const long count = state.range(0);
  const mpq_class eps(1, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stieltjes::tabulate_phi_nodes(eps, count, 120));
  }
}
BENCHMARK(BM_phi_table)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_gamma_batch(benchmark::State& state) {
  const long n_max = state.range(0);
  const mpq_class eps(1, 10);
  stieltjes::GammaPlan plan = stieltjes::plan_gamma_run(n_max, 80, eps);
  stieltjes::PhiTable t =
      stieltjes::tabulate_phi_nodes(eps, plan.node_count, plan.node_acc);
  stieltjes::AlphaSeries a = stieltjes::alpha_coeffs(t, t.count() - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stieltjes::gamma_batch(n_max, a));
  }
}
BENCHMARK(BM_gamma_batch)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_contfrac(benchmark::State& state) {
  const long digits = state.range(0);
  BigReal v = BigReal::from_decimal("0." + random_digits(7, digits),
                                    digits + 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stieltjes::contfrac(v, 0));
  }
}
BENCHMARK(BM_contfrac)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_cf_stats(benchmark::State& state) {
  BigReal v = BigReal::from_decimal("0." + random_digits(11, 2000), 2016);
  stieltjes::ContinuedFraction cf = stieltjes::contfrac(v, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stieltjes::cf_stats(cf, 10, 100));
  }
}
BENCHMARK(BM_cf_stats)->Unit(benchmark::kMillisecond);

void BM_kgram_freq(benchmark::State& state) {
  std::string digits = random_digits(3, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stieltjes::kgram_freq(digits, 2, 10));
  }
}
BENCHMARK(BM_kgram_freq)->Arg(5000)->Arg(50000);

void BM_sha256(benchmark::State& state) {
  std::string payload = random_digits(5, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stieltjes::sha256_hex(payload));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          state.range(0));
}
BENCHMARK(BM_sha256)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
