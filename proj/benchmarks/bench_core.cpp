/*
   Copyright 2026 The intpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "intpoly/ideal_report.hpp"
#include "intpoly/membership.hpp"
#include "intpoly/regular_basis.hpp"

using namespace intpoly;

static void BM_FactorialExponent(benchmark::State& state) {
  long n = state.range(0);
  for (auto _ : state) {
    long acc = 0;
    for (long k = 2; k <= n; ++k) acc += factorial_exponent(k, n);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FactorialExponent)->Arg(100)->Arg(500)->Arg(2000);

static void BM_RegularBasisZ(benchmark::State& state) {
  ZDomain z;
  int upto = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto outcome = build_regular_basis(z, upto);
    benchmark::DoNotOptimize(outcome.basis->polys.size());
  }
}
BENCHMARK(BM_RegularBasisZ)->Arg(10)->Arg(25)->Arg(50);

static void BM_FermatTowerCompose(benchmark::State& state) {
  ZDomain z;
  int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FermatTower<ZDomain> tower(z, BigInt(3), depth,
                               /*verify_at_construction=*/false);
    benchmark::DoNotOptimize(tower.level(depth).degree());
  }
}
BENCHMARK(BM_FermatTowerCompose)->Arg(3)->Arg(4)->Arg(5);

static void BM_ClassGroup(benchmark::State& state) {
  // First fundamental discriminant at or below the requested size.
  BigInt disc(-state.range(0));
  while (!is_fundamental_discriminant(disc)) disc -= BigInt(1);
  for (auto _ : state) {
    ClassGroupTable t = class_group(disc);
    benchmark::DoNotOptimize(t.h());
  }
}
BENCHMARK(BM_ClassGroup)->Arg(116)->Arg(5000)->Arg(100000);

static void BM_MembershipZ(benchmark::State& state) {
  ZDomain z;
  auto outcome = build_regular_basis(z, static_cast<int>(state.range(0)));
  const auto& g = outcome.basis->polys.back();
  for (auto _ : state) {
    auto r = is_member(z, g);
    benchmark::DoNotOptimize(r.member);
  }
}
BENCHMARK(BM_MembershipZ)->Arg(20)->Arg(50);

static void BM_IdealReportZ(benchmark::State& state) {
  long n = state.range(0);
  for (auto _ : state) {
    IdealReport r = ideal_report(DomainSpec::integers(), BigInt(n));
    benchmark::DoNotOptimize(r.factorial.factors.size());
  }
}
BENCHMARK(BM_IdealReportZ)->Arg(100)->Arg(500);

BENCHMARK_MAIN();
