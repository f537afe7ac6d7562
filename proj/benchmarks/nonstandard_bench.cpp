#include <benchmark/benchmark.h>

#include <memory>

#include "nsd/family.hpp"
#include "nsd/galaxies.hpp"
#include "nsd/ns_connectivity.hpp"
#include "nsd/ultrapower.hpp"

namespace {

using FamilyPtr = std::shared_ptr<const nsd::DigraphFamily>;

FamilyPtr family(nsd::Builtin b) { return std::make_shared<const nsd::DigraphFamily>(nsd::DigraphFamily::builtin(b)); }

nsd::InternalElement vert(const FamilyPtr& f, nsd::QuasiPoly q) {
  return nsd::make_internal_element(f, nsd::Selector::vertex(std::move(q)), nsd::Sort::Vertex);
}

void BM_CheckBounds(benchmark::State& state) {
  const auto f = nsd::DigraphFamily::builtin(static_cast<nsd::Builtin>(state.range(0)));
  const nsd::FilterOracle oracle{0};
  for (auto _ : state) {
    auto r = nsd::check_bounds(f, oracle);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CheckBounds)
    ->Arg(static_cast<int>(nsd::Builtin::Dipath))
    ->Arg(static_cast<int>(nsd::Builtin::Dicycle))
    ->Arg(static_cast<int>(nsd::Builtin::CompleteSymmetric))
    ->Arg(static_cast<int>(nsd::Builtin::InStar))
    ->Arg(static_cast<int>(nsd::Builtin::DisconnectedDicycles));

void BM_PairConnectedness(benchmark::State& state) {
  const auto f = family(nsd::Builtin::Dicycle);
  const auto u = vert(f, nsd::QuasiPoly::constant(0));
  const auto v = vert(f, nsd::QuasiPoly::floor_div(2));
  const nsd::FilterOracle oracle{1};
  for (auto _ : state) {
    auto r = nsd::ns_pair_connectedness(u, v, oracle);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PairConnectedness);

void BM_GalaxyChain(benchmark::State& state) {
  const auto f = family(nsd::Builtin::TwoWayDipathEnlargement);
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto c = nsd::galaxy_chain(f, -r, r);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_GalaxyChain)->Arg(1)->Arg(3)->Arg(6);

void BM_GalaxyPartition(benchmark::State& state) {
  const auto f = family(nsd::Builtin::OneWayDipathEnlargement);
  std::vector<nsd::InternalElement> roster;
  for (std::int64_t i = 0; i < state.range(0); ++i)
    roster.push_back(vert(f, i % 2 ? nsd::QuasiPoly::affine(1 + i % 3, i) : nsd::QuasiPoly::constant(i)));
  const auto anchor = vert(f, nsd::QuasiPoly::constant(0));
  const nsd::FilterOracle oracle{0};
  for (auto _ : state) {
    auto p = nsd::galaxy_partition(roster, {}, anchor, oracle);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_GalaxyPartition)->Arg(10)->Arg(40);

}  // namespace
