#include <benchmark/benchmark.h>

#include <string>

#include "basecert/basesize.hpp"
#include "basecert/classes.hpp"
#include "basecert/group_io.hpp"

using namespace basecert;

namespace {

GroupFileData corpus_file(const std::string& name) {
  return read_group_file(std::string(BASECERT_CORPUS_DIR) + "/" + name);
}

GroupRef load_group(const std::string& name) {
  GroupFileData data = corpus_file(name);
  return Group::generate(data.degree, std::move(data.generators));
}

Subgroup load_subgroup(const GroupRef& g, const std::string& name) {
  return Subgroup::generated(g, corpus_file(name).generators);
}

void closure(benchmark::State& state, const char* file, Exec exec) {
  GroupFileData data = corpus_file(file);
  for (auto _ : state) {
    GroupRef g = Group::generate(data.degree, data.generators,
                                 kDefaultElementCap, exec);
    benchmark::DoNotOptimize(g);
  }
}

void classes(benchmark::State& state, const char* file, Exec exec) {
  GroupRef g = load_group(file);
  for (auto _ : state) {
    auto partition = conjugacy_classes(g, exec);
    benchmark::DoNotOptimize(partition);
  }
}

void coset_build(benchmark::State& state, const char* gfile, const char* hfile,
                 Exec exec) {
  GroupRef g = load_group(gfile);
  Subgroup h = load_subgroup(g, hfile);
  for (auto _ : state) {
    CosetSpace space = CosetSpace::build(g, h, exec);
    benchmark::DoNotOptimize(space);
  }
}

void base_search(benchmark::State& state, const char* gfile, const char* hfile,
                 Exec exec) {
  GroupRef g = load_group(gfile);
  Subgroup h = load_subgroup(g, hfile);
  SearchOptions opts{kDefaultWorkBudget, exec};
  for (auto _ : state) {
    BaseCertificate cert = base_size(h, opts);
    benchmark::DoNotOptimize(cert);
  }
}

void tuple_count(benchmark::State& state, const char* gfile, const char* hfile,
                 Exec exec) {
  GroupRef g = load_group(gfile);
  Subgroup h = load_subgroup(g, hfile);
  CosetSpace space = CosetSpace::build(g, h);
  SearchOptions opts{kDefaultWorkBudget, exec};
  for (auto _ : state) {
    BigInt count = regular_tuple_count(space, 5, opts);
    benchmark::DoNotOptimize(count);
  }
}

}  // namespace

BENCHMARK_CAPTURE(closure, sl33_serial, "sl33.grp", Exec::serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(closure, sl33_parallel, "sl33.grp", Exec::parallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(closure, sl42_serial, "sl42.grp", Exec::serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(closure, sl42_parallel, "sl42.grp", Exec::parallel)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(classes, sl33_serial, "sl33.grp", Exec::serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(classes, sl33_parallel, "sl33.grp", Exec::parallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(classes, sl42_serial, "sl42.grp", Exec::serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(classes, sl42_parallel, "sl42.grp", Exec::parallel)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(coset_build, sl42_2space_serial, "sl42.grp", "sl42_2space.grp",
                  Exec::serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(coset_build, sl42_2space_parallel, "sl42.grp",
                  "sl42_2space.grp", Exec::parallel)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(base_search, sl33_borel_serial, "sl33.grp", "sl33_borel.grp",
                  Exec::serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(base_search, sl33_borel_parallel, "sl33.grp", "sl33_borel.grp",
                  Exec::parallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(base_search, sl42_2space_serial, "sl42.grp", "sl42_2space.grp",
                  Exec::serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(base_search, sl42_2space_parallel, "sl42.grp",
                  "sl42_2space.grp", Exec::parallel)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(tuple_count, sl33_borel_serial, "sl33.grp", "sl33_borel.grp",
                  Exec::serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(tuple_count, sl33_borel_parallel, "sl33.grp", "sl33_borel.grp",
                  Exec::parallel)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(tuple_count, sl42_2space_serial, "sl42.grp", "sl42_2space.grp",
                  Exec::serial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(tuple_count, sl42_2space_parallel, "sl42.grp",
                  "sl42_2space.grp", Exec::parallel)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
