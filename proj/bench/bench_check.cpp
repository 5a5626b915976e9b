// Parallel versus serial schema checking on a few catalogs.
#include <benchmark/benchmark.h>

#include "seqlogic/equiv.hpp"

using namespace seqlogic;

namespace {

const EquationSchema& schema(const char* catalog, std::size_t i) { return find_catalog(catalog)->schemas.at(i); }

CheckOptions options() {
    CheckOptions o;
    o.trials = 200;
    o.max_atoms = 6;
    o.alphabet = 3;
    o.seed = 7;
    return o;
}

void BM_CheckParallel(benchmark::State& st, const char* catalog, std::size_t idx) {
    const auto& s = schema(catalog, idx);
    for (auto _ : st) benchmark::DoNotOptimize(check_schema(s, options()).passed);
}

void BM_CheckSerial(benchmark::State& st, const char* catalog, std::size_t idx) {
    const auto& s = schema(catalog, idx);
    for (auto _ : st) benchmark::DoNotOptimize(check_schema_serial(s, options()).passed);
}

}  // namespace

BENCHMARK_CAPTURE(BM_CheckParallel, FEL4, "EqFFEL", 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckSerial, FEL4, "EqFFEL", 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckParallel, SCL10, "EqFSCL", 9)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckSerial, SCL10, "EqFSCL", 9)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckParallel, CP4, "CP", 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CheckSerial, CP4, "CP", 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
