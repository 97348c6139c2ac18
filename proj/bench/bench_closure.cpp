#include <benchmark/benchmark.h>

#include "gcyl/gray.hpp"
#include "gcyl/nu.hpp"

using namespace gcyl;

namespace {

const char* kCells[] = {"[2]", "[3]", "[2]([1],[0])", "[1]([2])", "[4]"};

void closure_parallel(benchmark::State& st) {
    Tensor c = cylinder(parse_cell(kCells[st.range(0)]));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_cells(*c.cx, 4));
    st.SetLabel(kCells[st.range(0)]);
}

void closure_serial(benchmark::State& st) {
    Tensor c = cylinder(parse_cell(kCells[st.range(0)]));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_cells_serial(*c.cx, 4));
    st.SetLabel(kCells[st.range(0)]);
}

void search_parallel(benchmark::State& st) {
    Tensor c = cylinder(globe(static_cast<int>(st.range(0))));
    for (auto _ : st) benchmark::DoNotOptimize(table_search(*c.cx, 3, 3));
}

void search_serial(benchmark::State& st) {
    Tensor c = cylinder(globe(static_cast<int>(st.range(0))));
    for (auto _ : st) benchmark::DoNotOptimize(table_search_serial(*c.cx, 3, 3));
}

void gluing(benchmark::State& st) {
    Cell t = globe(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(verify_gluing(t));
}

}  // namespace

BENCHMARK(closure_parallel)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(closure_serial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(search_parallel)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(search_serial)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(gluing)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
