#include <benchmark/benchmark.h>

#include <random>

#include "invar/bitlinalg.hpp"
#include "invar/catalog.hpp"
#include "invar/invariant.hpp"
#include "invar/rings.hpp"
#include "invar/subring.hpp"

using namespace invar;

// Dense action matrix of one L3(2) generator on the degree-d slice of F2[x, y, z, w].
static void BM_SliceActionMatrix(benchmark::State& state) {
    MatF2 g = l3_2_matrix_a().transpose();
    int d = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(slice_action_matrix(g, d));
    state.counters["slice"] = double(Slice(4, d).size());
}
BENCHMARK(BM_SliceActionMatrix)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

// Fixed spaces of L3(2) and A7 from degree 0 up to the bound, fresh engine each time.
static void BM_FixedSpacesL3(benchmark::State& state) {
    auto g = l3_2_on_2_4();
    int bound = int(state.range(0));
    for (auto _ : state) {
        FixedSpaceEngine e(4, g.gens);
        benchmark::DoNotOptimize(invariant_dims(e, bound));
    }
}
BENCHMARK(BM_FixedSpacesL3)->Arg(13)->Arg(21)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_FixedSpacesA7(benchmark::State& state) {
    auto g = find_a7_in_gl4();
    int bound = int(state.range(0));
    for (auto _ : state) {
        FixedSpaceEngine e(4, g.gens);
        benchmark::DoNotOptimize(invariant_dims(e, bound));
    }
}
BENCHMARK(BM_FixedSpacesA7)->Arg(24)->Arg(45)->Unit(benchmark::kMillisecond);

// Row reduction of a random n x n matrix.
static void BM_Rref(benchmark::State& state) {
    size_t n = size_t(state.range(0));
    std::mt19937_64 rng(7);
    BitMatrix base(n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t w = 0; w < base.stride(); ++w) base.row(r)[w] = rng();
    for (size_t r = 0; r < n; ++r)
        for (size_t c = n; c < base.stride() * 64; ++c)
            if (base.get(r, c)) base.flip(r, c);
    for (auto _ : state) {
        BitMatrix m = base;
        benchmark::DoNotOptimize(rref(m));
    }
}
BENCHMARK(BM_Rref)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

// Per-degree intersection of the image ring with the S4 Dickson algebra.
static void BM_SubalgebraIntersection(benchmark::State& state) {
    int bound = int(state.range(0));
    for (auto _ : state) {
        Subalgebra a = *named_subring("image_ring"), b = *named_subring("dickson_d2_d3_d4");
        benchmark::DoNotOptimize(intersect_subalgebras(a, b, bound));
    }
}
BENCHMARK(BM_SubalgebraIntersection)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
