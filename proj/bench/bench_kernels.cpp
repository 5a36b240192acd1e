// Parallel kernels against the serial reference, per statistic and word.

#include <benchmark/benchmark.h>

#include "abelianlab/catalog.hpp"
#include "abelianlab/complexity.hpp"

using namespace abelianlab;

namespace {

const char* kWords[] = {"tm", "pd2", "tm2"};

StatisticKind kind_of(int i) {
    switch (i) {
        case 0: return StatisticKind::factor();
        case 1: return StatisticKind::l_abelian(1);
        case 2: return StatisticKind::l_abelian(2);
        default: return StatisticKind::ext_delta({0});
    }
}

template <bool Parallel>
void run(benchmark::State& st) {
    auto w = catalog::word(kWords[st.range(0)], 64);
    auto kind = kind_of(static_cast<int>(st.range(1)));
    auto n_hi = static_cast<std::size_t>(st.range(2));
    for (auto _ : st) {
        auto s = Parallel ? series(w, kind, n_hi) : reference_series(w, kind, n_hi);
        benchmark::DoNotOptimize(s.values.data());
    }
    st.SetLabel(std::string(kWords[st.range(0)]) + " " + kind.to_string());
}

void args(benchmark::internal::Benchmark* b) {
    for (int w = 0; w < 3; ++w)
        for (int k = 0; k < 4; ++k) b->Args({w, k, 256});
    b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(run<true>)->Name("kernels")->Apply(args);
BENCHMARK(run<false>)->Name("reference")->Apply(args);

BENCHMARK_MAIN();
