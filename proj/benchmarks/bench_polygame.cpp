/*
 * Copyright 2026 The polygame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "polygame/exponential.hpp"
#include "polygame/laws.hpp"
#include "polygame/random.hpp"
#include "polygame/smcc.hpp"
#include "polygame/synthesis.hpp"

using namespace polygame;

namespace {

GameRef coin() { return share(fixtures::coin()); }

// Game with one state per index, moves to the two neighbours of a ring.
GameRef ring(std::size_t n)
{
    Game g;
    for (std::size_t i = 0; i < n; ++i) {
        Element s = atom("s" + std::to_string(i));
        for (std::size_t step : {1u, 2u})
            for (const char* d : {"l", "r"}) {
                std::size_t j = d[0] == 'l' ? (i + n - step % n) % n : (i + step) % n;
                g.add_transition(s, atom("m" + std::to_string(step)), atom(d), atom("s" + std::to_string(j)));
            }
    }
    return share(std::move(g));
}

} // namespace

static void BM_ComposeMaxSimulation(benchmark::State& state)
{
    auto g = ring(state.range(0));
    auto s = max_simulation(g, g);
    for (auto _ : state)
        benchmark::DoNotOptimize(compose(s, s));
    state.SetLabel("apex " + std::to_string(s.apex.size()));
}
BENCHMARK(BM_ComposeMaxSimulation)->Arg(4)->Arg(8)->Arg(16);

static void BM_MaxSimulation(benchmark::State& state)
{
    auto g = ring(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(max_simulation_relation(*g, *g));
}
BENCHMARK(BM_MaxSimulation)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_EquivalentAssociativity(benchmark::State& state)
{
    auto g = ring(state.range(0));
    auto s = max_simulation(g, g);
    auto l = compose(compose(s, s), s), r = compose(s, compose(s, s));
    Limits wide{10000, 1000};
    for (auto _ : state)
        benchmark::DoNotOptimize(equivalent(l, r, EquivMode::full, wide));
    state.SetLabel("apex " + std::to_string(l.apex.size()));
}
BENCHMARK(BM_EquivalentAssociativity)->Arg(2)->Arg(3);

static void BM_Lollipop(benchmark::State& state)
{
    auto g = ring(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(lollipop(*g, *coin()));
}
BENCHMARK(BM_Lollipop)->Arg(2)->Arg(4)->Arg(8);

static void BM_Bang(benchmark::State& state)
{
    auto p = coin();
    for (auto _ : state)
        benchmark::DoNotOptimize(bang(*p, state.range(0)));
}
BENCHMARK(BM_Bang)->DenseRange(1, 4);

static void BM_Comultiplication(benchmark::State& state)
{
    auto p = coin();
    for (auto _ : state)
        benchmark::DoNotOptimize(comul_sim(p, state.range(0)));
}
BENCHMARK(BM_Comultiplication)->DenseRange(1, 3);

static void BM_Chat(benchmark::State& state)
{
    auto p = coin();
    for (auto _ : state)
        benchmark::DoNotOptimize(chat(p, state.range(0)));
}
BENCHMARK(BM_Chat)->DenseRange(1, 4);

static void BM_LawSuite(benchmark::State& state)
{
    const auto& name = law_suites()[state.range(0)];
    LawOptions opt;
    opt.cases = 5;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_laws(name, {}, opt));
    state.SetLabel(name);
}
BENCHMARK(BM_LawSuite)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
