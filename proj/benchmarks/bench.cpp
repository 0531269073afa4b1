//
// Copyright 2026 The wasp authors
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
//
#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include <wasp/ground.h>
#include <wasp/ht.h>
#include <wasp/parser.h>
#include <wasp/reason.h>
#include <wasp/semiring.h>
#include <wasp/weighted.h>

using namespace wasp;

namespace {

// n independent guesses: 2^n answer sets, the worst case for enumeration.
Program guessProgram(int n) {
    std::string text;
    for (int i = 0; i < n; ++i) {
        const std::string a = "a" + std::to_string(i);
        const std::string b = "b" + std::to_string(i);
        text += a + " :- not " + b + ".\n" + b + " :- not " + a + ".\n";
    }
    return parseProgram(text);
}

void BM_AnswerSets(benchmark::State& state) {
    const Program p = guessProgram(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(answerSets(p));
    }
}
BENCHMARK(BM_AnswerSets)->Arg(4)->Arg(6)->Arg(8);

void BM_AnswerSetsThreaded(benchmark::State& state) {
    const Program p = guessProgram(8);
    SolveOptions opts;
    opts.threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(answerSets(p, opts));
    }
}
BENCHMARK(BM_AnswerSetsThreaded)->Arg(1)->Arg(2)->Arg(4);

void BM_Grounding(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::string text = "#domain d = {";
    for (int i = 0; i < n; ++i) {
        text += (i ? ", " : "") + std::to_string(i);
    }
    text += "}.\ne(X,Y) :- X in d, Y in d.\nq(X) :- p(X), not r(X).\n";
    const Program p = parseProgram(text);
    for (auto _ : state) {
        benchmark::DoNotOptimize(groundProgram(p));
    }
}
BENCHMARK(BM_Grounding)->Arg(8)->Arg(16)->Arg(32);

void BM_WeightedEval(benchmark::State& state) {
    const Semiring& rat = Semiring::byName("rat");
    std::string text;
    for (int i = 0; i < 16; ++i) {
        text += (i ? " + " : "") + std::to_string(i + 1) + "*p" + std::to_string(i);
    }
    const WfPtr alpha = parseWeightedFormula(text, rat);
    Interpretation i;
    for (int k = 0; k < 16; k += 2) {
        i.insert("p" + std::to_string(k));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(evalWeighted(alpha, i, rat));
    }
}
BENCHMARK(BM_WeightedEval);

void BM_SatValue(benchmark::State& state) {
    const Semiring& nat = Semiring::byName("nat");
    const int n = static_cast<int>(state.range(0));
    std::vector<std::string> universe;
    std::string text;
    for (int i = 0; i < n; ++i) {
        universe.push_back("p" + std::to_string(i));
        text += (i ? " + " : "") + std::to_string(i + 1) + "*p" + std::to_string(i);
    }
    const WfPtr alpha = parseWeightedFormula(text, nat);
    for (auto _ : state) {
        benchmark::DoNotOptimize(satValue(alpha, nat, universe));
    }
}
BENCHMARK(BM_SatValue)->Arg(8)->Arg(12)->Arg(16);

} // namespace

BENCHMARK_MAIN();
