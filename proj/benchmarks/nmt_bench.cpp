#include <benchmark/benchmark.h>

#include "nmt/analyzer.hpp"
#include "nmt/corpus.hpp"
#include "nmt/counter_machine.hpp"
#include "nmt/parse.hpp"

using namespace nmt;

static void BM_DecideConsequence_Modal(benchmark::State& state) {
    const NMatrix& k = corpus_nmatrix("K");
    const Signature& sig = k.signature();
    const std::vector<Formula> premises{parse_formula("box(imp(p1,p2))", sig),
                                        parse_formula("box(p1)", sig)};
    const Formula conclusion = parse_formula("box(p2)", sig);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide_consequence(k, premises, conclusion));
    }
}
BENCHMARK(BM_DecideConsequence_Modal);

static void BM_Express_Modal(benchmark::State& state) {
    const NMatrix& k = corpus_nmatrix("K");
    const Formula f = parse_formula("imp(box(or(p1,neg(p1))),box(or(neg(p1),p1)))",
                                    k.signature());
    for (auto _ : state) {
        benchmark::DoNotOptimize(express(k, f, 1));
    }
}
BENCHMARK(BM_Express_Modal);

static void BM_MatrixEquivalence(benchmark::State& state) {
    const NMatrix& m7 = corpus_nmatrix("M7");
    const NMatrix& m8 = corpus_nmatrix("M8");
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide_matrix_equivalence(m7, m8));
    }
}
BENCHMARK(BM_MatrixEquivalence);

static void BM_CompileMachine(benchmark::State& state) {
    const CounterMachine& machine = corpus_machine("INCTEST");
    for (auto _ : state) {
        benchmark::DoNotOptimize(compile_machine(machine));
    }
}
BENCHMARK(BM_CompileMachine);

static void BM_TraceTheorem(benchmark::State& state) {
    const CounterMachine& machine = corpus_machine("INCTEST");
    const NMatrix compiled = compile_machine(machine);
    const Formula theorem = encode_trace(run(machine, {0}, 100));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_theorem(compiled, theorem));
    }
}
BENCHMARK(BM_TraceTheorem);

static void BM_AnalyzeTildedPair(benchmark::State& state) {
    const NMatrix& tilded = corpus_nmatrix("tilde_M2");
    const NMatrix& u = corpus_nmatrix("U");
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze(tilded, u, {}));
    }
}
BENCHMARK(BM_AnalyzeTildedPair);

static void BM_CounterexampleSearch(benchmark::State& state) {
    const NMatrix& u = corpus_nmatrix("U");
    const NMatrix& m6 = corpus_nmatrix("M6");
    const SearchBudget budget{static_cast<int>(state.range(0)), 2, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_counterexample(u, m6, budget));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CounterexampleSearch)->Arg(2)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
