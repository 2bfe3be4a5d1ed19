#include <benchmark/benchmark.h>

#include "probund/harness.hpp"
#include "probund/protower.hpp"
#include "probund/rng.hpp"

using namespace probund;

namespace {

void BM_EnumerateHoms(benchmark::State& state)
{
    FiniteGroup G = parse_group_spec("C2xC2xC2");
    FiniteGroup T = dihedral_group(4);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_homs(G, T));
}
BENCHMARK(BM_EnumerateHoms);

// presentation-shaped input: a few sparse small entries per row against a
// diagonal of moduli, the shape every kernel/solve call reduces
void BM_SmithNormalForm(benchmark::State& state)
{
    Rng rng(42);
    const int n = static_cast<int>(state.range(0));
    IntMat A(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int hits = 0; hits < 3; ++hits)
            A.at(i, rng.below_int(n)) = static_cast<i64>(rng.below(8));
        A.at(i, n + i) = 8;
    }
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(A));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

void BM_TensorPresentation(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    FiniteRing z8 = zmod_ring(8);
    FiniteModule m = zmod_module(z8, std::vector<i64>(static_cast<size_t>(k), 8));
    FiniteModule n = zmod_module(z8, {2, 4, 8});
    for (auto _ : state) benchmark::DoNotOptimize(tensor(m, n));
}
BENCHMARK(BM_TensorPresentation)->Arg(2)->Arg(4)->Arg(6);

void BM_ModuleHomSolutions(benchmark::State& state)
{
    FiniteRing kc2 = group_algebra(2, cyclic_group(2));
    FiniteModule f = free_module(kc2, FiniteSpace{3}).module;
    for (auto _ : state) benchmark::DoNotOptimize(module_hom_solutions(f, f));
}
BENCHMARK(BM_ModuleHomSolutions);

void BM_TorOverGroupAlgebra(benchmark::State& state)
{
    FiniteRing kc2 = group_algebra(2, cyclic_group(2));
    FiniteModule k = make_module(kc2, ModuleSide::right, {2}, {IntMat::identity(1)});
    FiniteModule n = make_module(kc2, ModuleSide::left, {2}, {IntMat::identity(1)});
    for (auto _ : state) benchmark::DoNotOptimize(tor(2, k, n));
}
BENCHMARK(BM_TorOverGroupAlgebra);

void BM_ColimitHoms(benchmark::State& state)
{
    FiniteGroup h = cyclic_group(2);
    auto embed = [&](const FiniteGroup& V) {
        for (const auto& hom : enumerate_homs(h, V))
            if (is_injective_hom(hom)) return hom;
        throw Error("no embedding");
    };
    AmalgamData D = make_amalgam_data(FiniteSpace{2}, h, {cyclic_group(4), symmetric3()},
                                      {embed(cyclic_group(4)), embed(symmetric3())});
    InternalGroupDiagram P = amalgam_to_diagram(D);
    ProGroupByHoms colim = colimit_via_coequaliser(P.category, P);
    FiniteGroup T = dihedral_group(4);
    for (auto _ : state) benchmark::DoNotOptimize(colim.homs_to(T));
}
BENCHMARK(BM_ColimitHoms);

void BM_TheoremCheck(benchmark::State& state)
{
    Bounds b;
    CheckInstance inst = gen_instance(TheoremId::tor_coproduct, 17, b);
    for (auto _ : state) benchmark::DoNotOptimize(check(TheoremId::tor_coproduct, inst));
}
BENCHMARK(BM_TheoremCheck);

} // namespace

BENCHMARK_MAIN();
