#include <benchmark/benchmark.h>

#include "edg/condensed_system.hpp"
#include "edg/local_solver.hpp"
#include "edg/problem.hpp"

namespace {

edg::Mesh bench_mesh(bool quads, int n) {
  return quads ? edg::generate_uniform_quadrilateral(n) : edg::generate_uniform_triangular(n);
}

// Args: {k, quadrilateral}
void BM_LocalAssembleAndCondense(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto mesh = bench_mesh(state.range(1) != 0, 4);
  const auto problem = edg::sine_problem();
  const auto quad = edg::QuadratureOptions::for_order(k);
  const auto spaces = edg::build_cell_spaces(mesh.cell(5), k);
  for (auto _ : state) {
    const auto sys = edg::assemble_local(mesh, 5, spaces, problem.coefficient, k, quad);
    const auto block = edg::condense(sys, edg::load_moments(mesh.cell(5), spaces, problem.source, quad));
    benchmark::DoNotOptimize(block.matrix.data());
  }
}
BENCHMARK(BM_LocalAssembleAndCondense)->ArgsProduct({{0, 1, 2}, {0, 1}});

void BM_GlobalAssemble(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto mesh = bench_mesh(false, static_cast<int>(state.range(1)));
  const auto problem = edg::sine_problem();
  const auto space = edg::build_trace_space(mesh, k, edg::Method::EDG);
  for (auto _ : state) {
    const auto sys = edg::assemble(mesh, space, problem, edg::AssemblyOptions::for_order(k));
    benchmark::DoNotOptimize(sys.rhs.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(mesh.n_cells()));
}
BENCHMARK(BM_GlobalAssemble)->ArgsProduct({{0, 1, 2}, {16, 32}})->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto method = state.range(1) != 0 ? edg::Method::HDG : edg::Method::EDG;
  const auto mesh = bench_mesh(false, 32);
  const auto space = edg::build_trace_space(mesh, k, method);
  const auto sys = edg::assemble(mesh, space, edg::sine_problem(), edg::AssemblyOptions::for_order(k));
  for (auto _ : state) {
    const auto x = edg::solve(sys);
    benchmark::DoNotOptimize(x.data());
  }
  state.counters["dofs"] = static_cast<double>(space.n_free());
}
BENCHMARK(BM_Solve)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
