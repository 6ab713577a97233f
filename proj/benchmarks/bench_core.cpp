#include <random>

#include <benchmark/benchmark.h>

#include "gdep/codegen.hpp"
#include "gdep/interaction.hpp"
#include "gdep/layout.hpp"
#include "gdep/scene_io.hpp"
#include "gdep/stretch.hpp"

using namespace gdep;

static void BM_LayoutListChildren(benchmark::State& state) {
  const Fixture fx = load_fixture("blocks");
  Program p = fx.program;
  p.root.children.clear();
  for (int i = 0; i < state.range(0); ++i) p = insert(fx.language, p, 1, "c1", "RedBox", std::size_t(i)).program;
  for (auto _ : state) benchmark::DoNotOptimize(layout_program(fx.language, p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LayoutListChildren)->RangeMultiplier(4)->Range(1, 1024)->Complexity();

static void BM_LayoutFixture(benchmark::State& state) {
  const Fixture fx = load_fixture("petri");
  for (auto _ : state) benchmark::DoNotOptimize(export_scene(layout_program(fx.language, fx.program)));
}
BENCHMARK(BM_LayoutFixture);

static void BM_Pick(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-50, 50);
  LayoutScene scene;
  for (int i = 0; i < state.range(0); ++i) {
    SceneNode n;
    n.id = i + 1;
    n.world = {{u(rng), u(rng), u(rng)}, {2, 2, 2}};
    scene.nodes.push_back(n);
  }
  Camera cam;
  cam.position = {0, 0, 150};
  const Ray ray = screen_ray(cam, {400, 300});
  for (auto _ : state) benchmark::DoNotOptimize(pick(scene, ray));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Pick)->RangeMultiplier(8)->Range(64, 32768)->Complexity();

static void BM_BuildMap(benchmark::State& state) {
  std::vector<StretchInterval> ivs;
  std::vector<StretchTarget> targets;
  for (int i = 0; i < state.range(0); ++i) {
    ivs.push_back({Axis::X, i * 3.0, i * 3.0 + 2.0});
    targets.push_back({i * 3.0, i * 3.0 + 2.5, 4.0});
  }
  for (auto _ : state) benchmark::DoNotOptimize(build_map(ivs, targets));
}
BENCHMARK(BM_BuildMap)->RangeMultiplier(4)->Range(4, 256);

static void BM_Emit(benchmark::State& state) {
  const Fixture fx = load_fixture("blocks");
  const GenericDepiction& d = fx.language.depictions.at("Block");
  for (auto _ : state) benchmark::DoNotOptimize(emit(d));
}
BENCHMARK(BM_Emit);

BENCHMARK_MAIN();
