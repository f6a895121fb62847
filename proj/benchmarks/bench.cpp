#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "mapkit/init.hpp"
#include "mapkit/lang.hpp"
#include "mapkit/transition.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CoinBox {
  mapkit::Theory theory;
  mapkit::BState initial;
  std::vector<mapkit::ActionId> plan;
  mapkit::PointedStructure final_state;
  mapkit::Formula goal;

  CoinBox()
      : theory(mapkit::parse_theory(slurp(std::string(CORPUS_DIR) + "/coin_box.mad"))),
        initial(mapkit::generate_initial(theory, true).bstate()),
        plan(mapkit::parse_query("true after distract(A,C); signal(A,B); open(A); peek(A)",
                                 theory.sig)
                 .plan),
        final_state(mapkit::run_plan(theory, plan, initial).states.at(0)),
        goal(mapkit::parse_formula(
            "B[B] (B[A] tail | B[A] !tail) & !B[B] tail & !B[B] !tail", theory.sig)) {}
};

const CoinBox& fixture() {
  static CoinBox cb;
  return cb;
}

void bm_satisfies_32_worlds(benchmark::State& state) {
  const CoinBox& cb = fixture();
  for (auto _ : state)
    benchmark::DoNotOptimize(mapkit::satisfies(cb.final_state, cb.goal));
}
BENCHMARK(bm_satisfies_32_worlds);

void bm_coin_box_plan(benchmark::State& state) {
  const CoinBox& cb = fixture();
  for (auto _ : state) {
    mapkit::BState out = mapkit::run_plan(cb.theory, cb.plan, cb.initial);
    benchmark::DoNotOptimize(out.states.size());
  }
}
BENCHMARK(bm_coin_box_plan);

void bm_bisimilarity_32_worlds(benchmark::State& state) {
  const CoinBox& cb = fixture();
  mapkit::Replica copy =
      mapkit::replica(cb.final_state, cb.final_state.structure.next_id());
  for (auto _ : state)
    benchmark::DoNotOptimize(mapkit::bisimilar(cb.final_state, copy.state));
}
BENCHMARK(bm_bisimilarity_32_worlds);

void bm_generate_initial(benchmark::State& state) {
  const CoinBox& cb = fixture();
  for (auto _ : state)
    benchmark::DoNotOptimize(mapkit::generate_initial(cb.theory, true).designated.size());
}
BENCHMARK(bm_generate_initial);

}  // namespace

BENCHMARK_MAIN();
