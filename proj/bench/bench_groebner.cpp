// Serial reference vs OpenMP batch reduction on ideals from the corpus.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "edloci/cli.hpp"
#include "edloci/edlocus.hpp"

using namespace edloci;

namespace {

ConeInput corpus_cone(const char* key) {
  auto in = cli::entry_input(*cli::find_entry(key));
  return ConeInput::make(Ideal(in.vars, in.generators));
}

// I + (c+1)-minors of [u - x; Jac] over x ++ u, before saturation.
Ideal bordered_system(const ConeInput& x) {
  const VarSet& xv = x.vars();
  std::vector<std::string> unames;
  for (const auto& n : xv.names()) unames.push_back("u_" + n);
  VarSet ring = xv.concat(VarSet(unames));
  const std::size_t n = xv.size();
  std::vector<std::size_t> map(n);
  for (std::size_t k = 0; k < n; ++k) map[k] = k;
  auto ord = MonomialOrder::grevlex();
  std::vector<Polynomial> gens;
  for (const auto& g : x.generators()) gens.push_back(g.remap(ring, map, ord));
  PolyMatrix jac = jacobian(Ideal(ring, gens));
  PolyMatrix m(ring, jac.rows() + 1, n);
  for (std::size_t k = 0; k < n; ++k) {
    m.set(0, k, Polynomial::variable(ring, n + k) - Polynomial::variable(ring, k));
    for (std::size_t r = 0; r < jac.rows(); ++r) m.set(r + 1, k, jac.at(r, k));
  }
  for (auto& p : minors(m, static_cast<std::size_t>(x.codim()) + 1)) gens.push_back(std::move(p));
  return Ideal(ring, gens);
}

void run_gb(benchmark::State& state, const Ideal& ideal, const MonomialOrder& ord) {
  Context ctx;
  ctx.execution = state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
  GroebnerStats stats;
  for (auto _ : state) {
    // A fresh copy so no cached basis is reused.
    Ideal fresh(ideal.vars(), ideal.generators());
    benchmark::DoNotOptimize(groebner_basis(fresh, ord, ctx, &stats));
  }
  state.counters["pairs"] = static_cast<double>(stats.pairs_processed) / static_cast<double>(state.iterations());
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_BorderedGrevlex(benchmark::State& state, const char* key) {
  static std::map<std::string, Ideal> cache;
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, bordered_system(corpus_cone(key))).first;
  run_gb(state, it->second, MonomialOrder::grevlex());
}

void BM_BorderedElimination(benchmark::State& state, const char* key) {
  static std::map<std::string, Ideal> cache;
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, bordered_system(corpus_cone(key))).first;
  // eliminate the x-block, as the data-locus projections do
  run_gb(state, it->second, MonomialOrder::block(it->second.vars().size() / 2));
}

void BM_Minors(benchmark::State& state) {
  auto x = corpus_cone("cayley-cubic");
  Ideal sys = bordered_system(x);
  PolyMatrix jac = jacobian(sys);
  Execution exec = state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
  for (auto _ : state) benchmark::DoNotOptimize(minors(jac, 3, exec));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

}  // namespace

BENCHMARK_CAPTURE(BM_BorderedGrevlex, cuspidal_cubic, "cuspidal-cubic")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BorderedGrevlex, cayley_cubic, "cayley-cubic")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BorderedGrevlex, grassmannian, "grassmannian-2-4")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BorderedElimination, fermat_cubic, "fermat-cubic")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BorderedElimination, cayley_menger, "cayley-menger")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Minors)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
