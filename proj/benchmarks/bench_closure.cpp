#include <benchmark/benchmark.h>

#include "closurelab/reproduce.hpp"
#include "closurelab/session.hpp"

using namespace closurelab;

namespace {

Polynomial power(const Polynomial& f, int e) {
  Polynomial r = Polynomial::constant(f.ring(), 1);
  for (int k = 0; k < e; ++k) r = r * f;
  return r;
}

void BM_BuchbergerLex(benchmark::State& state) {
  RingPtr R = PolyRing::make(32003, {"x", "y", "z"}, MonomialOrder::lex());
  Polynomial x = Polynomial::variable(R, 0);
  Polynomial y = Polynomial::variable(R, 1);
  Polynomial z = Polynomial::variable(R, 2);
  std::vector<Polynomial> gens = {x * x + y * z, x * y + z * z, y * y - z};
  for (auto _ : state) {
    auto gb = buchberger(gens, MonomialOrder::lex());
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_BuchbergerLex);

void BM_IdealColon(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  RingPtr R = PolyRing::make(32003, {"x", "y"});
  Polynomial x = Polynomial::variable(R, 0);
  Polynomial y = Polynomial::variable(R, 1);
  Ideal I = Ideal::fromGenerators(R, {power(x, d), power(y, d)});
  Ideal J = Ideal::fromGenerators(R, {x, y});
  for (auto _ : state) {
    Ideal colon = idealColon(I, J);
    benchmark::DoNotOptimize(colon);
  }
}
BENCHMARK(BM_IdealColon)->Arg(3)->Arg(5)->Arg(8);

void BM_VeroneseSemigroupSweep(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int i = 0; i <= d - 1; ++i) {
      RationalityVerdict v = veroneseRationality(d, i);
      benchmark::DoNotOptimize(v);
    }
  }
}
BENCHMARK(BM_VeroneseSemigroupSweep)->Arg(3)->Arg(6)->Arg(10);

void BM_ClosurePresented2x2(benchmark::State& state) {
  RingPtr A = PolyRing::make(32003, {"x", "y", "z"});
  Polynomial x = Polynomial::variable(A, 0);
  Polynomial y = Polynomial::variable(A, 1);
  Polynomial z = Polynomial::variable(A, 2);
  QuotientRingPtr R = QuotientRing::make(A, Ideal::fromGenerators(A, {z * z - x * x - y * y}));
  PresentedModule B = PresentedModule::fromMatrix(R, {{z - x, -y}, {-y, z + x}});
  ClosureSpec spec = ClosureSpec::moduleClosurePresented(B);
  QuotientIdeal J = QuotientIdeal::fromPolynomials(R, {x, y});
  for (auto _ : state) {
    QuotientIdeal cl = closureOfIdeal(J, spec);
    benchmark::DoNotOptimize(cl);
  }
}
BENCHMARK(BM_ClosurePresented2x2);

void BM_AxiomSamples(benchmark::State& state) {
  RingPtr A = PolyRing::make(32003, {"x", "y"});
  Polynomial x = Polynomial::variable(A, 0);
  Polynomial y = Polynomial::variable(A, 1);
  QuotientRingPtr R = QuotientRing::make(A, Ideal::fromGenerators(A, {y * y}));
  ClosureSpec spec =
      ClosureSpec::moduleClosureIdeal(QuotientIdeal::fromPolynomials(R, {x, y}));
  for (auto _ : state) {
    SplitMix64 rng(7);
    std::vector<QuotientIdeal> samples;
    for (int i = 0; i < static_cast<int>(state.range(0)); ++i)
      samples.push_back(randomMonomialIdeal(rng, R, 4, 3));
    CheckReport ext = checkExtension(spec, samples);
    CheckReport idem = checkIdempotence(spec, samples);
    benchmark::DoNotOptimize(ext);
    benchmark::DoNotOptimize(idem);
  }
}
BENCHMARK(BM_AxiomSamples)->Arg(10)->Arg(50);

void BM_ReproduceAll(benchmark::State& state) {
  for (auto _ : state) {
    auto bundles = reproduceAll(32003);
    benchmark::DoNotOptimize(bundles);
  }
}
BENCHMARK(BM_ReproduceAll);

void BM_SessionParseRender(benchmark::State& state) {
  const std::string text =
      "ring R = F32003[x,y] / (x^2*y);\n"
      "ideal I = (x+y);\n"
      "module M1 = coker [[y]];\n"
      "module M2 = coker [[x^2]];\n"
      "check rational R M1 sop(x+y);\n"
      "check rational R M2 sop(x+y);\n";
  for (auto _ : state) {
    SessionFile s = parseSession(text);
    std::string rendered = renderSession(s);
    benchmark::DoNotOptimize(rendered);
  }
}
BENCHMARK(BM_SessionParseRender);

} // namespace

BENCHMARK_MAIN();
