// Acceptance suite: every bundled property of the toolkit, one line per
// criterion. Exit status 0 iff all criteria hold.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "closurelab/reproduce.hpp"
#include "closurelab/session.hpp"
#include "oracles.hpp"

using namespace closurelab;

namespace {

Polynomial power(const Polynomial& f, int e) {
  Polynomial r = Polynomial::constant(f.ring(), 1);
  for (int k = 0; k < e; ++k) r = r * f;
  return r;
}

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

// --- shared rings -----------------------------------------------------------

struct Rings {
  RingPtr A2 = PolyRing::make(32003, {"x", "y"});
  Polynomial x = Polynomial::variable(A2, 0);
  Polynomial y = Polynomial::variable(A2, 1);
  QuotientRingPtr x2y = QuotientRing::make(A2, Ideal::fromGenerators(A2, {x * x * y}));
  QuotientRingPtr y2 = QuotientRing::make(A2, Ideal::fromGenerators(A2, {y * y}));
  QuotientRingPtr plane = QuotientRing::trivial(A2);

  RingPtr A3 = PolyRing::make(32003, {"x", "y", "z"});
  Polynomial x3 = Polynomial::variable(A3, 0);
  Polynomial y3 = Polynomial::variable(A3, 1);
  Polynomial z3 = Polynomial::variable(A3, 2);
  QuotientRingPtr ade2 =
      QuotientRing::make(A3, Ideal::fromGenerators(A3, {z3 * z3 - x3 * x3 - y3 * y3}));
  QuotientRingPtr ade1 =
      QuotientRing::make(A3, Ideal::fromGenerators(A3, {z3 * z3 - x3 * x3}));

  QuotientRingPtr xnY2(int n) const {
    return QuotientRing::make(A2, Ideal::fromGenerators(A2, {power(x, n) + y * y}));
  }

  ClosureSpec adeSpec(const QuotientRingPtr& R, bool twoByTwo) const {
    if (twoByTwo) {
      return ClosureSpec::moduleClosurePresented(
          PresentedModule::fromMatrix(
              R, {{z3 - x3, -y3}, {-y3, z3 + x3}}),
          "cl_coker(z*Id-phi,2x2)");
    }
    return ClosureSpec::moduleClosurePresented(PresentedModule::fromMatrix(R, {{z3 - x3}}),
                                               "cl_coker(z*Id-phi,1x1)");
  }
};

bool criterion1(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (int d = 2; d <= 6; ++d)
    for (int i = 0; i <= d - 1; ++i) {
      RationalityVerdict v = veroneseRationality(d, i);
      bool expected = i <= d - 2;
      if (v.closed != expected) {
        detail = "d=" + std::to_string(d) + " i=" + std::to_string(i) + " closed=" +
                 (v.closed ? "true" : "false");
        ok = false;
      }
    }
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (sec >= 5.0) {
    detail = "runtime " + std::to_string(sec) + "s exceeds 5s";
    return false;
  }
  if (ok) {
    std::ostringstream s;
    s << "d=2..6 sweep, closed iff i <= d-2; " << sec << "s";
    detail = s.str();
  }
  return ok;
}

bool criterion2(std::string& detail) {
  for (int d : {3, 4}) {
    RingPtr A = PolyRing::make(32003, {"x", "y"});
    Polynomial x = Polynomial::variable(A, 0);
    Polynomial y = Polynomial::variable(A, 1);
    std::vector<Polynomial> topGens, maxGens;
    for (int j = 0; j <= d - 1; ++j) topGens.push_back(power(x, d - j) * power(y, j));
    for (int j = 0; j <= d; ++j) maxGens.push_back(power(x, d - j) * power(y, j));
    Ideal I = Ideal::fromGenerators(A, {power(x, d), power(y, d)});
    Ideal Itop = Ideal::fromGenerators(A, topGens);
    Ideal m = Ideal::fromGenerators(A, maxGens);
    if (!idealEquality(idealProduct(I, Itop), idealProduct(m, Itop))) {
      detail = "product display failed at d=" + std::to_string(d);
      return false;
    }
    // the same identity through pure exponent arithmetic
    SemigroupRing S(d);
    std::vector<ExponentPair> top, maxi;
    for (long j = 0; j <= d - 1; ++j) top.push_back({d - j, j});
    for (long j = 0; j <= d; ++j) maxi.push_back({d - j, j});
    SemigroupIdeal sI = S.ideal({{d, 0}, {0, d}});
    if (!S.equal(S.product(sI, S.ideal(top)), S.product(S.ideal(maxi), S.ideal(top)))) {
      detail = "semigroup product display failed at d=" + std::to_string(d);
      return false;
    }
  }
  detail = "(x^d,y^d)*I_{d-1} = m*I_{d-1} at d=3,4 on both paths";
  return true;
}

bool criterion3(std::string& detail) {
  Rings r;
  QuotientIdeal I = QuotientIdeal::fromPolynomials(r.x2y, {r.x + r.y});
  ClosureSpec m1 = ClosureSpec::moduleClosurePresented(
      PresentedModule::fromMatrix(r.x2y, {{r.y}}), "cl_M1");
  ClosureSpec m2 = ClosureSpec::moduleClosurePresented(
      PresentedModule::fromMatrix(r.x2y, {{r.x * r.x}}), "cl_M2");
  bool ok = closureOfIdeal(I, m1).contains(r.y) && closureOfIdeal(I, m2).contains(r.x * r.x) &&
            !I.contains(r.y) && !I.contains(r.x * r.x);
  detail = ok ? "y and x^2 enter the closures of (x+y) but not (x+y) itself"
              : "membership pattern broken";
  return ok;
}

bool criterion4(std::string& detail) {
  Rings r;
  QuotientIdeal I = QuotientIdeal::fromPolynomials(r.y2, {r.x});
  if (I.contains(r.y)) {
    detail = "y unexpectedly lies in (x)";
    return false;
  }
  for (int n = 1; n <= 6; ++n) {
    QuotientIdeal B = QuotientIdeal::fromPolynomials(r.y2, {power(r.x, n), r.y});
    QuotientIdeal colon = idealColon(idealProduct(I, B), B);
    if (!colon.contains(r.y)) {
      detail = "y missing from the colon at n=" + std::to_string(n);
      return false;
    }
  }
  // flagged interpretation: n = infinity reads B = (y)
  QuotientIdeal Binf = QuotientIdeal::fromPolynomials(r.y2, {r.y});
  if (!idealColon(idealProduct(I, Binf), Binf).contains(r.y)) {
    detail = "y missing from the colon at n=inf";
    return false;
  }
  detail = "y in ((x)*B : B) \\ (x) for n=1..6 and the flagged n=inf";
  return true;
}

bool criterion5(std::string& detail) {
  Rings r;
  for (int n : {3, 5, 7}) {
    QuotientRingPtr R = r.xnY2(n);
    QuotientIdeal I = QuotientIdeal::fromPolynomials(R, {r.x});
    for (int i = 1; i <= (n - 1) / 2; ++i) {
      QuotientIdeal B = QuotientIdeal::fromPolynomials(R, {power(r.x, i), r.y});
      QuotientIdeal colon = idealColon(idealProduct(I, B), B);
      if (!colon.contains(r.y) || I.contains(r.y)) {
        detail = "pattern broken at n=" + std::to_string(n) + " i=" + std::to_string(i);
        return false;
      }
    }
  }
  detail = "y in ((x)*(x^i,y) : (x^i,y)) \\ (x) for n=3,5,7 and all i";
  return true;
}

bool criterion6(std::string& detail) {
  Rings r;
  for (bool twoByTwo : {true, false}) {
    QuotientRingPtr R = twoByTwo ? r.ade2 : r.ade1;
    ClosureSpec spec = r.adeSpec(R, twoByTwo);
    QuotientIdeal J = QuotientIdeal::fromPolynomials(R, {r.x3, r.y3});
    QuotientIdeal cl = closureOfIdeal(J, spec);
    if (!cl.contains(r.z3) || J.contains(r.z3)) {
      detail = std::string("pattern broken for the ") + (twoByTwo ? "2x2" : "1x1") + " instance";
      return false;
    }
  }
  detail = "z in (x,y)^cl \\ (x,y) for the 2x2 and 1x1 matrix factorizations";
  return true;
}

bool criterion7(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  Rings r;
  struct Combo {
    QuotientRingPtr ring;
    std::vector<ClosureSpec> specs;
  };
  auto idealSpec = [](const QuotientRingPtr& R, std::vector<Polynomial> gens,
                      const std::string& name) {
    return ClosureSpec::moduleClosureIdeal(QuotientIdeal::fromPolynomials(R, std::move(gens)),
                                           name);
  };
  std::vector<Combo> combos;
  combos.push_back({r.x2y,
                    {ClosureSpec::moduleClosurePresented(
                         PresentedModule::fromMatrix(r.x2y, {{r.y}}), "cl_M1"),
                     ClosureSpec::moduleClosurePresented(
                         PresentedModule::fromMatrix(r.x2y, {{r.x * r.x}}), "cl_M2"),
                     idealSpec(r.x2y, {r.x, r.y}, "cl_m")}});
  combos.push_back({r.y2,
                    {idealSpec(r.y2, {r.x, r.y}, "cl_(x,y)"),
                     idealSpec(r.y2, {r.x * r.x, r.y}, "cl_(x^2,y)"),
                     idealSpec(r.y2, {r.y}, "cl_(y)")}});
  combos.push_back({r.plane,
                    {idealSpec(r.plane, {r.x, r.y}, "cl_(x,y)"),
                     idealSpec(r.plane, {r.x * r.x, r.x * r.y, r.y * r.y}, "cl_m2"),
                     idealSpec(r.plane, {r.x}, "cl_(x)")}});

  int violations = 0;
  for (const Combo& combo : combos) {
    SplitMix64 rng(2024);
    std::vector<QuotientIdeal> samples;
    for (int i = 0; i < 100; ++i) samples.push_back(randomMonomialIdeal(rng, combo.ring, 4, 3));
    std::vector<std::pair<QuotientIdeal, QuotientIdeal>> pairs;
    for (size_t i = 0; i + 1 < samples.size(); ++i)
      pairs.emplace_back(samples[i], idealSum(samples[i], samples[i + 1]));
    for (const ClosureSpec& spec : combo.specs) {
      if (!checkExtension(spec, samples).pass) ++violations;
      if (!checkIdempotence(spec, samples).pass) ++violations;
      if (!checkOrderPreservation(spec, pairs).pass) ++violations;
    }
  }
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (violations > 0) {
    detail = std::to_string(violations) + " axiom violations";
    return false;
  }
  if (sec >= 60.0) {
    detail = "runtime " + std::to_string(sec) + "s exceeds 60s";
    return false;
  }
  std::ostringstream s;
  s << "3 rings x 3 closures x 100 seeded ideals, zero violations; " << sec << "s";
  detail = s.str();
  return true;
}

bool criterion8(std::string& detail) {
  Rings r;
  struct Instance {
    QuotientRingPtr ring;
    ClosureSpec spec;
    std::vector<Polynomial> sop;
  };
  std::vector<Instance> instances;
  instances.push_back({r.x2y,
                       ClosureSpec::moduleClosurePresented(
                           PresentedModule::fromMatrix(r.x2y, {{r.y}}), "cl_M1"),
                       {r.x + r.y}});
  instances.push_back({r.x2y,
                       ClosureSpec::moduleClosurePresented(
                           PresentedModule::fromMatrix(r.x2y, {{r.x * r.x}}), "cl_M2"),
                       {r.x + r.y}});
  for (int n = 1; n <= 6; ++n)
    instances.push_back({r.y2,
                         ClosureSpec::moduleClosureIdeal(
                             QuotientIdeal::fromPolynomials(r.y2, {power(r.x, n), r.y})),
                         {r.x}});
  instances.push_back(
      {r.y2, ClosureSpec::moduleClosureIdeal(QuotientIdeal::fromPolynomials(r.y2, {r.y})),
       {r.x}});
  for (int n : {3, 5, 7}) {
    QuotientRingPtr R = r.xnY2(n);
    for (int i = 1; i <= (n - 1) / 2; ++i)
      instances.push_back({R,
                           ClosureSpec::moduleClosureIdeal(
                               QuotientIdeal::fromPolynomials(R, {power(r.x, i), r.y})),
                           {r.x}});
  }
  instances.push_back({r.ade2, r.adeSpec(r.ade2, true), {r.x3, r.y3}});
  instances.push_back({r.ade1, r.adeSpec(r.ade1, false), {r.x3, r.y3}});

  int checked = 0;
  for (const Instance& inst : instances) {
    for (int k = 0; k < static_cast<int>(inst.sop.size()); ++k) {
      CheckReport ccb = checkStrongCCB(inst.ring, inst.spec, inst.sop, k);
      CheckReport cc = checkColonCapturing(inst.ring, inst.spec, inst.sop, k);
      if (ccb.pass && !cc.pass) {
        detail = "implication broken: " + inst.spec.description() + " k=" + std::to_string(k);
        return false;
      }
      // containment chain: (x_1..x_k) : x_{k+1} sits inside (x_1..x_k)^cl : x_{k+1}
      std::vector<Polynomial> front(inst.sop.begin(), inst.sop.begin() + k);
      QuotientIdeal Ik = QuotientIdeal::fromPolynomials(inst.ring, front);
      QuotientIdeal next =
          QuotientIdeal::fromPolynomials(inst.ring, {inst.sop[static_cast<size_t>(k)]});
      QuotientIdeal lhs = idealColon(Ik, next);
      QuotientIdeal rhs = idealColon(closureOfIdeal(Ik, inst.spec), next);
      for (const Polynomial& g : lhs.reducedGenerators()) {
        if (!rhs.contains(g)) {
          detail = "colon chain broken: " + inst.spec.description() + " k=" + std::to_string(k);
          return false;
        }
      }
      ++checked;
    }
  }
  detail = std::to_string(checked) + " instances, implication and colon chain hold";
  return true;
}

bool criterion9(std::string& detail) {
  // Groebner-path ideal operations against degree-bounded enumeration.
  SplitMix64 rng(777);
  RingPtr A = PolyRing::make(32003, {"x", "y"});
  for (int trial = 0; trial < 100; ++trial) {
    int nv = 2;
    auto gensI = oracles::randomMonomialGens(rng, nv, 2, 3, 3);
    auto gensJ = oracles::randomMonomialGens(rng, nv, 2, 2, 2);
    std::vector<Polynomial> polysI, polysJ;
    for (const Monomial& m : gensI) polysI.push_back(oracles::monomialToPoly(A, m));
    for (const Monomial& m : gensJ) polysJ.push_back(oracles::monomialToPoly(A, m));
    Ideal I = Ideal::fromGenerators(A, polysI);
    Ideal J = Ideal::fromGenerators(A, polysJ);
    int bound = 6;
    Ideal colon = idealColon(I, J);
    Ideal meet = idealIntersection(I, J);
    for (const Monomial& m : oracles::enumerateMonomials(nv, bound)) {
      Polynomial p = oracles::monomialToPoly(A, m);
      bool memberOracle = oracles::monomialIdealMember(m, gensI);
      if (idealMembership(p, I) != memberOracle) {
        detail = "membership mismatch at trial " + std::to_string(trial);
        return false;
      }
      bool colonOracle = true;
      for (const Monomial& u : gensJ)
        colonOracle = colonOracle && oracles::monomialIdealMember(m * u, gensI);
      if (idealMembership(p, colon) != colonOracle) {
        detail = "colon mismatch at trial " + std::to_string(trial);
        return false;
      }
      bool meetOracle = memberOracle && oracles::monomialIdealMember(m, gensJ);
      if (idealMembership(p, meet) != meetOracle) {
        detail = "intersection mismatch at trial " + std::to_string(trial);
        return false;
      }
    }
  }

  // Veronese semigroup path against the ambient-ring path for d = 2, 3.
  RingPtr AQ = PolyRing::make(0, {"x", "y"});
  for (int d = 2; d <= 3; ++d) {
    SemigroupRing S(d);
    SemigroupIdeal sI = S.ideal({{d, 0}, {0, d}});
    for (int i = 0; i <= d - 1; ++i) {
      std::vector<ExponentPair> mi;
      for (long j = 0; j <= i; ++j) mi.push_back({d - j, j});
      SemigroupIdeal Ii = S.ideal(mi);
      SemigroupIdeal viaSemigroup = S.colon(S.product(sI, Ii), Ii);
      auto toPolys = [&](const SemigroupIdeal& sid) {
        std::vector<Polynomial> polys;
        for (const ExponentPair& g : sid.gens)
          polys.push_back(oracles::monomialToPoly(
              AQ, Monomial({static_cast<int>(g.a), static_cast<int>(g.b)})));
        return polys;
      };
      Ideal prod = idealProduct(Ideal::fromGenerators(AQ, toPolys(sI)),
                                Ideal::fromGenerators(AQ, toPolys(Ii)));
      Ideal colon = idealColon(prod, Ideal::fromGenerators(AQ, toPolys(Ii)));
      std::vector<ExponentPair> raw;
      for (const Polynomial& g : colon.groebnerBasis())
        raw.push_back({g.leadingMonomial().exponent(0), g.leadingMonomial().exponent(1)});
      if (!S.equal(viaSemigroup, S.ideal(S.truncateToSemigroup(raw)))) {
        detail = "Veronese path disagreement at d=" + std::to_string(d) +
                 " i=" + std::to_string(i);
        return false;
      }
    }
  }
  detail = "100 seeded monomial instances + Veronese paths d=2,3 agree";
  return true;
}

bool criterion10(std::string& detail) {
  Rings r;
  std::vector<QuotientIdeal> sample = {
      QuotientIdeal::fromPolynomials(r.y2, {r.x}),
      QuotientIdeal::fromPolynomials(r.y2, {power(r.x, 2)}),
      QuotientIdeal::fromPolynomials(r.y2, {r.x, r.y}),
  };
  if (!finitisticTestIdealSample(r.y2, ClosureSpec::trivial(), sample).isUnitIdeal()) {
    detail = "trivial test-ideal sample is not the unit ideal";
    return false;
  }
  std::vector<QuotientIdeal> planeSample = {
      QuotientIdeal::fromPolynomials(r.plane, {r.x, r.y})};
  if (!finitisticTestIdealSample(r.plane, ClosureSpec::trivial(), planeSample).isUnitIdeal()) {
    detail = "trivial test-ideal sample is not the unit ideal over the plane";
    return false;
  }
  struct SopCase {
    QuotientRingPtr ring;
    std::vector<Polynomial> sop;
  };
  std::vector<SopCase> cases = {
      {r.x2y, {r.x + r.y}},
      {r.y2, {r.x}},
      {r.plane, {r.x, r.y}},
      {r.ade2, {r.x3, r.y3}},
  };
  for (const SopCase& c : cases) {
    RationalityVerdict v = isClRational(c.ring, ClosureSpec::trivial(), c.sop);
    if (!v.closed) {
      detail = "trivial closure not rational over " + c.ring->description();
      return false;
    }
  }
  detail = "trivial closure: unit test ideal and closed parameter ideals everywhere";
  return true;
}

} // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1. Veronese sweep d=2..6 (closed iff i <= d-2, < 5s)", criterion1},
      {"2. product display (x^d,y^d)*I_{d-1} = m*I_{d-1} at d=3,4", criterion2},
      {"3. k[x,y]/(x^2*y): y and x^2 witness openness of (x+y)", criterion3},
      {"4. k[x,y]/(y^2): y in ((x)*(x^n,y) : (x^n,y)) \\ (x), n=1..6,inf", criterion4},
      {"5. k[x,y]/(x^n+y^2): y in ((x)*(x^i,y) : (x^i,y)) \\ (x)", criterion5},
      {"6. matrix factorization: z in (x,y)^cl \\ (x,y)", criterion6},
      {"7. closure axioms on 100 seeded ideals x 3 rings x 3 modules (< 60s)", criterion7},
      {"8. strong-CC-B implies colon-capturing on all executed instances", criterion8},
      {"9. Groebner path vs enumeration oracle vs semigroup path", criterion9},
      {"10. trivial closure sanity (unit test ideal, closed sops)", criterion10},
  };
  int failures = 0;
  for (Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.name;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!ok) ++failures;
  }
  if (failures) {
    std::cout << failures << " criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
