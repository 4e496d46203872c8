#include "closurelab/reproduce.hpp"

#include <stdexcept>

namespace closurelab {

namespace {

Polynomial power(const Polynomial& f, int e) {
  Polynomial r = Polynomial::constant(f.ring(), 1);
  for (int k = 0; k < e; ++k) r = r * f;
  return r;
}

CheckReport expectMembership(const std::string& ringDesc, const std::string& specDesc,
                             const std::string& what, const Polynomial& element,
                             const QuotientIdeal& ideal, bool expectMember) {
  bool member = ideal.contains(element);
  CheckReport r{expectMember ? "closure-membership" : "ideal-non-membership", ringDesc, specDesc,
                what, member == expectMember, element.str()};
  return r;
}

CheckReport expectOpen(const RationalityVerdict& v) {
  CheckReport r{"cl-rational", v.ring, v.spec, "expected: not rational", !v.closed, v.witness};
  return r;
}

// Power-family evidence is reported, not asserted: finite data for the
// all-t statement.
CheckReport powerFamilyEvidence(const QuotientRingPtr& R, const ClosureSpec& spec,
                                const std::vector<Polynomial>& sop, int tMax) {
  std::string flags = "closed flags";
  for (const auto& [t, closed] : checkPowerFamilyClosed(R, spec, sop, tMax))
    flags += " t=" + std::to_string(t) + ":" + (closed ? "true" : "false");
  return CheckReport{"power-family-evidence", R->description(), spec.description(), flags, true,
                     std::nullopt};
}

void absorb(ReproductionBundle& bundle, const RationalityVerdict& v) {
  for (const std::string& note : v.assumptionNotes) {
    bool seen = false;
    for (const std::string& have : bundle.assumptions) seen = seen || have == note;
    if (!seen) bundle.assumptions.push_back(note);
  }
  bundle.verdicts.push_back(v);
}

void finish(ReproductionBundle& bundle) {
  for (const CheckReport& r : bundle.reports) bundle.pass = bundle.pass && r.pass;
}

ReproductionBundle bundleX2y(std::uint32_t p, std::optional<int> tMax) {
  ReproductionBundle bundle{"x2y", "", {}, {}, {}, true};
  RingPtr A = PolyRing::make(p, {"x", "y"});
  Polynomial x = Polynomial::variable(A, 0);
  Polynomial y = Polynomial::variable(A, 1);
  QuotientRingPtr R = QuotientRing::make(A, Ideal::fromGenerators(A, {x * x * y}));
  std::vector<Polynomial> sop = {x + y};
  QuotientIdeal I = QuotientIdeal::fromPolynomials(R, sop);

  struct Case {
    std::string name;
    Polynomial entry;
    Polynomial witness;
  };
  std::vector<Case> cases = {{"cl_M1", y, y}, {"cl_M2", x * x, x * x}};
  for (const Case& c : cases) {
    PresentedModule B = PresentedModule::fromMatrix(R, {{c.entry}});
    ClosureSpec spec = ClosureSpec::moduleClosurePresented(B, c.name);
    QuotientIdeal cl = closureOfIdeal(I, spec);
    bundle.reports.push_back(expectMembership(R->description(), c.name,
                                              c.witness.str() + " in (x+y)^cl", c.witness, cl, true));
    bundle.reports.push_back(expectMembership(R->description(), c.name,
                                              c.witness.str() + " not in (x+y)", c.witness, I, false));
    RationalityVerdict v = isClRational(R, spec, sop);
    bundle.reports.push_back(expectOpen(v));
    absorb(bundle, v);
    if (tMax) bundle.reports.push_back(powerFamilyEvidence(R, spec, sop, *tMax));
  }
  finish(bundle);
  return bundle;
}

void runY2Case(ReproductionBundle& bundle, const QuotientRingPtr& R,
               const std::vector<Polynomial>& sop, const QuotientIdeal& I, const Polynomial& x,
               const Polynomial& y, std::optional<int> n, std::optional<int> tMax) {
  std::vector<Polynomial> bGens;
  std::string name;
  if (n) {
    bGens = {power(x, *n), y};
    name = "cl_(x^" + std::to_string(*n) + ",y)";
  } else {
    bGens = {y};
    name = "cl_(y)";
    bundle.assumptions.push_back(
        "n = infinity interpreted as B = (y); explicit interpretation flag");
  }
  ClosureSpec spec =
      ClosureSpec::moduleClosureIdeal(QuotientIdeal::fromPolynomials(R, bGens), name);
  QuotientIdeal cl = closureOfIdeal(I, spec);
  bundle.reports.push_back(
      expectMembership(R->description(), name, "y in ((x)*B : B)", y, cl, true));
  bundle.reports.push_back(
      expectMembership(R->description(), name, "y not in (x)", y, I, false));
  RationalityVerdict v = isClRational(R, spec, sop);
  bundle.reports.push_back(expectOpen(v));
  absorb(bundle, v);
  if (tMax) bundle.reports.push_back(powerFamilyEvidence(R, spec, sop, *tMax));
}

ReproductionBundle bundleY2(std::uint32_t p, const ReproduceParams& params) {
  ReproductionBundle bundle{"y2", "", {}, {}, {}, true};
  RingPtr A = PolyRing::make(p, {"x", "y"});
  Polynomial x = Polynomial::variable(A, 0);
  Polynomial y = Polynomial::variable(A, 1);
  QuotientRingPtr R = QuotientRing::make(A, Ideal::fromGenerators(A, {y * y}));
  std::vector<Polynomial> sop = {x};
  QuotientIdeal I = QuotientIdeal::fromPolynomials(R, sop);

  if (params.n) {
    if (*params.n < 1) throw std::invalid_argument("reproduce y2: n must be >= 1");
    bundle.params = "n=" + std::to_string(*params.n);
    runY2Case(bundle, R, sop, I, x, y, *params.n, params.tMax);
  } else if (params.nIsInfinity) {
    bundle.params = "n=inf";
    runY2Case(bundle, R, sop, I, x, y, std::nullopt, params.tMax);
  } else {
    bundle.params = "n=1..6,inf";
    for (int n = 1; n <= 6; ++n) runY2Case(bundle, R, sop, I, x, y, n, params.tMax);
    runY2Case(bundle, R, sop, I, x, y, std::nullopt, params.tMax);
  }
  finish(bundle);
  return bundle;
}

void runXnY2Case(ReproductionBundle& bundle, std::uint32_t p, int n, int i,
                 std::optional<int> tMax) {
  RingPtr A = PolyRing::make(p, {"x", "y"});
  Polynomial x = Polynomial::variable(A, 0);
  Polynomial y = Polynomial::variable(A, 1);
  QuotientRingPtr R = QuotientRing::make(A, Ideal::fromGenerators(A, {power(x, n) + y * y}));
  std::vector<Polynomial> sop = {x};
  QuotientIdeal I = QuotientIdeal::fromPolynomials(R, sop);
  std::string name = "cl_(x^" + std::to_string(i) + ",y)";
  ClosureSpec spec = ClosureSpec::moduleClosureIdeal(
      QuotientIdeal::fromPolynomials(R, {power(x, i), y}), name);
  QuotientIdeal cl = closureOfIdeal(I, spec);
  bundle.reports.push_back(
      expectMembership(R->description(), name, "y in ((x)*B : B)", y, cl, true));
  bundle.reports.push_back(expectMembership(R->description(), name, "y not in (x)", y, I, false));
  RationalityVerdict v = isClRational(R, spec, sop);
  bundle.reports.push_back(expectOpen(v));
  absorb(bundle, v);
  if (tMax) bundle.reports.push_back(powerFamilyEvidence(R, spec, sop, *tMax));
}

ReproductionBundle bundleXnY2(std::uint32_t p, const ReproduceParams& params) {
  ReproductionBundle bundle{"xn_y2", "", {}, {}, {}, true};
  std::vector<int> ns;
  if (params.n) {
    if (*params.n < 3 || *params.n % 2 == 0)
      throw std::invalid_argument("reproduce xn_y2: n must be odd and >= 3");
    if (params.i && (*params.i < 1 || *params.i > (*params.n - 1) / 2))
      throw std::invalid_argument("reproduce xn_y2: need 1 <= i <= (n-1)/2");
    ns = {*params.n};
    bundle.params = "n=" + std::to_string(*params.n);
  } else {
    if (params.i && *params.i < 1)
      throw std::invalid_argument("reproduce xn_y2: need i >= 1");
    ns = {3, 5, 7};
    bundle.params = "n=3,5,7";
  }
  if (params.i) bundle.params += ",i=" + std::to_string(*params.i);
  int ran = 0;
  for (int n : ns) {
    std::vector<int> is;
    if (params.i) {
      if (*params.i > (n - 1) / 2) continue; // out of range for this n in a sweep
      is = {*params.i};
    } else {
      for (int i = 1; i <= (n - 1) / 2; ++i) is.push_back(i);
    }
    for (int i : is) {
      runXnY2Case(bundle, p, n, i, params.tMax);
      ++ran;
    }
  }
  if (ran == 0) throw std::invalid_argument("reproduce xn_y2: i out of range for every n");
  finish(bundle);
  return bundle;
}

bool freeOfVariable(const Polynomial& f, int var) {
  for (const Term& t : f.terms())
    if (t.mono.exponent(var) > 0) return false;
  return true;
}

void runAdeCase(ReproductionBundle& bundle, const RingPtr& A,
                const std::vector<std::vector<Polynomial>>& phi, const Polynomial& g,
                std::optional<int> tMax) {
  Polynomial x = Polynomial::variable(A, 0);
  Polynomial y = Polynomial::variable(A, 1);
  Polynomial z = Polynomial::variable(A, 2);
  const size_t n = phi.size();
  for (const auto& row : phi)
    if (row.size() != n)
      throw std::invalid_argument("reproduce ade: phi must be a square matrix");

  if (!freeOfVariable(g, 2))
    throw std::invalid_argument("reproduce ade: g must lie in k[x,y]");
  Ideal xyIdeal = Ideal::fromGenerators(A, {x, y});
  for (const auto& row : phi) {
    for (const Polynomial& e : row) {
      if (!freeOfVariable(e, 2))
        throw std::invalid_argument("reproduce ade: phi entries must lie in k[x,y]");
      if (!e.isZero() && !xyIdeal.contains(e))
        throw std::invalid_argument("reproduce ade: phi entries must lie in the ideal (x,y)");
    }
  }

  // phi^2 = -g * Id is required for z*Id - phi to present a module over R.
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      Polynomial entry = Polynomial::zero(A);
      for (size_t k = 0; k < n; ++k) entry = entry + phi[i][k] * phi[k][j];
      Polynomial want = i == j ? -g : Polynomial::zero(A);
      if (entry != want)
        throw std::invalid_argument("reproduce ade: phi^2 != -g*Id");
    }
  }

  QuotientRingPtr R = QuotientRing::make(A, Ideal::fromGenerators(A, {z * z + g}));
  std::vector<std::vector<Polynomial>> rows(n, std::vector<Polynomial>(n, Polynomial::zero(A)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) rows[i][j] = (i == j ? z : Polynomial::zero(A)) - phi[i][j];
  PresentedModule B = PresentedModule::fromMatrix(R, rows);
  std::string name = "cl_coker(z*Id-phi," + std::to_string(n) + "x" + std::to_string(n) + ")";
  ClosureSpec spec = ClosureSpec::moduleClosurePresented(B, name);

  CheckReport precondition{"matrix-factorization", R->description(), name,
                           "phi^2 = -g*Id with entries in (x,y)", true, std::nullopt};
  bundle.reports.push_back(precondition);

  std::vector<Polynomial> sop = {x, y};
  QuotientIdeal J = QuotientIdeal::fromPolynomials(R, sop);
  QuotientIdeal cl = closureOfIdeal(J, spec);
  bundle.reports.push_back(
      expectMembership(R->description(), name, "z in (x,y)^cl", z, cl, true));
  bundle.reports.push_back(
      expectMembership(R->description(), name, "z not in (x,y)", z, J, false));
  RationalityVerdict v = isClRational(R, spec, sop);
  bundle.reports.push_back(expectOpen(v));
  absorb(bundle, v);
  if (tMax) bundle.reports.push_back(powerFamilyEvidence(R, spec, sop, *tMax));
}

ReproductionBundle bundleAde(std::uint32_t p, const ReproduceParams& params) {
  ReproductionBundle bundle{"ade", "", {}, {}, {}, true};
  RingPtr A = PolyRing::make(p, {"x", "y", "z"});
  Polynomial x = Polynomial::variable(A, 0);
  Polynomial y = Polynomial::variable(A, 1);

  if (params.phi) {
    if (!params.g) throw std::invalid_argument("reproduce ade: phi given without g");
    std::vector<std::vector<Polynomial>> phi;
    for (const auto& row : *params.phi) {
      std::vector<Polynomial> prow;
      for (const std::string& s : row) prow.push_back(parsePolynomial(A, s));
      phi.push_back(std::move(prow));
    }
    bundle.params = "custom phi (" + std::to_string(phi.size()) + "x" +
                    std::to_string(phi.size()) + ")";
    runAdeCase(bundle, A, phi, parsePolynomial(A, *params.g), params.tMax);
  } else {
    bundle.params = "phi=[[x,y],[y,-x]] and phi=[x]";
    runAdeCase(bundle, A, {{x, y}, {y, -x}}, -(x * x) - y * y, params.tMax);
    runAdeCase(bundle, A, {{x}}, -(x * x), params.tMax);
  }
  finish(bundle);
  return bundle;
}

} // namespace

ReproductionBundle reproduceVeronese(int d, std::optional<int> tMax) {
  if (d < 1) throw std::invalid_argument("reproduce veronese: d must be >= 1");
  if (!tMax) tMax = kDefaultPowerFamilyTmax;
  ReproductionBundle bundle{"veronese", "d=" + std::to_string(d), {}, {}, {}, true};
  SemigroupRing S(d);
  for (int i = 0; i <= d - 1; ++i) {
    RationalityVerdict v = veroneseRationality(d, i);
    bool expectClosed = d == 1 ? true : i <= d - 2;
    CheckReport report{"veronese-rationality", v.ring, v.spec,
                       "i=" + std::to_string(i) + ", expected closed=" +
                           (expectClosed ? std::string("true") : std::string("false")),
                       v.closed == expectClosed, v.witness};
    bundle.reports.push_back(report);
    absorb(bundle, v);
    if (tMax) {
      std::vector<ExponentPair> mi;
      for (long j = 0; j <= i; ++j) mi.push_back({d - j, j});
      SemigroupIdeal Ii = S.ideal(mi);
      std::string flags = "closed flags";
      for (int t = 1; t <= *tMax; ++t) {
        SemigroupIdeal It = S.ideal({{static_cast<long>(d) * t, 0}, {0, static_cast<long>(d) * t}});
        bool closed = S.equal(S.colon(S.product(It, Ii), Ii), It);
        flags += " t=" + std::to_string(t) + ":" + (closed ? "true" : "false");
      }
      bundle.reports.push_back(
          CheckReport{"power-family-evidence", v.ring, v.spec, flags, true, std::nullopt});
    }
  }
  finish(bundle);
  return bundle;
}

ReproductionBundle reproduceHypersurfaceExample(const std::string& name,
                                                const ReproduceParams& rawParams) {
  ReproduceParams params = rawParams;
  if (!params.tMax) params.tMax = kDefaultPowerFamilyTmax;
  if (name == "x2y") return bundleX2y(params.characteristic, params.tMax);
  if (name == "y2") return bundleY2(params.characteristic, params);
  if (name == "xn_y2") return bundleXnY2(params.characteristic, params);
  if (name == "ade") return bundleAde(params.characteristic, params);
  throw std::invalid_argument("reproduce: unknown example '" + name +
                              "' (expected x2y, y2, xn_y2, ade)");
}

std::vector<ReproductionBundle> reproduceAll(std::uint32_t characteristic) {
  std::vector<ReproductionBundle> bundles;
  for (int d = 2; d <= 6; ++d) bundles.push_back(reproduceVeronese(d));
  ReproduceParams defaults;
  defaults.characteristic = characteristic;
  bundles.push_back(reproduceHypersurfaceExample("x2y", defaults));
  bundles.push_back(reproduceHypersurfaceExample("y2", defaults));
  bundles.push_back(reproduceHypersurfaceExample("xn_y2", defaults));
  bundles.push_back(reproduceHypersurfaceExample("ade", defaults));
  return bundles;
}

} // namespace closurelab
