#include "closurelab/closure.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "closurelab/rationality.hpp"

namespace closurelab {

ClosureSpec ClosureSpec::trivial() {
  return ClosureSpec(Kind::Trivial, std::nullopt, std::nullopt, "trivial");
}

ClosureSpec ClosureSpec::moduleClosureIdeal(QuotientIdeal B, std::string name) {
  return ClosureSpec(Kind::ModuleClosureIdeal, std::move(B), std::nullopt, std::move(name));
}

ClosureSpec ClosureSpec::moduleClosurePresented(PresentedModule B, std::string name) {
  return ClosureSpec(Kind::ModuleClosurePresented, std::nullopt, std::move(B), std::move(name));
}

const QuotientIdeal& ClosureSpec::idealB() const {
  if (kind_ != Kind::ModuleClosureIdeal)
    throw std::invalid_argument("ClosureSpec: not an ideal-valued module closure");
  return *idealB_;
}

const PresentedModule& ClosureSpec::presentedB() const {
  if (kind_ != Kind::ModuleClosurePresented)
    throw std::invalid_argument("ClosureSpec: not a presented module closure");
  return *presentedB_;
}

QuotientRingPtr ClosureSpec::ring() const {
  switch (kind_) {
    case Kind::Trivial: return nullptr;
    case Kind::ModuleClosureIdeal: return idealB_->ring();
    case Kind::ModuleClosurePresented: return presentedB_->ring();
  }
  return nullptr;
}

std::string ClosureSpec::description() const {
  if (!name_.empty()) return name_;
  switch (kind_) {
    case Kind::Trivial: return "trivial";
    case Kind::ModuleClosureIdeal: {
      std::string s = "cl_B[ideal (";
      const auto& gens = idealB_->rGenerators();
      for (size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ", ";
        s += gens[i].str();
      }
      return s + ")]";
    }
    case Kind::ModuleClosurePresented:
      return "cl_B[" + presentedB_->description() + "]";
  }
  return "?";
}

ClosureSpec ClosureSpec::over(const QuotientRingPtr& S) const {
  switch (kind_) {
    case Kind::Trivial: return trivial();
    case Kind::ModuleClosureIdeal:
      return moduleClosureIdeal(QuotientIdeal::fromPolynomials(S, idealB_->rGenerators()), name_);
    case Kind::ModuleClosurePresented:
      return moduleClosurePresented(PresentedModule::fromMatrix(S, presentedB_->rows()), name_);
  }
  throw std::logic_error("ClosureSpec: bad kind");
}

namespace {

void requireSpecRingMatches(const QuotientIdeal& I, const ClosureSpec& spec) {
  QuotientRingPtr ring = spec.ring();
  if (ring && !ring->sameStructure(*I.ring()))
    throw std::invalid_argument("closureOfIdeal: closure spec over a different ring");
}

} // namespace

QuotientIdeal closureOfIdeal(const QuotientIdeal& I, const ClosureSpec& spec) {
  requireSpecRingMatches(I, spec);
  switch (spec.kind()) {
    case ClosureSpec::Kind::Trivial:
      return I;
    case ClosureSpec::Kind::ModuleClosureIdeal: {
      const QuotientIdeal& B = spec.idealB();
      if (B.isZeroIdeal())
        throw std::invalid_argument("closureOfIdeal: B is the zero module");
      return idealColon(idealProduct(I, B), B);
    }
    case ClosureSpec::Kind::ModuleClosurePresented: {
      const PresentedModule& B = spec.presentedB();
      if (B.isZeroMatrix()) return I; // B free: the closure is trivial
      if (B.presentsZeroModule())
        throw std::invalid_argument("closureOfIdeal: B is the zero module");
      const QuotientRingPtr& R = I.ring();
      const int r = B.rank();
      std::vector<FreeModuleElement> gens;
      for (int j = 0; j < B.relationCount(); ++j) gens.push_back(B.column(j));
      for (const Polynomial& f : I.rGenerators())
        for (int i = 0; i < r; ++i)
          gens.push_back(FreeModuleElement::basisVector(R, r, i).scaledBy(f));
      Submodule N = Submodule::fromGenerators(R, r, std::move(gens));
      bool first = true;
      QuotientIdeal result = QuotientIdeal::unitIdeal(R);
      for (int j = 0; j < r; ++j) {
        QuotientIdeal colon = moduleColonIdeal(N, FreeModuleElement::basisVector(R, r, j));
        result = first ? colon : idealIntersection(result, colon);
        first = false;
      }
      return result;
    }
  }
  throw std::logic_error("closureOfIdeal: bad kind");
}

bool isIdealClosed(const QuotientIdeal& I, const ClosureSpec& spec) {
  return idealEquality(closureOfIdeal(I, spec), I);
}

std::optional<Polynomial> firstViolation(const QuotientIdeal& sub, const QuotientIdeal& super) {
  const RingPtr& ambient = sub.ring()->ambient();
  std::vector<Polynomial> violating;
  for (const Polynomial& g : sub.reducedGenerators())
    if (!super.contains(g)) violating.push_back(g);
  if (violating.empty()) return std::nullopt;

  int maxDeg = 0;
  for (const Polynomial& g : sub.reducedGenerators()) maxDeg = std::max(maxDeg, g.totalDegree());

  // Minimal-degree violating monomial, if one exists.
  const int n = ambient->nvars();
  std::vector<int> exps(static_cast<size_t>(n), 0);
  for (int d = 0; d <= maxDeg; ++d) {
    std::optional<Polynomial> found;
    // Enumerate all exponent vectors of total degree d, lexicographically.
    std::function<bool(int, int)> scan = [&](int pos, int remaining) {
      if (pos == n - 1) {
        exps[static_cast<size_t>(pos)] = remaining;
        Polynomial m = Polynomial::monomial(ambient, Monomial(exps),
                                            FieldScalar::one(ambient->characteristic()));
        if (sub.contains(m) && !super.contains(m)) {
          found = m;
          return true;
        }
        return false;
      }
      for (int e = remaining; e >= 0; --e) {
        exps[static_cast<size_t>(pos)] = e;
        if (scan(pos + 1, remaining - e)) return true;
      }
      return false;
    };
    if (scan(0, d)) return found;
  }
  return violating.front();
}

namespace {

std::string idealStr(const QuotientIdeal& I) {
  std::string s = "(";
  const auto& gens = I.rGenerators();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].str();
  }
  return s + ")";
}

std::string ringDescOf(const ClosureSpec& spec, const std::vector<QuotientIdeal>& samples) {
  if (auto r = spec.ring()) return r->description();
  if (!samples.empty()) return samples.front().ring()->description();
  return "(no ring)";
}

CheckReport containmentReport(std::string property, std::string ringDesc, std::string specDesc,
                              std::string instance, const QuotientIdeal& sub,
                              const QuotientIdeal& super) {
  CheckReport report{std::move(property), std::move(ringDesc), std::move(specDesc),
                     std::move(instance), true, std::nullopt};
  if (auto w = firstViolation(sub, super)) {
    report.pass = false;
    report.witness = w->str();
  }
  return report;
}

} // namespace

CheckReport checkExtension(const ClosureSpec& spec, const std::vector<QuotientIdeal>& samples) {
  CheckReport report{"extension", ringDescOf(spec, samples), spec.description(),
                     std::to_string(samples.size()) + " sample ideals", true, std::nullopt};
  for (const QuotientIdeal& I : samples) {
    QuotientIdeal cl = closureOfIdeal(I, spec);
    for (const Polynomial& g : I.rGenerators()) {
      if (!cl.contains(g)) {
        report.pass = false;
        report.witness = g.str();
        report.instance = "I = " + idealStr(I);
        return report;
      }
    }
  }
  return report;
}

CheckReport checkIdempotence(const ClosureSpec& spec, const std::vector<QuotientIdeal>& samples) {
  CheckReport report{"idempotence", ringDescOf(spec, samples), spec.description(),
                     std::to_string(samples.size()) + " sample ideals", true, std::nullopt};
  for (const QuotientIdeal& I : samples) {
    QuotientIdeal cl = closureOfIdeal(I, spec);
    QuotientIdeal clcl = closureOfIdeal(cl, spec);
    if (!idealEquality(cl, clcl)) {
      report.pass = false;
      auto w = firstViolation(clcl, cl);
      report.witness = w ? w->str() : std::string("(no witness)");
      report.instance = "I = " + idealStr(I);
      return report;
    }
  }
  return report;
}

CheckReport checkOrderPreservation(
    const ClosureSpec& spec,
    const std::vector<std::pair<QuotientIdeal, QuotientIdeal>>& samplePairs) {
  std::vector<QuotientIdeal> firsts;
  for (const auto& [I, J] : samplePairs) {
    for (const Polynomial& g : I.rGenerators())
      if (!J.contains(g))
        throw std::invalid_argument(
            "checkOrderPreservation: malformed sample, I is not contained in I'");
    firsts.push_back(I);
  }
  CheckReport report{"order-preservation", ringDescOf(spec, firsts), spec.description(),
                     std::to_string(samplePairs.size()) + " nested pairs", true, std::nullopt};
  for (const auto& [I, J] : samplePairs) {
    QuotientIdeal clI = closureOfIdeal(I, spec);
    QuotientIdeal clJ = closureOfIdeal(J, spec);
    if (auto w = firstViolation(clI, clJ)) {
      report.pass = false;
      report.witness = w->str();
      report.instance = "I = " + idealStr(I) + ", I' = " + idealStr(J);
      return report;
    }
  }
  return report;
}

CheckReport checkResiduality(const ClosureSpec& spec, const QuotientIdeal& I,
                             const QuotientIdeal& J) {
  if (!I.ring()->sameStructure(*J.ring()))
    throw std::invalid_argument("checkResiduality: I and J over different rings");
  for (const Polynomial& g : J.rGenerators())
    if (!I.contains(g))
      throw std::invalid_argument("checkResiduality: J is not contained in I");
  if (J.isUnitIdeal())
    throw std::invalid_argument("checkResiduality: J must be a proper ideal");

  const QuotientRingPtr& R = I.ring();
  QuotientIdeal clInR = closureOfIdeal(I, spec);

  QuotientRingPtr S = QuotientRing::make(R->ambient(), J.lifted());
  ClosureSpec reducedSpec = spec.over(S);
  QuotientIdeal IinS = QuotientIdeal::fromPolynomials(S, I.rGenerators());
  QuotientIdeal clInS = closureOfIdeal(IinS, reducedSpec);

  CheckReport report{"residuality", R->description(), spec.description(),
                     "I = " + idealStr(I) + ", J = " + idealStr(J), true, std::nullopt};
  if (!idealEquality(clInR.lifted(), clInS.lifted())) {
    report.pass = false;
    // Compare as ambient ideals; wrap both sides over R for the witness scan.
    QuotientIdeal a = QuotientIdeal::fromPolynomials(R, clInR.lifted().generators());
    QuotientIdeal b = QuotientIdeal::fromPolynomials(R, clInS.lifted().generators());
    auto w = firstViolation(b, a);
    if (!w) w = firstViolation(a, b);
    report.witness = w ? w->str() : std::string("(no witness)");
  }
  return report;
}

namespace {

std::vector<Polynomial> frontSlice(const std::vector<Polynomial>& sop, int k) {
  return std::vector<Polynomial>(sop.begin(), sop.begin() + k);
}

void requireValidSop(const QuotientRingPtr& R, const std::vector<Polynomial>& sop) {
  if (!isSystemOfParameters(sop, R))
    throw std::invalid_argument("not a system of parameters for " + R->description());
}

std::string sopStr(const std::vector<Polynomial>& sop) {
  std::string s = "sop(";
  for (size_t i = 0; i < sop.size(); ++i) {
    if (i) s += ", ";
    s += sop[i].str();
  }
  return s + ")";
}

Polynomial power(const Polynomial& f, int e) {
  Polynomial r = Polynomial::constant(f.ring(), 1);
  for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

} // namespace

CheckReport checkColonCapturing(const QuotientRingPtr& R, const ClosureSpec& spec,
                                const std::vector<Polynomial>& sop, int k) {
  requireValidSop(R, sop);
  if (k < 0 || k >= static_cast<int>(sop.size()))
    throw std::invalid_argument("checkColonCapturing: need 0 <= k < |sop|");
  QuotientIdeal Ik = QuotientIdeal::fromPolynomials(R, frontSlice(sop, k));
  QuotientIdeal next = QuotientIdeal::fromPolynomials(R, {sop[static_cast<size_t>(k)]});
  QuotientIdeal lhs = idealColon(Ik, next);
  QuotientIdeal rhs = closureOfIdeal(Ik, spec);
  return containmentReport("colon-capturing", R->description(), spec.description(),
                           sopStr(sop) + ", k=" + std::to_string(k), lhs, rhs);
}

CheckReport checkStrongCCA(const QuotientRingPtr& R, const ClosureSpec& spec,
                           const std::vector<Polynomial>& sop, int k, int t, int a) {
  requireValidSop(R, sop);
  if (k < 1 || k > static_cast<int>(sop.size()))
    throw std::invalid_argument("checkStrongCCA: need 1 <= k <= |sop|");
  if (a < 0 || a >= t) throw std::invalid_argument("checkStrongCCA: need 0 <= a < t");
  std::vector<Polynomial> lhsGens = frontSlice(sop, k);
  lhsGens[0] = power(sop[0], t);
  std::vector<Polynomial> rhsGens = frontSlice(sop, k);
  rhsGens[0] = power(sop[0], t - a);
  QuotientIdeal lhsBase = QuotientIdeal::fromPolynomials(R, lhsGens);
  QuotientIdeal divisor = QuotientIdeal::fromPolynomials(R, {power(sop[0], a)});
  QuotientIdeal lhs = idealColon(lhsBase, divisor);
  QuotientIdeal rhs = closureOfIdeal(QuotientIdeal::fromPolynomials(R, rhsGens), spec);
  return containmentReport("strong-colon-capturing-A", R->description(), spec.description(),
                           sopStr(sop) + ", k=" + std::to_string(k) + ", t=" + std::to_string(t) +
                               ", a=" + std::to_string(a),
                           lhs, rhs);
}

CheckReport checkStrongCCB(const QuotientRingPtr& R, const ClosureSpec& spec,
                           const std::vector<Polynomial>& sop, int k) {
  requireValidSop(R, sop);
  if (k < 0 || k >= static_cast<int>(sop.size()))
    throw std::invalid_argument("checkStrongCCB: need 0 <= k < |sop|");
  QuotientIdeal Ik = QuotientIdeal::fromPolynomials(R, frontSlice(sop, k));
  QuotientIdeal cl = closureOfIdeal(Ik, spec);
  QuotientIdeal next = QuotientIdeal::fromPolynomials(R, {sop[static_cast<size_t>(k)]});
  QuotientIdeal lhs = idealColon(cl, next);
  return containmentReport("strong-colon-capturing-B", R->description(), spec.description(),
                           sopStr(sop) + ", k=" + std::to_string(k), lhs, cl);
}

} // namespace closurelab
