#include "closurelab/rationality.hpp"

#include <stdexcept>

namespace closurelab {

bool isSystemOfParameters(const std::vector<Polynomial>& elems, const QuotientRingPtr& R) {
  int d = R->dimension();
  if (d == 0)
    throw std::invalid_argument(
        "isSystemOfParameters: zero-dimensional ring; the empty sop is trivially valid");
  if (static_cast<int>(elems.size()) != d) return false;
  std::optional<int> dim = krullDimension(liftIdeal(elems, *R));
  return dim.has_value() && *dim == 0;
}

RationalityVerdict isClRational(const QuotientRingPtr& R, const ClosureSpec& spec,
                                const std::vector<Polynomial>& sop) {
  if (!isSystemOfParameters(sop, R))
    throw std::invalid_argument("isClRational: not a system of parameters for " +
                                R->description());
  QuotientIdeal I = QuotientIdeal::fromPolynomials(R, sop);
  QuotientIdeal cl = closureOfIdeal(I, spec);

  RationalityVerdict verdict;
  verdict.ring = R->description();
  verdict.spec = spec.description();
  for (const Polynomial& x : sop) verdict.sop.push_back(x.str());
  verdict.closed = idealEquality(cl, I);
  for (const Polynomial& g : cl.reducedGenerators()) verdict.closureGenerators.push_back(g.str());
  if (!verdict.closed) {
    auto w = firstViolation(cl, I);
    if (w) {
      verdict.witness = w->str();
      verdict.witnessInClosure = cl.contains(*w);
      verdict.witnessInIdeal = I.contains(*w);
    }
  }
  if (spec.kind() != ClosureSpec::Kind::Trivial)
    verdict.assumptionNotes.push_back("B assumed maximal Cohen-Macaulay (input data, not verified)");
  return verdict;
}

std::vector<std::pair<int, bool>> checkPowerFamilyClosed(const QuotientRingPtr& R,
                                                         const ClosureSpec& spec,
                                                         const std::vector<Polynomial>& sop,
                                                         int tMax) {
  if (!isSystemOfParameters(sop, R))
    throw std::invalid_argument("checkPowerFamilyClosed: not a system of parameters");
  if (tMax < 1) throw std::invalid_argument("checkPowerFamilyClosed: tMax must be >= 1");
  std::vector<std::pair<int, bool>> out;
  for (int t = 1; t <= tMax; ++t) {
    std::vector<Polynomial> gens;
    for (const Polynomial& x : sop) {
      Polynomial p = Polynomial::constant(x.ring(), 1);
      for (int e = 0; e < t; ++e) p = p * x;
      gens.push_back(p);
    }
    out.emplace_back(t, isIdealClosed(QuotientIdeal::fromPolynomials(R, gens), spec));
  }
  return out;
}

QuotientIdeal finitisticTestIdealSample(const QuotientRingPtr& R, const ClosureSpec& spec,
                                        const std::vector<QuotientIdeal>& ideals) {
  if (ideals.empty())
    throw std::invalid_argument("finitisticTestIdealSample: empty sample");
  bool first = true;
  QuotientIdeal result = QuotientIdeal::unitIdeal(R);
  for (const QuotientIdeal& I : ideals) {
    if (!I.ring()->sameStructure(*R))
      throw std::invalid_argument("finitisticTestIdealSample: sample over a different ring");
    QuotientIdeal cl = closureOfIdeal(I, spec);
    QuotientIdeal colon = idealColon(I, cl);
    result = first ? colon : idealIntersection(result, colon);
    first = false;
  }
  return result;
}

} // namespace closurelab
