#include "closurelab/quotient.hpp"

#include <stdexcept>

namespace closurelab {

QuotientRingPtr QuotientRing::make(RingPtr ambient, Ideal defining) {
  if (!defining.ring()->sameStructure(*ambient))
    throw std::invalid_argument("QuotientRing: defining ideal from a different ring");
  if (defining.isUnitIdeal())
    throw std::invalid_argument("QuotientRing: defining ideal is the unit ideal (zero ring)");
  return QuotientRingPtr(new QuotientRing(std::move(ambient), std::move(defining)));
}

QuotientRingPtr QuotientRing::trivial(RingPtr ambient) {
  Ideal zero = Ideal::zeroIdeal(ambient);
  return make(std::move(ambient), std::move(zero));
}

bool QuotientRing::sameStructure(const QuotientRing& o) const {
  return ambient_->sameStructure(*o.ambient_) && idealEquality(defining_, o.defining_);
}

int QuotientRing::dimension() const {
  return *krullDimension(defining_); // defining is proper by construction
}

Polynomial QuotientRing::reduce(const Polynomial& f) const {
  return normalForm(f, defining_.groebnerBasis());
}

std::string QuotientRing::description() const {
  std::string s = ambient_->description();
  if (defining_.isZeroIdeal()) return s;
  s += "/(";
  const auto& gb = defining_.groebnerBasis();
  for (size_t i = 0; i < gb.size(); ++i) {
    if (i) s += ", ";
    s += gb[i].str();
  }
  s += ")";
  return s;
}

Ideal liftIdeal(const std::vector<Polynomial>& generators, const QuotientRing& R) {
  std::vector<Polynomial> gens = generators;
  const auto& def = R.defining().generators();
  gens.insert(gens.end(), def.begin(), def.end());
  return Ideal::fromGenerators(R.ambient(), std::move(gens));
}

QuotientIdeal QuotientIdeal::fromPolynomials(QuotientRingPtr ring,
                                             std::vector<Polynomial> generators) {
  Ideal lifted = liftIdeal(generators, *ring);
  return QuotientIdeal(std::move(ring), std::move(generators), std::move(lifted));
}

QuotientIdeal QuotientIdeal::zeroIdeal(QuotientRingPtr ring) {
  return fromPolynomials(std::move(ring), {});
}

QuotientIdeal QuotientIdeal::unitIdeal(QuotientRingPtr ring) {
  Polynomial one = Polynomial::constant(ring->ambient(), 1);
  return fromPolynomials(std::move(ring), {std::move(one)});
}

bool QuotientIdeal::isZeroIdeal() const {
  return idealEquality(lifted_, ring_->defining());
}

std::vector<Polynomial> QuotientIdeal::reducedGenerators() const {
  std::vector<Polynomial> out;
  for (const Polynomial& g : lifted_.groebnerBasis())
    if (!ring_->defining().contains(g)) out.push_back(g);
  return out;
}

namespace {

void requireSameRing(const QuotientIdeal& I, const QuotientIdeal& J) {
  if (!I.ring()->sameStructure(*J.ring()))
    throw std::invalid_argument("QuotientIdeal: mixed-ring operands");
}

QuotientIdeal wrap(const QuotientRingPtr& ring, const Ideal& ambientIdeal) {
  std::vector<Polynomial> rgens;
  for (const Polynomial& g : ambientIdeal.groebnerBasis())
    if (!ring->defining().contains(g)) rgens.push_back(g);
  return QuotientIdeal::fromPolynomials(ring, std::move(rgens));
}

} // namespace

bool idealMembership(const Polynomial& f, const QuotientIdeal& I) { return I.contains(f); }

QuotientIdeal idealSum(const QuotientIdeal& I, const QuotientIdeal& J) {
  requireSameRing(I, J);
  return wrap(I.ring(), idealSum(I.lifted(), J.lifted()));
}

QuotientIdeal idealProduct(const QuotientIdeal& I, const QuotientIdeal& J) {
  requireSameRing(I, J);
  Ideal prod = idealProduct(I.lifted(), J.lifted());
  return wrap(I.ring(), idealSum(prod, I.ring()->defining()));
}

QuotientIdeal idealIntersection(const QuotientIdeal& I, const QuotientIdeal& J) {
  requireSameRing(I, J);
  return wrap(I.ring(), idealIntersection(I.lifted(), J.lifted()));
}

QuotientIdeal idealColon(const QuotientIdeal& I, const QuotientIdeal& J) {
  requireSameRing(I, J);
  if (J.isZeroIdeal())
    throw std::invalid_argument("idealColon: colon by the zero R-ideal is degenerate");
  return wrap(I.ring(), idealColon(I.lifted(), J.lifted()));
}

bool idealEquality(const QuotientIdeal& I, const QuotientIdeal& J) {
  requireSameRing(I, J);
  return idealEquality(I.lifted(), J.lifted());
}

std::optional<int> krullDimension(const QuotientIdeal& I) {
  return krullDimension(I.lifted());
}

} // namespace closurelab
