#ifndef CLOSURELAB_QUOTIENT_HPP
#define CLOSURELAB_QUOTIENT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "closurelab/groebner.hpp"

namespace closurelab {

class QuotientRing;
using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

/// R = ambient/(defining). Residue-ring arithmetic lifts to the ambient ring:
/// every R-ideal is represented by its full preimage, an ambient ideal
/// containing the defining ideal.
class QuotientRing {
public:
  static QuotientRingPtr make(RingPtr ambient, Ideal defining);
  /// The ambient polynomial ring itself (zero defining ideal).
  static QuotientRingPtr trivial(RingPtr ambient);

  const RingPtr& ambient() const { return ambient_; }
  const Ideal& defining() const { return defining_; }

  bool sameStructure(const QuotientRing& o) const;

  /// Krull dimension of R.
  int dimension() const;

  /// Canonical residue representative (normal form against the defining
  /// basis).
  Polynomial reduce(const Polynomial& f) const;
  bool isZeroInRing(const Polynomial& f) const { return reduce(f).isZero(); }

  /// "F32003[x,y]/(x^2*y)".
  std::string description() const;

private:
  QuotientRing(RingPtr ambient, Ideal defining)
      : ambient_(std::move(ambient)), defining_(std::move(defining)) {}
  RingPtr ambient_;
  Ideal defining_;
};

/// Ambient ideal = (generators) + defining; the canonical lift of the
/// R-ideal generated by `generators`.
Ideal liftIdeal(const std::vector<Polynomial>& generators, const QuotientRing& R);

/// Ideal of a quotient ring, held as its lifted ambient ideal together with
/// the R-generators it was built from.
class QuotientIdeal {
public:
  static QuotientIdeal fromPolynomials(QuotientRingPtr ring, std::vector<Polynomial> generators);
  static QuotientIdeal zeroIdeal(QuotientRingPtr ring);
  static QuotientIdeal unitIdeal(QuotientRingPtr ring);

  const QuotientRingPtr& ring() const { return ring_; }
  /// The generators this ideal was constructed from (ambient representatives).
  const std::vector<Polynomial>& rGenerators() const { return rgens_; }
  const Ideal& lifted() const { return lifted_; }

  bool contains(const Polynomial& f) const { return lifted_.contains(f); }
  bool isZeroIdeal() const;
  bool isUnitIdeal() const { return lifted_.isUnitIdeal(); }

  /// Reduced ambient Groebner generators with the defining part dropped:
  /// a canonical R-side generating set.
  std::vector<Polynomial> reducedGenerators() const;

private:
  QuotientIdeal(QuotientRingPtr ring, std::vector<Polynomial> rgens, Ideal lifted)
      : ring_(std::move(ring)), rgens_(std::move(rgens)), lifted_(std::move(lifted)) {}
  QuotientRingPtr ring_;
  std::vector<Polynomial> rgens_;
  Ideal lifted_;
};

bool idealMembership(const Polynomial& f, const QuotientIdeal& I);
QuotientIdeal idealSum(const QuotientIdeal& I, const QuotientIdeal& J);
QuotientIdeal idealProduct(const QuotientIdeal& I, const QuotientIdeal& J);
QuotientIdeal idealIntersection(const QuotientIdeal& I, const QuotientIdeal& J);
/// {r in R : r*J contained in I}. Rejects J = 0 (as an R-ideal).
QuotientIdeal idealColon(const QuotientIdeal& I, const QuotientIdeal& J);
bool idealEquality(const QuotientIdeal& I, const QuotientIdeal& J);
/// Krull dimension of R/I.
std::optional<int> krullDimension(const QuotientIdeal& I);

} // namespace closurelab

#endif
