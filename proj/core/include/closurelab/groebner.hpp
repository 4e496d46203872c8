#ifndef CLOSURELAB_GROEBNER_HPP
#define CLOSURELAB_GROEBNER_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "closurelab/polynomial.hpp"

namespace closurelab {

/// Full multivariate division remainder of f against a divisor list. Unique
/// when the divisors form a Groebner basis under the active order.
Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& basis);

/// Division with a single divisor and zero remainder required; returns the
/// quotient. Throws std::invalid_argument when the division is not exact.
Polynomial divideExact(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis of the ideal generated by `generators` under
/// `order` (Buchberger with the coprimality and chain pair criteria).
/// Canonical output: monic, interreduced, sorted ascending by leading
/// monomial. The zero ideal yields {} and the unit ideal {1}. When `order`
/// differs from the generators' ring order the result lives in the
/// order-adjusted ring.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators,
                                   const MonomialOrder& order);

/// Finitely generated ideal of an ambient polynomial ring with a lazily
/// computed (cached, immutable) reduced Groebner basis.
class Ideal {
public:
  static Ideal fromGenerators(RingPtr ring, std::vector<Polynomial> generators);
  /// Generators already known to be a reduced Groebner basis.
  static Ideal fromGroebner(RingPtr ring, std::vector<Polynomial> basis);
  static Ideal zeroIdeal(RingPtr ring);
  static Ideal unitIdeal(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Polynomial>& groebnerBasis() const;

  bool isZeroIdeal() const { return groebnerBasis().empty(); }
  bool isUnitIdeal() const;
  bool contains(const Polynomial& f) const;

private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };
  Ideal(RingPtr ring, std::vector<Polynomial> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {}
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool idealMembership(const Polynomial& f, const Ideal& I);
Ideal idealSum(const Ideal& I, const Ideal& J);
Ideal idealProduct(const Ideal& I, const Ideal& J);
/// Exact intersection via an elimination variable.
Ideal idealIntersection(const Ideal& I, const Ideal& J);
/// {r : r*J contained in I}. Rejects J = 0.
Ideal idealColon(const Ideal& I, const Ideal& J);
bool idealEquality(const Ideal& I, const Ideal& J);

/// Krull dimension of R/I, computed from maximal independent variable sets
/// of the leading-term ideal. The unit ideal yields nullopt.
std::optional<int> krullDimension(const Ideal& I);

} // namespace closurelab

#endif
