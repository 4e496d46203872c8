#ifndef CLOSURELAB_MODULE_HPP
#define CLOSURELAB_MODULE_HPP

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "closurelab/quotient.hpp"

namespace closurelab {

/// Element of a free module R^rank over a quotient ring, held as a vector of
/// ambient-ring coordinates.
class FreeModuleElement {
public:
  static FreeModuleElement zero(QuotientRingPtr ring, int rank);
  static FreeModuleElement basisVector(QuotientRingPtr ring, int rank, int index);
  static FreeModuleElement fromCoords(QuotientRingPtr ring, std::vector<Polynomial> coords);

  const QuotientRingPtr& ring() const { return ring_; }
  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<Polynomial>& coords() const { return coords_; }

  FreeModuleElement operator+(const FreeModuleElement& o) const;
  FreeModuleElement operator-(const FreeModuleElement& o) const;
  FreeModuleElement scaledBy(const Polynomial& f) const;

  /// All coordinates zero as ambient polynomials.
  bool isZeroRaw() const;
  /// Zero after reduction modulo the defining ideal.
  bool isZeroInModule() const;

  /// "[x^2, y]"
  std::string str() const;

private:
  FreeModuleElement(QuotientRingPtr ring, std::vector<Polynomial> coords)
      : ring_(std::move(ring)), coords_(std::move(coords)) {}
  QuotientRingPtr ring_;
  std::vector<Polynomial> coords_;
};

/// Submodule of R^rank with a cached module Groebner basis under the
/// position-over-term order (position priority e_0 > e_1 > ...). The basis is
/// computed for the lifted generators, i.e. the defining ideal times each
/// basis vector is included.
class Submodule {
public:
  static Submodule fromGenerators(QuotientRingPtr ring, int rank,
                                  std::vector<FreeModuleElement> generators);

  const QuotientRingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  const std::vector<FreeModuleElement>& generators() const { return gens_; }
  const std::vector<FreeModuleElement>& groebnerBasis() const;

private:
  struct Cache {
    std::once_flag once;
    std::vector<FreeModuleElement> basis;
  };
  Submodule(QuotientRingPtr ring, int rank, std::vector<FreeModuleElement> gens)
      : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)),
        cache_(std::make_shared<Cache>()) {}
  QuotientRingPtr ring_;
  int rank_;
  std::vector<FreeModuleElement> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Reduced module Groebner basis (position-over-term).
std::vector<FreeModuleElement> moduleGroebner(const Submodule& N);

/// True iff the module normal form of v against N's basis vanishes.
bool submoduleMembership(const FreeModuleElement& v, const Submodule& N);

/// {r in R : r*m in N}, via a syzygy computation on the augmented module.
/// m = 0 yields the unit ideal.
QuotientIdeal moduleColonIdeal(const Submodule& N, const FreeModuleElement& m);

/// Generating set of the syzygy module of `vectors` (elements of R^rank over
/// the ambient ring): tuples (c_0,...,c_{n-1}) with sum c_j * vectors[j] = 0.
std::vector<std::vector<Polynomial>> syzygyModule(const QuotientRingPtr& ring, int rank,
                                                  const std::vector<FreeModuleElement>& vectors);

/// B = coker(P) for an r x c presentation matrix P over R: r generators,
/// columns are the relations.
class PresentedModule {
public:
  static PresentedModule fromMatrix(QuotientRingPtr ring,
                                    std::vector<std::vector<Polynomial>> rows);
  /// Presentation of an ideal as a module: its generators with their syzygies.
  static PresentedModule fromIdeal(const QuotientIdeal& B);

  const QuotientRingPtr& ring() const { return ring_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  int relationCount() const;
  const std::vector<std::vector<Polynomial>>& rows() const { return rows_; }

  FreeModuleElement column(int j) const;
  Submodule columnSpan() const;
  /// Every entry is zero in R: B is free of rank `rank()`.
  bool isZeroMatrix() const;
  /// The columns span R^rank: B = 0.
  bool presentsZeroModule() const;

  /// "coker [[y]]"
  std::string description() const;

private:
  PresentedModule(QuotientRingPtr ring, std::vector<std::vector<Polynomial>> rows)
      : ring_(std::move(ring)), rows_(std::move(rows)) {}
  QuotientRingPtr ring_;
  std::vector<std::vector<Polynomial>> rows_;
};

} // namespace closurelab

#endif
