#ifndef CLOSURELAB_VERONESE_HPP
#define CLOSURELAB_VERONESE_HPP

#include <string>
#include <vector>

#include "closurelab/rationality.hpp"

namespace closurelab {

struct ExponentPair {
  long a = 0;
  long b = 0;
  bool operator==(const ExponentPair&) const = default;
  long degree() const { return a + b; }
  std::string str() const; // "x^3*y" style
};

/// Monomial ideal of the degree-d Veronese semigroup ring, stored as its
/// minimal generator set; every generator has total degree divisible by d.
struct SemigroupIdeal {
  std::vector<ExponentPair> gens; // minimal, sorted
};

/// Exact exponent arithmetic in R = k[x^d, x^{d-1}y, ..., y^d]: membership is
/// divisibility by a generator (quotients stay in the semigroup since both
/// degrees are multiples of d).
class SemigroupRing {
public:
  explicit SemigroupRing(int d);
  int degree() const { return d_; }

  SemigroupIdeal ideal(std::vector<ExponentPair> generators) const;
  bool contains(const SemigroupIdeal& I, const ExponentPair& m) const;
  bool equal(const SemigroupIdeal& I, const SemigroupIdeal& J) const;
  SemigroupIdeal product(const SemigroupIdeal& I, const SemigroupIdeal& J) const;
  SemigroupIdeal intersection(const SemigroupIdeal& I, const SemigroupIdeal& J) const;
  /// (I : u) as an R-module: the ambient monomial colon truncated back into
  /// the semigroup.
  SemigroupIdeal colonByMonomial(const SemigroupIdeal& I, const ExponentPair& u) const;
  SemigroupIdeal colon(const SemigroupIdeal& I, const SemigroupIdeal& J) const;

  /// Generators whose degree is not divisible by d are replaced by their
  /// products with all monomials of the complementary degree.
  std::vector<ExponentPair> truncateToSemigroup(std::vector<ExponentPair> raw) const;

  std::string str(const SemigroupIdeal& I) const;
  std::string description() const;

private:
  std::vector<ExponentPair> minimalize(std::vector<ExponentPair> raw) const;
  int d_;
};

/// Rationality decision for the degree-d Veronese subring of k[[x,y]]: is the
/// parameter ideal (x^d, y^d) closed under cl_{M_i}, M_i the module of
/// degree-i monomials viewed as the ideal (x^d, x^{d-1}y, ..., x^{d-i}y^i)?
/// Pure exponent arithmetic; requires 1 <= d and 0 <= i <= d-1.
RationalityVerdict veroneseRationality(int d, int i);

} // namespace closurelab

#endif
