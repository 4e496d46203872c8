#ifndef CLOSURELAB_POLYNOMIAL_HPP
#define CLOSURELAB_POLYNOMIAL_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "closurelab/field.hpp"
#include "closurelab/monomial.hpp"

namespace closurelab {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Ambient polynomial ring descriptor: coefficient field, named variables,
/// and the term order polynomials of this ring are normalized under.
class PolyRing {
public:
  static RingPtr make(std::uint32_t characteristic, std::vector<std::string> variables,
                      MonomialOrder order = MonomialOrder::grevlex());

  std::uint32_t characteristic() const { return p_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }
  const MonomialOrder& order() const { return order_; }

  /// Index of a variable name, -1 when absent.
  int variableIndex(std::string_view name) const;

  /// Same field, same variables, same order.
  bool sameStructure(const PolyRing& o) const;

  /// Same variables/field under a different term order.
  RingPtr withOrder(MonomialOrder order) const;

  /// "F32003[x,y]" or "Q[x,y]".
  std::string description() const;

private:
  PolyRing(std::uint32_t p, std::vector<std::string> vars, MonomialOrder order);
  std::uint32_t p_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

struct Term {
  Monomial mono;
  FieldScalar coeff;
};

/// Exact multivariate polynomial, terms strictly descending under the ring
/// order, no zero coefficients, no duplicate monomials. An empty term list
/// is the zero polynomial.
class Polynomial {
public:
  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, long value);
  static Polynomial constant(RingPtr ring, FieldScalar value);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial monomial(RingPtr ring, Monomial m, FieldScalar coeff);
  /// Normalizes: merges duplicates, drops zeros, sorts descending.
  static Polynomial fromTerms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  int totalDegree() const; // -1 for zero

  const Term& leadingTerm() const;
  const Monomial& leadingMonomial() const { return leadingTerm().mono; }
  const FieldScalar& leadingCoefficient() const { return leadingTerm().coeff; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const FieldScalar& c) const;
  Polynomial timesMonomial(const Monomial& m) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Re-express in a ring that shares the coefficient field; variables are
  /// matched by name and must all be present in the target.
  Polynomial mapToRing(const RingPtr& target) const;

  /// Canonical text: terms descending, explicit '^', '*' between factors,
  /// e.g. "x^2*y - 3*y^3".
  std::string str() const;

private:
  Polynomial(RingPtr ring, std::vector<Term> terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}
  RingPtr ring_;
  std::vector<Term> terms_;
};

void requireSameRing(const Polynomial& a, const Polynomial& b);

/// Parse error with 1-based location.
struct ParseError : std::runtime_error {
  ParseError(std::string msg, int errLine, int errColumn);
  std::string message;
  int line;
  int column;
};

/// Character cursor with 1-based line/column tracking, shared between the
/// polynomial grammar and the session-file grammar built on top of it.
struct TextCursor {
  std::string_view text;
  size_t pos = 0;
  int line = 1;
  int column = 1;

  bool done() const { return pos >= text.size(); }
  char current() const { return text[pos]; }
  void advance();
  void skipSpace();
};

/// Parses the canonical polynomial grammar (+, -, *, ^, parentheses, integer
/// and a/b rational literals, declared variable names). Throws ParseError.
Polynomial parsePolynomial(const RingPtr& ring, std::string_view text);

/// Cursor variant: consumes one polynomial expression and leaves the cursor
/// on the first character that cannot extend it.
Polynomial parsePolynomialAt(const RingPtr& ring, TextCursor& cursor);

} // namespace closurelab

#endif
