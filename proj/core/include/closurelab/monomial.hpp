#ifndef CLOSURELAB_MONOMIAL_HPP
#define CLOSURELAB_MONOMIAL_HPP

#include <string>
#include <vector>

namespace closurelab {

/// Exponent vector of fixed length (the number of ring variables).
class Monomial {
public:
  explicit Monomial(std::vector<int> exponents);
  static Monomial unit(int nvars);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int exponent(int i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  int totalDegree() const;
  bool isUnit() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  /// Componentwise max(0, a - b).
  Monomial colonBy(const Monomial& o) const;
  /// Exact quotient; throws unless o divides *this.
  Monomial divideBy(const Monomial& o) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

private:
  std::vector<int> exps_;
};

enum class OrderKind { Lex, GrevLex, Elimination };

/// Term order: lexicographic, degree-reverse-lexicographic, or a block
/// (elimination) order whose leading block of variables is compared first.
class MonomialOrder {
public:
  static MonomialOrder lex();
  static MonomialOrder grevlex();
  static MonomialOrder elimination(int blockSize);

  OrderKind kind() const { return kind_; }
  int blockSize() const { return block_; }

  /// > 0 iff a > b under this order.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && block_ == o.block_;
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

  std::string str() const;

private:
  MonomialOrder(OrderKind k, int block) : kind_(k), block_(block) {}
  OrderKind kind_;
  int block_;
};

} // namespace closurelab

#endif
