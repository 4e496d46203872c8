#ifndef CLOSURELAB_FIELD_HPP
#define CLOSURELAB_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace closurelab {

/// True for primes in [2, 2^31). Deterministic trial division.
bool isPrime(std::uint32_t n);

/// Exact coefficient: an element of F_p (p prime) or of Q when the
/// characteristic is 0. All arithmetic is exact; mixing characteristics
/// throws std::invalid_argument.
class FieldScalar {
public:
  FieldScalar() = default; // 0 in Q

  static FieldScalar zero(std::uint32_t characteristic);
  static FieldScalar one(std::uint32_t characteristic);
  static FieldScalar ofInt(long value, std::uint32_t characteristic);
  static FieldScalar ofRational(mpq_class value);

  std::uint32_t characteristic() const { return p_; }
  bool isZero() const;
  bool isOne() const;

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;
  FieldScalar operator-() const;
  FieldScalar inverse() const; // throws on zero

  bool operator==(const FieldScalar& o) const;
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }

  /// Canonical residue in [0, p) for prime fields.
  long residue() const;
  /// Underlying rational for characteristic 0.
  const mpq_class& rational() const;

  /// "3", "-1/2", "32002". Prime-field values print their canonical residue.
  std::string str() const;

private:
  FieldScalar(std::uint32_t p, long rep) : p_(p), rep_(rep) {}
  explicit FieldScalar(mpq_class v) : rat_(std::move(v)) {}
  void requireSameField(const FieldScalar& o) const;

  std::uint32_t p_ = 0; // 0 means Q
  long rep_ = 0;        // residue in [0, p) when p_ > 0
  mpq_class rat_ = 0;   // value when p_ == 0
};

} // namespace closurelab

#endif
