#include "closurelab/field.hpp"

#include <stdexcept>

namespace closurelab {

bool isPrime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

long mod(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return r;
}

// Inverse mod p via extended Euclid.
long invMod(long a, std::uint32_t p) {
  long t = 0, newT = 1;
  long r = static_cast<long>(p), newR = a;
  while (newR != 0) {
    long q = r / newR;
    long tmp = t - q * newT;
    t = newT;
    newT = tmp;
    tmp = r - q * newR;
    r = newR;
    newR = tmp;
  }
  if (r != 1) throw std::invalid_argument("FieldScalar: not invertible mod p");
  return mod(t, p);
}

} // namespace

FieldScalar FieldScalar::zero(std::uint32_t characteristic) {
  return ofInt(0, characteristic);
}

FieldScalar FieldScalar::one(std::uint32_t characteristic) {
  return ofInt(1, characteristic);
}

FieldScalar FieldScalar::ofInt(long value, std::uint32_t characteristic) {
  if (characteristic == 0) return FieldScalar(mpq_class(value));
  if (characteristic >= (1u << 31) || !isPrime(characteristic))
    throw std::invalid_argument("FieldScalar: characteristic must be 0 or a prime < 2^31");
  return FieldScalar(characteristic, mod(value, characteristic));
}

FieldScalar FieldScalar::ofRational(mpq_class value) {
  value.canonicalize();
  return FieldScalar(std::move(value));
}

bool FieldScalar::isZero() const {
  return p_ == 0 ? rat_ == 0 : rep_ == 0;
}

bool FieldScalar::isOne() const {
  return p_ == 0 ? rat_ == 1 : rep_ == 1;
}

void FieldScalar::requireSameField(const FieldScalar& o) const {
  if (p_ != o.p_)
    throw std::invalid_argument("FieldScalar: coefficient field mismatch");
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  requireSameField(o);
  if (p_ == 0) return FieldScalar(mpq_class(rat_ + o.rat_));
  return FieldScalar(p_, mod(rep_ + o.rep_, p_));
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
  requireSameField(o);
  if (p_ == 0) return FieldScalar(mpq_class(rat_ - o.rat_));
  return FieldScalar(p_, mod(rep_ - o.rep_, p_));
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  requireSameField(o);
  if (p_ == 0) return FieldScalar(mpq_class(rat_ * o.rat_));
  return FieldScalar(p_, mod(rep_ * o.rep_, p_));
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
  return *this * o.inverse();
}

FieldScalar FieldScalar::operator-() const {
  if (p_ == 0) return FieldScalar(mpq_class(-rat_));
  return FieldScalar(p_, mod(-rep_, p_));
}

FieldScalar FieldScalar::inverse() const {
  if (isZero()) throw std::invalid_argument("FieldScalar: division by zero");
  if (p_ == 0) return FieldScalar(mpq_class(1 / rat_));
  return FieldScalar(p_, invMod(rep_, p_));
}

bool FieldScalar::operator==(const FieldScalar& o) const {
  if (p_ != o.p_) return false;
  return p_ == 0 ? rat_ == o.rat_ : rep_ == o.rep_;
}

long FieldScalar::residue() const {
  if (p_ == 0) throw std::invalid_argument("FieldScalar: residue() needs a prime field");
  return rep_;
}

const mpq_class& FieldScalar::rational() const {
  if (p_ != 0) throw std::invalid_argument("FieldScalar: rational() needs characteristic 0");
  return rat_;
}

std::string FieldScalar::str() const {
  if (p_ == 0) return rat_.get_str();
  return std::to_string(rep_);
}

} // namespace closurelab
