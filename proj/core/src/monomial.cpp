#include "closurelab/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace closurelab {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
}

Monomial Monomial::unit(int nvars) {
  return Monomial(std::vector<int>(static_cast<size_t>(nvars), 0));
}

int Monomial::totalDegree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::isUnit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) throw std::invalid_argument("Monomial: arity mismatch");
  for (int i = 0; i < nvars(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (nvars() != o.nvars()) throw std::invalid_argument("Monomial: arity mismatch");
  std::vector<int> e(exps_);
  for (int i = 0; i < nvars(); ++i) e[i] += o.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::colonBy(const Monomial& o) const {
  if (nvars() != o.nvars()) throw std::invalid_argument("Monomial: arity mismatch");
  std::vector<int> e(exps_);
  for (int i = 0; i < nvars(); ++i) e[i] = std::max(0, e[i] - o.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::divideBy(const Monomial& o) const {
  if (!o.divides(*this)) throw std::invalid_argument("Monomial: not divisible");
  std::vector<int> e(exps_);
  for (int i = 0; i < nvars(); ++i) e[i] -= o.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("Monomial: arity mismatch");
  std::vector<int> e(a.exps_);
  for (int i = 0; i < a.nvars(); ++i) e[i] = std::max(e[i], b.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("Monomial: arity mismatch");
  for (int i = 0; i < a.nvars(); ++i)
    if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
  return true;
}

MonomialOrder MonomialOrder::lex() { return MonomialOrder(OrderKind::Lex, 0); }
MonomialOrder MonomialOrder::grevlex() { return MonomialOrder(OrderKind::GrevLex, 0); }

MonomialOrder MonomialOrder::elimination(int blockSize) {
  if (blockSize < 1) throw std::invalid_argument("MonomialOrder: elimination block must be >= 1");
  return MonomialOrder(OrderKind::Elimination, blockSize);
}

namespace {

int lexCompare(const std::vector<int>& a, const std::vector<int>& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

// a > b iff deg a > deg b, or degrees tie and the last unequal exponent of a
// is the smaller one.
int grevlexCompare(const std::vector<int>& a, const std::vector<int>& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("MonomialOrder: arity mismatch");
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  const int n = a.nvars();
  switch (kind_) {
    case OrderKind::Lex:
      return lexCompare(ea, eb, 0, n);
    case OrderKind::GrevLex:
      return grevlexCompare(ea, eb, 0, n);
    case OrderKind::Elimination: {
      if (block_ >= n)
        return grevlexCompare(ea, eb, 0, n);
      int c = grevlexCompare(ea, eb, 0, block_);
      if (c != 0) return c;
      return grevlexCompare(ea, eb, block_, n);
    }
  }
  return 0;
}

std::string MonomialOrder::str() const {
  switch (kind_) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrevLex: return "grevlex";
    case OrderKind::Elimination: return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

} // namespace closurelab
