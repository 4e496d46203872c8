#include "closurelab/veronese.hpp"

#include <algorithm>
#include <stdexcept>

namespace closurelab {

std::string ExponentPair::str() const {
  if (a == 0 && b == 0) return "1";
  std::string s;
  if (a > 0) {
    s += "x";
    if (a > 1) s += "^" + std::to_string(a);
  }
  if (b > 0) {
    if (!s.empty()) s += "*";
    s += "y";
    if (b > 1) s += "^" + std::to_string(b);
  }
  return s;
}

SemigroupRing::SemigroupRing(int d) : d_(d) {
  if (d < 1) throw std::invalid_argument("SemigroupRing: degree must be >= 1");
}

namespace {

bool dividesPair(const ExponentPair& u, const ExponentPair& v) {
  return u.a <= v.a && u.b <= v.b;
}

bool pairLess(const ExponentPair& u, const ExponentPair& v) {
  if (u.degree() != v.degree()) return u.degree() < v.degree();
  return u.a > v.a; // within a degree: powers of x first
}

} // namespace

std::vector<ExponentPair> SemigroupRing::minimalize(std::vector<ExponentPair> raw) const {
  std::sort(raw.begin(), raw.end(), pairLess);
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<ExponentPair> out;
  for (const ExponentPair& u : raw) {
    bool redundant = false;
    for (const ExponentPair& v : out) {
      if (dividesPair(v, u)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(u);
  }
  return out;
}

std::vector<ExponentPair> SemigroupRing::truncateToSemigroup(std::vector<ExponentPair> raw) const {
  std::vector<ExponentPair> out;
  for (const ExponentPair& u : raw) {
    if (u.a < 0 || u.b < 0) throw std::invalid_argument("SemigroupRing: negative exponent");
    long r = u.degree() % d_;
    if (r == 0) {
      out.push_back(u);
      continue;
    }
    long need = d_ - r;
    for (long j = 0; j <= need; ++j)
      out.push_back(ExponentPair{u.a + j, u.b + (need - j)});
  }
  return out;
}

SemigroupIdeal SemigroupRing::ideal(std::vector<ExponentPair> generators) const {
  for (const ExponentPair& u : generators) {
    if (u.a < 0 || u.b < 0) throw std::invalid_argument("SemigroupRing: negative exponent");
    if (u.degree() % d_ != 0)
      throw std::invalid_argument("SemigroupRing: generator degree not divisible by d");
  }
  return SemigroupIdeal{minimalize(std::move(generators))};
}

bool SemigroupRing::contains(const SemigroupIdeal& I, const ExponentPair& m) const {
  return std::any_of(I.gens.begin(), I.gens.end(),
                     [&](const ExponentPair& g) { return dividesPair(g, m); });
}

bool SemigroupRing::equal(const SemigroupIdeal& I, const SemigroupIdeal& J) const {
  return I.gens == J.gens;
}

SemigroupIdeal SemigroupRing::product(const SemigroupIdeal& I, const SemigroupIdeal& J) const {
  std::vector<ExponentPair> raw;
  for (const ExponentPair& u : I.gens)
    for (const ExponentPair& v : J.gens) raw.push_back(ExponentPair{u.a + v.a, u.b + v.b});
  return SemigroupIdeal{minimalize(std::move(raw))};
}

SemigroupIdeal SemigroupRing::intersection(const SemigroupIdeal& I,
                                           const SemigroupIdeal& J) const {
  std::vector<ExponentPair> raw;
  for (const ExponentPair& u : I.gens)
    for (const ExponentPair& v : J.gens)
      raw.push_back(ExponentPair{std::max(u.a, v.a), std::max(u.b, v.b)});
  return SemigroupIdeal{minimalize(truncateToSemigroup(std::move(raw)))};
}

SemigroupIdeal SemigroupRing::colonByMonomial(const SemigroupIdeal& I,
                                              const ExponentPair& u) const {
  std::vector<ExponentPair> raw;
  for (const ExponentPair& g : I.gens)
    raw.push_back(ExponentPair{std::max(0L, g.a - u.a), std::max(0L, g.b - u.b)});
  return SemigroupIdeal{minimalize(truncateToSemigroup(std::move(raw)))};
}

SemigroupIdeal SemigroupRing::colon(const SemigroupIdeal& I, const SemigroupIdeal& J) const {
  if (J.gens.empty())
    throw std::invalid_argument("SemigroupRing: colon by the zero ideal is degenerate");
  bool first = true;
  SemigroupIdeal result;
  for (const ExponentPair& u : J.gens) {
    SemigroupIdeal c = colonByMonomial(I, u);
    result = first ? c : intersection(result, c);
    first = false;
  }
  return result;
}

std::string SemigroupRing::str(const SemigroupIdeal& I) const {
  std::string s = "(";
  for (size_t i = 0; i < I.gens.size(); ++i) {
    if (i) s += ", ";
    s += I.gens[i].str();
  }
  return s + ")";
}

std::string SemigroupRing::description() const {
  std::string s = "k[";
  for (int j = 0; j <= d_; ++j) {
    if (j) s += ",";
    s += ExponentPair{d_ - j, j}.str();
  }
  return s + "]";
}

RationalityVerdict veroneseRationality(int d, int i) {
  if (d < 1) throw std::invalid_argument("veroneseRationality: d must be >= 1");
  if (i < 0 || i > d - 1)
    throw std::invalid_argument("veroneseRationality: need 0 <= i <= d-1");
  SemigroupRing R(d);

  SemigroupIdeal I = R.ideal({{d, 0}, {0, d}});
  std::vector<ExponentPair> mi;
  for (int j = 0; j <= i; ++j) mi.push_back(ExponentPair{d - j, j});
  SemigroupIdeal Ii = R.ideal(std::move(mi));

  SemigroupIdeal closure = R.colon(R.product(I, Ii), Ii);

  RationalityVerdict verdict;
  verdict.ring = "Veronese(d=" + std::to_string(d) + ") = " + R.description();
  verdict.spec = "cl_M" + std::to_string(i);
  verdict.sop = {ExponentPair{d, 0}.str(), ExponentPair{0, d}.str()};
  verdict.closed = R.equal(closure, I);
  for (const ExponentPair& g : closure.gens) verdict.closureGenerators.push_back(g.str());
  if (!verdict.closed) {
    for (const ExponentPair& g : closure.gens) {
      if (!R.contains(I, g)) {
        verdict.witness = g.str();
        verdict.witnessInClosure = R.contains(closure, g);
        verdict.witnessInIdeal = R.contains(I, g);
        break;
      }
    }
  }
  verdict.assumptionNotes.push_back("M_i assumed maximal Cohen-Macaulay (input data, not verified)");
  verdict.assumptionNotes.push_back("semigroup path: exact exponent arithmetic, no Groebner step");
  return verdict;
}

} // namespace closurelab
