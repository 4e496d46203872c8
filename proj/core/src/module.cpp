#include "closurelab/module.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace closurelab {

FreeModuleElement FreeModuleElement::zero(QuotientRingPtr ring, int rank) {
  if (rank < 1) throw std::invalid_argument("FreeModuleElement: rank must be >= 1");
  std::vector<Polynomial> coords(static_cast<size_t>(rank), Polynomial::zero(ring->ambient()));
  return FreeModuleElement(std::move(ring), std::move(coords));
}

FreeModuleElement FreeModuleElement::basisVector(QuotientRingPtr ring, int rank, int index) {
  if (index < 0 || index >= rank)
    throw std::invalid_argument("FreeModuleElement: basis index out of range");
  FreeModuleElement e = zero(std::move(ring), rank);
  e.coords_[static_cast<size_t>(index)] = Polynomial::constant(e.ring_->ambient(), 1);
  return e;
}

FreeModuleElement FreeModuleElement::fromCoords(QuotientRingPtr ring,
                                                std::vector<Polynomial> coords) {
  if (coords.empty()) throw std::invalid_argument("FreeModuleElement: rank must be >= 1");
  for (const Polynomial& c : coords)
    if (!c.ring()->sameStructure(*ring->ambient()))
      throw std::invalid_argument("FreeModuleElement: coordinate from a different ring");
  return FreeModuleElement(std::move(ring), std::move(coords));
}

namespace {

void requireCompatible(const FreeModuleElement& a, const FreeModuleElement& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("FreeModuleElement: rank mismatch");
  if (!a.ring()->sameStructure(*b.ring()))
    throw std::invalid_argument("FreeModuleElement: mixed-ring operands");
}

} // namespace

FreeModuleElement FreeModuleElement::operator+(const FreeModuleElement& o) const {
  requireCompatible(*this, o);
  std::vector<Polynomial> out;
  out.reserve(coords_.size());
  for (size_t i = 0; i < coords_.size(); ++i) out.push_back(coords_[i] + o.coords_[i]);
  return FreeModuleElement(ring_, std::move(out));
}

FreeModuleElement FreeModuleElement::operator-(const FreeModuleElement& o) const {
  requireCompatible(*this, o);
  std::vector<Polynomial> out;
  out.reserve(coords_.size());
  for (size_t i = 0; i < coords_.size(); ++i) out.push_back(coords_[i] - o.coords_[i]);
  return FreeModuleElement(ring_, std::move(out));
}

FreeModuleElement FreeModuleElement::scaledBy(const Polynomial& f) const {
  std::vector<Polynomial> out;
  out.reserve(coords_.size());
  for (const Polynomial& c : coords_) out.push_back(c * f);
  return FreeModuleElement(ring_, std::move(out));
}

bool FreeModuleElement::isZeroRaw() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Polynomial& c) { return c.isZero(); });
}

bool FreeModuleElement::isZeroInModule() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [&](const Polynomial& c) { return ring_->isZeroInRing(c); });
}

std::string FreeModuleElement::str() const {
  std::string s = "[";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += coords_[i].str();
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Module Groebner machinery (position-over-term, e_0 > e_1 > ...).

namespace {

using Vec = std::vector<Polynomial>;

bool vecIsZero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& c) { return c.isZero(); });
}

// Index of the leading coordinate: the first nonzero one.
int leadComp(const Vec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].isZero()) return static_cast<int>(i);
  return -1;
}

Vec vecSub(const Vec& a, const Vec& b) {
  Vec out;
  out.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

Vec vecScaleMono(const Vec& v, const Monomial& m, const FieldScalar& c) {
  Vec out;
  out.reserve(v.size());
  for (const Polynomial& p : v) out.push_back(p.timesMonomial(m).scaled(c));
  return out;
}

Vec vecMonic(const Vec& v) {
  int c = leadComp(v);
  if (c < 0) return v;
  FieldScalar inv = v[static_cast<size_t>(c)].leadingCoefficient().inverse();
  Vec out;
  out.reserve(v.size());
  for (const Polynomial& p : v) out.push_back(p.scaled(inv));
  return out;
}

// Full module normal form.
Vec moduleNormalForm(Vec v, const std::vector<Vec>& basis, const RingPtr& ring) {
  Vec remainder(v.size(), Polynomial::zero(ring));
  while (!vecIsZero(v)) {
    int c = leadComp(v);
    auto& lead = v[static_cast<size_t>(c)];
    const Term lt = lead.leadingTerm();
    bool reduced = false;
    for (const Vec& w : basis) {
      int wc = leadComp(w);
      if (wc != c) continue;
      const Polynomial& wlead = w[static_cast<size_t>(wc)];
      if (wlead.leadingMonomial().divides(lt.mono)) {
        Monomial m = lt.mono.divideBy(wlead.leadingMonomial());
        FieldScalar s = lt.coeff / wlead.leadingCoefficient();
        v = vecSub(v, vecScaleMono(w, m, s));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Polynomial tp = Polynomial::monomial(ring, lt.mono, lt.coeff);
      remainder[static_cast<size_t>(c)] = remainder[static_cast<size_t>(c)] + tp;
      lead = lead - tp;
    }
  }
  return remainder;
}

Vec moduleSPair(const Vec& f, const Vec& g, int comp) {
  const Polynomial& fl = f[static_cast<size_t>(comp)];
  const Polynomial& gl = g[static_cast<size_t>(comp)];
  Monomial l = Monomial::lcm(fl.leadingMonomial(), gl.leadingMonomial());
  Vec a = vecScaleMono(f, l.divideBy(fl.leadingMonomial()), fl.leadingCoefficient().inverse());
  Vec b = vecScaleMono(g, l.divideBy(gl.leadingMonomial()), gl.leadingCoefficient().inverse());
  return vecSub(a, b);
}

// Canonical ordering of basis elements: by component, then ascending leading
// monomial.
void sortBasis(std::vector<Vec>& basis, const MonomialOrder& ord) {
  std::sort(basis.begin(), basis.end(), [&](const Vec& a, const Vec& b) {
    int ca = leadComp(a), cb = leadComp(b);
    if (ca != cb) return ca < cb;
    return ord.less(a[static_cast<size_t>(ca)].leadingMonomial(),
                    b[static_cast<size_t>(cb)].leadingMonomial());
  });
}

std::vector<Vec> moduleInterreduce(std::vector<Vec> basis, const RingPtr& ring) {
  std::erase_if(basis, vecIsZero);
  for (Vec& v : basis) v = vecMonic(v);
  sortBasis(basis, ring->order());
  std::vector<Vec> minimal;
  for (const Vec& v : basis) {
    int c = leadComp(v);
    bool redundant = false;
    for (const Vec& w : minimal) {
      if (leadComp(w) == c &&
          w[static_cast<size_t>(c)].leadingMonomial().divides(
              v[static_cast<size_t>(c)].leadingMonomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(v);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Vec> others;
      others.reserve(minimal.size() - 1);
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Vec r = vecMonic(moduleNormalForm(minimal[i], others, ring));
      if (!(r == minimal[i])) {
        minimal[i] = r;
        changed = true;
      }
    }
  }
  sortBasis(minimal, ring->order());
  return minimal;
}

// Buchberger for submodules of a free module. Only the chain criterion is
// applied: the coprimality criterion is unsound for module S-pairs.
std::vector<Vec> moduleBuchberger(std::vector<Vec> gens, const RingPtr& ring) {
  std::vector<Vec> basis;
  for (Vec& v : gens)
    if (!vecIsZero(v)) basis.push_back(vecMonic(v));
  if (basis.empty()) return {};

  using Pair = std::pair<size_t, size_t>;
  std::set<Pair> pending;
  auto addPairs = [&](size_t n) {
    for (size_t k = 0; k < n; ++k)
      if (leadComp(basis[k]) == leadComp(basis[n])) pending.insert({k, n});
  };
  for (size_t n = 0; n < basis.size(); ++n) addPairs(n);

  const MonomialOrder& ord = ring->order();
  while (!pending.empty()) {
    auto chosen = pending.begin();
    auto lcmOf = [&](const Pair& pr) {
      int c = leadComp(basis[pr.first]);
      return Monomial::lcm(basis[pr.first][static_cast<size_t>(c)].leadingMonomial(),
                           basis[pr.second][static_cast<size_t>(c)].leadingMonomial());
    };
    Monomial bestLcm = lcmOf(*chosen);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcmOf(*it);
      if (ord.less(l, bestLcm)) {
        bestLcm = l;
        chosen = it;
      }
    }
    auto [i, j] = *chosen;
    pending.erase(chosen);

    int c = leadComp(basis[i]);
    Monomial l = Monomial::lcm(basis[i][static_cast<size_t>(c)].leadingMonomial(),
                               basis[j][static_cast<size_t>(c)].leadingMonomial());
    bool chained = false;
    for (size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == i || k == j) continue;
      if (leadComp(basis[k]) != c) continue;
      if (!basis[k][static_cast<size_t>(c)].leadingMonomial().divides(l)) continue;
      Pair ik{std::min(i, k), std::max(i, k)};
      Pair jk{std::min(j, k), std::max(j, k)};
      if (!pending.count(ik) && !pending.count(jk)) chained = true;
    }
    if (chained) continue;

    Vec r = moduleNormalForm(moduleSPair(basis[i], basis[j], c), basis, ring);
    if (vecIsZero(r)) continue;
    basis.push_back(vecMonic(r));
    addPairs(basis.size() - 1);
  }

  return moduleInterreduce(std::move(basis), ring);
}

std::vector<Vec> liftedGenerators(const QuotientRingPtr& ring, int rank,
                                  const std::vector<FreeModuleElement>& gens) {
  std::vector<Vec> out;
  for (const FreeModuleElement& g : gens) out.push_back(g.coords());
  for (const Polynomial& d : ring->defining().generators()) {
    for (int i = 0; i < rank; ++i) {
      Vec v(static_cast<size_t>(rank), Polynomial::zero(ring->ambient()));
      v[static_cast<size_t>(i)] = d;
      out.push_back(std::move(v));
    }
  }
  return out;
}

} // namespace

Submodule Submodule::fromGenerators(QuotientRingPtr ring, int rank,
                                    std::vector<FreeModuleElement> generators) {
  if (rank < 1) throw std::invalid_argument("Submodule: rank must be >= 1");
  for (const FreeModuleElement& g : generators) {
    if (g.rank() != rank) throw std::invalid_argument("Submodule: generator rank mismatch");
    if (!g.ring()->sameStructure(*ring))
      throw std::invalid_argument("Submodule: generator from a different ring");
  }
  return Submodule(std::move(ring), rank, std::move(generators));
}

const std::vector<FreeModuleElement>& Submodule::groebnerBasis() const {
  std::call_once(cache_->once, [&] {
    std::vector<Vec> basis =
        moduleBuchberger(liftedGenerators(ring_, rank_, gens_), ring_->ambient());
    for (Vec& v : basis)
      cache_->basis.push_back(FreeModuleElement::fromCoords(ring_, std::move(v)));
  });
  return cache_->basis;
}

std::vector<FreeModuleElement> moduleGroebner(const Submodule& N) { return N.groebnerBasis(); }

bool submoduleMembership(const FreeModuleElement& v, const Submodule& N) {
  if (v.rank() != N.rank()) throw std::invalid_argument("submoduleMembership: rank mismatch");
  if (!v.ring()->sameStructure(*N.ring()))
    throw std::invalid_argument("submoduleMembership: mixed-ring operands");
  std::vector<Vec> basis;
  for (const FreeModuleElement& w : N.groebnerBasis()) basis.push_back(w.coords());
  return vecIsZero(moduleNormalForm(v.coords(), basis, N.ring()->ambient()));
}

std::vector<std::vector<Polynomial>> syzygyModule(const QuotientRingPtr& ring, int rank,
                                                  const std::vector<FreeModuleElement>& vectors) {
  const RingPtr& ambient = ring->ambient();
  const size_t n = vectors.size();
  const int augRank = rank + static_cast<int>(n);
  std::vector<Vec> augmented;
  augmented.reserve(n);
  for (size_t j = 0; j < n; ++j) {
    if (vectors[j].rank() != rank)
      throw std::invalid_argument("syzygyModule: rank mismatch");
    Vec w(static_cast<size_t>(augRank), Polynomial::zero(ambient));
    for (int i = 0; i < rank; ++i) w[static_cast<size_t>(i)] = vectors[j].coords()[static_cast<size_t>(i)];
    w[static_cast<size_t>(rank) + j] = Polynomial::constant(ambient, 1);
    augmented.push_back(std::move(w));
  }
  std::vector<Vec> basis = moduleBuchberger(std::move(augmented), ambient);
  std::vector<std::vector<Polynomial>> syzygies;
  for (const Vec& v : basis) {
    if (leadComp(v) < rank) continue; // touches the leading block
    std::vector<Polynomial> tuple(v.begin() + rank, v.end());
    syzygies.push_back(std::move(tuple));
  }
  return syzygies;
}

QuotientIdeal moduleColonIdeal(const Submodule& N, const FreeModuleElement& m) {
  if (m.rank() != N.rank()) throw std::invalid_argument("moduleColonIdeal: rank mismatch");
  if (!m.ring()->sameStructure(*N.ring()))
    throw std::invalid_argument("moduleColonIdeal: mixed-ring operands");
  if (m.isZeroInModule()) return QuotientIdeal::unitIdeal(N.ring());

  std::vector<FreeModuleElement> vectors;
  vectors.push_back(m);
  for (const Vec& v : liftedGenerators(N.ring(), N.rank(), N.generators()))
    vectors.push_back(FreeModuleElement::fromCoords(N.ring(), v));

  std::vector<Polynomial> colonGens;
  for (const auto& tuple : syzygyModule(N.ring(), N.rank(), vectors))
    if (!tuple[0].isZero()) colonGens.push_back(tuple[0]);
  return QuotientIdeal::fromPolynomials(N.ring(), std::move(colonGens));
}

// ---------------------------------------------------------------------------
// PresentedModule

PresentedModule PresentedModule::fromMatrix(QuotientRingPtr ring,
                                            std::vector<std::vector<Polynomial>> rows) {
  if (rows.empty()) throw std::invalid_argument("PresentedModule: matrix needs >= 1 row");
  const size_t cols = rows[0].size();
  for (const auto& row : rows) {
    if (row.size() != cols)
      throw std::invalid_argument("PresentedModule: matrix rows of unequal length");
    for (const Polynomial& e : row)
      if (!e.ring()->sameStructure(*ring->ambient()))
        throw std::invalid_argument("PresentedModule: entry from a different ring");
  }
  return PresentedModule(std::move(ring), std::move(rows));
}

PresentedModule PresentedModule::fromIdeal(const QuotientIdeal& B) {
  const QuotientRingPtr& ring = B.ring();
  std::vector<Polynomial> gens;
  for (const Polynomial& g : B.rGenerators())
    if (!ring->isZeroInRing(g)) gens.push_back(g);
  if (gens.empty())
    throw std::invalid_argument("PresentedModule: cannot present the zero ideal");
  const size_t k = gens.size();

  // Syzygies over R of the generator tuple, including those induced by the
  // defining ideal; only the generator coordinates are kept.
  std::vector<Polynomial> all = gens;
  for (const Polynomial& d : ring->defining().generators()) all.push_back(d);
  std::vector<FreeModuleElement> vectors;
  for (const Polynomial& f : all)
    vectors.push_back(FreeModuleElement::fromCoords(ring, {f}));
  auto syz = syzygyModule(ring, 1, vectors);

  std::vector<std::vector<Polynomial>> rows(
      k, std::vector<Polynomial>(syz.size(), Polynomial::zero(ring->ambient())));
  for (size_t j = 0; j < syz.size(); ++j)
    for (size_t i = 0; i < k; ++i) rows[i][j] = syz[j][i];
  return fromMatrix(ring, std::move(rows));
}

int PresentedModule::relationCount() const {
  return rows_.empty() ? 0 : static_cast<int>(rows_[0].size());
}

FreeModuleElement PresentedModule::column(int j) const {
  if (j < 0 || j >= relationCount())
    throw std::invalid_argument("PresentedModule: column index out of range");
  std::vector<Polynomial> coords;
  coords.reserve(rows_.size());
  for (const auto& row : rows_) coords.push_back(row[static_cast<size_t>(j)]);
  return FreeModuleElement::fromCoords(ring_, std::move(coords));
}

Submodule PresentedModule::columnSpan() const {
  std::vector<FreeModuleElement> cols;
  for (int j = 0; j < relationCount(); ++j) cols.push_back(column(j));
  return Submodule::fromGenerators(ring_, rank(), std::move(cols));
}

bool PresentedModule::isZeroMatrix() const {
  for (const auto& row : rows_)
    for (const Polynomial& e : row)
      if (!ring_->isZeroInRing(e)) return false;
  return true;
}

bool PresentedModule::presentsZeroModule() const {
  Submodule span = columnSpan();
  for (int i = 0; i < rank(); ++i)
    if (!submoduleMembership(FreeModuleElement::basisVector(ring_, rank(), i), span))
      return false;
  return true;
}

std::string PresentedModule::description() const {
  std::string s = "coker [";
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ", ";
    s += "[";
    for (size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) s += ", ";
      s += rows_[i][j].str();
    }
    s += "]";
  }
  return s + "]";
}

} // namespace closurelab
