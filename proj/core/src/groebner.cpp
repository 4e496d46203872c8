#include "closurelab/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace closurelab {

Polynomial normalForm(const Polynomial& f, const std::vector<Polynomial>& basis) {
  for (const Polynomial& g : basis) {
    requireSameRing(f, g);
    if (g.isZero()) throw std::invalid_argument("normalForm: zero divisor polynomial");
  }
  const RingPtr& ring = f.ring();
  Polynomial p = f;
  std::vector<Term> remainder;
  while (!p.isZero()) {
    const Term& lt = p.leadingTerm();
    bool reduced = false;
    for (const Polynomial& g : basis) {
      if (g.leadingMonomial().divides(lt.mono)) {
        Monomial m = lt.mono.divideBy(g.leadingMonomial());
        FieldScalar c = lt.coeff / g.leadingCoefficient();
        p = p - g.timesMonomial(m).scaled(c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(lt);
      p = p - Polynomial::monomial(ring, lt.mono, lt.coeff);
    }
  }
  return Polynomial::fromTerms(ring, std::move(remainder));
}

Polynomial divideExact(const Polynomial& f, const Polynomial& g) {
  requireSameRing(f, g);
  if (g.isZero()) throw std::invalid_argument("divideExact: division by zero");
  const RingPtr& ring = f.ring();
  Polynomial p = f;
  std::vector<Term> quotient;
  while (!p.isZero()) {
    const Term& lt = p.leadingTerm();
    if (!g.leadingMonomial().divides(lt.mono))
      throw std::invalid_argument("divideExact: division is not exact");
    Monomial m = lt.mono.divideBy(g.leadingMonomial());
    FieldScalar c = lt.coeff / g.leadingCoefficient();
    quotient.push_back(Term{m, c});
    p = p - g.timesMonomial(m).scaled(c);
  }
  return Polynomial::fromTerms(ring, std::move(quotient));
}

namespace {

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = Monomial::lcm(f.leadingMonomial(), g.leadingMonomial());
  Polynomial a = f.timesMonomial(l.divideBy(f.leadingMonomial())).scaled(f.leadingCoefficient().inverse());
  Polynomial b = g.timesMonomial(l.divideBy(g.leadingMonomial())).scaled(g.leadingCoefficient().inverse());
  return a - b;
}

// Minimal basis, then tail-reduce to the unique reduced basis.
std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const MonomialOrder& ord) {
  std::erase_if(basis, [](const Polynomial& p) { return p.isZero(); });
  for (Polynomial& p : basis) p = p.monic();
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leadingMonomial(), b.leadingMonomial());
  });
  std::vector<Polynomial> minimal;
  for (const Polynomial& p : basis) {
    bool redundant = false;
    for (const Polynomial& q : minimal) {
      if (q.leadingMonomial().divides(p.leadingMonomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(p);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = normalForm(minimal[i], others).monic();
      if (r != minimal[i]) {
        minimal[i] = r;
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leadingMonomial(), b.leadingMonomial());
  });
  return minimal;
}

} // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators,
                                   const MonomialOrder& order) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : generators)
    if (!g.isZero()) gens.push_back(g);
  if (gens.empty()) return {};

  for (const Polynomial& g : gens) requireSameRing(gens[0], g);
  RingPtr ring = gens[0].ring();
  if (!(ring->order() == order)) {
    ring = ring->withOrder(order);
    for (Polynomial& g : gens) g = g.mapToRing(ring);
  }

  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens) {
    if (g.isConstant()) return {Polynomial::constant(ring, 1)};
    basis.push_back(g.monic());
  }

  using Pair = std::pair<size_t, size_t>;
  std::set<Pair> pending;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pending.insert({i, j});

  const MonomialOrder& ord = ring->order();
  while (!pending.empty()) {
    // Normal selection: smallest lcm first.
    auto chosen = pending.begin();
    Monomial bestLcm = Monomial::lcm(basis[chosen->first].leadingMonomial(),
                                     basis[chosen->second].leadingMonomial());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = Monomial::lcm(basis[it->first].leadingMonomial(),
                                 basis[it->second].leadingMonomial());
      if (ord.less(l, bestLcm)) {
        bestLcm = l;
        chosen = it;
      }
    }
    auto [i, j] = *chosen;
    pending.erase(chosen);

    const Monomial& lmi = basis[i].leadingMonomial();
    const Monomial& lmj = basis[j].leadingMonomial();
    if (Monomial::coprime(lmi, lmj)) continue;
    Monomial l = Monomial::lcm(lmi, lmj);
    bool chained = false;
    for (size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!basis[k].leadingMonomial().divides(l)) continue;
      Pair ik{std::min(i, k), std::max(i, k)};
      Pair jk{std::min(j, k), std::max(j, k)};
      if (!pending.count(ik) && !pending.count(jk)) chained = true;
    }
    if (chained) continue;

    Polynomial r = normalForm(sPolynomial(basis[i], basis[j]), basis);
    if (r.isZero()) continue;
    if (r.isConstant()) return {Polynomial::constant(ring, 1)};
    basis.push_back(r.monic());
    size_t n = basis.size() - 1;
    for (size_t k = 0; k < n; ++k) pending.insert({k, n});
  }

  return interreduce(std::move(basis), ord);
}

Ideal Ideal::fromGenerators(RingPtr ring, std::vector<Polynomial> generators) {
  std::vector<Polynomial> gens;
  for (Polynomial& g : generators) {
    if (g.isZero()) continue;
    if (!g.ring()->sameStructure(*ring))
      throw std::invalid_argument("Ideal: generator from a different ring");
    gens.push_back(std::move(g));
  }
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::fromGroebner(RingPtr ring, std::vector<Polynomial> basis) {
  Ideal I(std::move(ring), basis);
  std::call_once(I.cache_->once, [&basis, &I] { I.cache_->basis = std::move(basis); });
  return I;
}

Ideal Ideal::zeroIdeal(RingPtr ring) { return fromGroebner(std::move(ring), {}); }

Ideal Ideal::unitIdeal(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return fromGroebner(std::move(ring), {std::move(one)});
}

const std::vector<Polynomial>& Ideal::groebnerBasis() const {
  std::call_once(cache_->once, [&] { cache_->basis = buchberger(gens_, ring_->order()); });
  return cache_->basis;
}

bool Ideal::isUnitIdeal() const {
  const auto& gb = groebnerBasis();
  return gb.size() == 1 && gb[0].isConstant();
}

bool Ideal::contains(const Polynomial& f) const {
  if (!f.ring()->sameStructure(*ring_))
    throw std::invalid_argument("Ideal: membership query from a different ring");
  return normalForm(f, groebnerBasis()).isZero();
}

bool idealMembership(const Polynomial& f, const Ideal& I) { return I.contains(f); }

namespace {

void requireSameRing(const Ideal& I, const Ideal& J) {
  if (!I.ring()->sameStructure(*J.ring()))
    throw std::invalid_argument("Ideal: mixed-ring operands");
}

} // namespace

Ideal idealSum(const Ideal& I, const Ideal& J) {
  requireSameRing(I, J);
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal::fromGroebner(I.ring(), buchberger(gens, I.ring()->order()));
}

Ideal idealProduct(const Ideal& I, const Ideal& J) {
  requireSameRing(I, J);
  std::vector<Polynomial> gens;
  for (const Polynomial& f : I.generators())
    for (const Polynomial& g : J.generators()) gens.push_back(f * g);
  return Ideal::fromGroebner(I.ring(), buchberger(gens, I.ring()->order()));
}

namespace {

// Fresh elimination variable prepended to the ring; not expressible in the
// polynomial grammar, so it cannot collide with user variables.
constexpr const char* kElimVar = "@t";

RingPtr eliminationRing(const RingPtr& ring) {
  std::vector<std::string> vars;
  vars.reserve(static_cast<size_t>(ring->nvars()) + 1);
  vars.emplace_back(kElimVar);
  vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
  return PolyRing::make(ring->characteristic(), std::move(vars), MonomialOrder::elimination(1));
}

bool freeOfFirstVariable(const Polynomial& p) {
  for (const Term& t : p.terms())
    if (t.mono.exponent(0) > 0) return false;
  return true;
}

} // namespace

Ideal idealIntersection(const Ideal& I, const Ideal& J) {
  requireSameRing(I, J);
  if (I.isZeroIdeal() || J.isZeroIdeal()) return Ideal::zeroIdeal(I.ring());
  RingPtr ext = eliminationRing(I.ring());
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial oneMinusT = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : I.generators()) gens.push_back(t * f.mapToRing(ext));
  for (const Polynomial& g : J.generators()) gens.push_back(oneMinusT * g.mapToRing(ext));
  std::vector<Polynomial> gb = buchberger(gens, ext->order());
  std::vector<Polynomial> eliminated;
  for (const Polynomial& p : gb)
    if (freeOfFirstVariable(p)) eliminated.push_back(p.mapToRing(I.ring()));
  return Ideal::fromGroebner(I.ring(), buchberger(eliminated, I.ring()->order()));
}

Ideal idealColon(const Ideal& I, const Ideal& J) {
  requireSameRing(I, J);
  if (J.isZeroIdeal())
    throw std::invalid_argument("idealColon: colon by the zero ideal is degenerate");
  bool first = true;
  Ideal result = Ideal::zeroIdeal(I.ring());
  for (const Polynomial& g : J.generators()) {
    if (g.isZero()) continue;
    Ideal principal = Ideal::fromGenerators(I.ring(), {g});
    Ideal meet = idealIntersection(I, principal);
    std::vector<Polynomial> quotients;
    for (const Polynomial& h : meet.groebnerBasis()) quotients.push_back(divideExact(h, g));
    Ideal colonG = Ideal::fromGroebner(I.ring(), buchberger(quotients, I.ring()->order()));
    result = first ? colonG : idealIntersection(result, colonG);
    first = false;
  }
  return result;
}

bool idealEquality(const Ideal& I, const Ideal& J) {
  requireSameRing(I, J);
  const auto& a = I.groebnerBasis();
  const auto& b = J.groebnerBasis();
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::optional<int> krullDimension(const Ideal& I) {
  if (I.isUnitIdeal()) return std::nullopt;
  const int n = I.ring()->nvars();
  std::vector<Monomial> leads;
  for (const Polynomial& g : I.groebnerBasis()) leads.push_back(g.leadingMonomial());
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    // S independent iff no leading monomial is supported entirely inside S.
    bool independent = true;
    for (const Monomial& m : leads) {
      bool inside = true;
      for (int i = 0; i < n && inside; ++i)
        if (m.exponent(i) > 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

} // namespace closurelab
