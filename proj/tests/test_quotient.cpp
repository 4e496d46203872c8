#include <doctest.h>

#include "closurelab/quotient.hpp"
#include "oracles.hpp"

using namespace closurelab;

namespace {

struct X2Y {
  RingPtr A = PolyRing::make(0, {"x", "y"});
  Polynomial x = Polynomial::variable(A, 0);
  Polynomial y = Polynomial::variable(A, 1);
  QuotientRingPtr R = QuotientRing::make(A, Ideal::fromGenerators(A, {x * x * y}));
};

} // namespace

TEST_CASE("liftIdeal adds the defining generators") {
  X2Y f;
  Ideal lifted = liftIdeal({f.x + f.y}, *f.R);
  CHECK(idealEquality(lifted, Ideal::fromGenerators(f.A, {f.x + f.y, f.x * f.x * f.y})));
  CHECK(idealEquality(liftIdeal({}, *f.R), f.R->defining()));
  Ideal unit = liftIdeal({Polynomial::constant(f.A, 1)}, *f.R);
  CHECK(unit.isUnitIdeal());
}

TEST_CASE("quotient ring rejects the zero ring and computes dimension") {
  X2Y f;
  CHECK(f.R->dimension() == 1);
  CHECK(f.R->description() == "Q[x,y]/(x^2*y)");
  CHECK_THROWS_AS(QuotientRing::make(f.A, Ideal::unitIdeal(f.A)), std::invalid_argument);
  QuotientRingPtr free = QuotientRing::trivial(f.A);
  CHECK(free->dimension() == 2);
  CHECK(free->description() == "Q[x,y]");
}

TEST_CASE("membership answers are invariant under reduction mod the defining ideal") {
  X2Y f;
  QuotientIdeal I = QuotientIdeal::fromPolynomials(f.R, {f.x + f.y});
  SplitMix64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial p = oracles::randomPolynomial(rng, f.A, 4, 3);
    CHECK(I.contains(p) == I.contains(f.R->reduce(p)));
  }
}

TEST_CASE("quotient ideal arithmetic delegates to lifted representatives") {
  // In R = k[x,y]/(y^2): (x) * (x^n, y) contains x^n*y, lifting to (x^{n+1}, x*y, y^2)
  RingPtr A = PolyRing::make(0, {"x", "y"});
  Polynomial x = Polynomial::variable(A, 0);
  Polynomial y = Polynomial::variable(A, 1);
  QuotientRingPtr R = QuotientRing::make(A, Ideal::fromGenerators(A, {y * y}));
  for (int n = 1; n <= 4; ++n) {
    Polynomial xn = Polynomial::constant(A, 1);
    for (int k = 0; k < n; ++k) xn = xn * x;
    QuotientIdeal prod = idealProduct(QuotientIdeal::fromPolynomials(R, {x}),
                                      QuotientIdeal::fromPolynomials(R, {xn, y}));
    CHECK(idealEquality(prod.lifted(),
                        Ideal::fromGenerators(A, {xn * x, x * y, y * y})));
    CHECK(prod.contains(xn * y));
  }

  // (I :_R J) with J inside I is the unit ideal
  QuotientIdeal I = QuotientIdeal::fromPolynomials(R, {x, y});
  QuotientIdeal J = QuotientIdeal::fromPolynomials(R, {x * y});
  CHECK(idealColon(I, J).isUnitIdeal());

  // colon by the zero R-ideal is degenerate even when its lift is nonzero
  CHECK_THROWS_AS(idealColon(I, QuotientIdeal::zeroIdeal(R)), std::invalid_argument);
}

TEST_CASE("closure colon over k[x,y]/(x^2*y) picks up x^2") {
  X2Y f;
  // ((x+y)*(x^2) :_R (x^2)) contains x^2
  QuotientIdeal I = QuotientIdeal::fromPolynomials(f.R, {f.x + f.y});
  QuotientIdeal B = QuotientIdeal::fromPolynomials(f.R, {f.x * f.x});
  QuotientIdeal colon = idealColon(idealProduct(I, B), B);
  CHECK(colon.contains(f.x * f.x));
  CHECK_FALSE(I.contains(f.x * f.x));
}

TEST_CASE("zero and unit R-ideals") {
  X2Y f;
  QuotientIdeal zero = QuotientIdeal::zeroIdeal(f.R);
  CHECK(zero.isZeroIdeal());
  CHECK(zero.contains(f.x * f.x * f.y)); // the defining ideal is zero in R
  CHECK(zero.reducedGenerators().empty());
  CHECK(QuotientIdeal::unitIdeal(f.R).isUnitIdeal());
  // sum with the zero ideal is the identity
  QuotientIdeal I = QuotientIdeal::fromPolynomials(f.R, {f.x + f.y});
  CHECK(idealEquality(idealSum(I, zero), I));
}

TEST_CASE("dimension of quotients by R-ideals") {
  X2Y f;
  QuotientIdeal I = QuotientIdeal::fromPolynomials(f.R, {f.x + f.y});
  CHECK(*krullDimension(I) == 0); // R/(x+y) is a point: (x+y, x^2*y) has dim 0
  QuotientIdeal zero = QuotientIdeal::zeroIdeal(f.R);
  CHECK(*krullDimension(zero) == 1);
}
