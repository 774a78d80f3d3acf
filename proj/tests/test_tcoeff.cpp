#include "qtchar/tcoeff.hpp"

#include <random>

#include "doctest.h"

using namespace qtchar;

namespace {

TCoeff randomCoeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-6, 6), val(-9, 9);
  TCoeff c;
  const int k = nterms(rng);
  for (int j = 0; j < k; ++j) c += TCoeff::term(val(rng), expo(rng));
  return c;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  const TCoeff d = TCoeff::tMinusTInverse();
  const TCoeff sq = d * d;
  // (t - t^{-1})^2 = t^2 - 2 + t^{-2}
  CHECK(sq.coefficient(4) == 1);
  CHECK(sq.coefficient(0) == -2);
  CHECK(sq.coefficient(-4) == 1);
  CHECK(sq.terms().size() == 3);

  CHECK(TCoeff::one().isOne());
  CHECK((d - d).isZero());
  CHECK((-d + d).isZero());
  CHECK(TCoeff::term(0, 5).isZero());
}

TEST_CASE("bar involution") {
  const TCoeff h = TCoeff::tPower(1);  // t^{1/2}
  CHECK(h.bar() == TCoeff::tPower(-1));
  CHECK(h.bar().bar() == h);
  CHECK(TCoeff::tMinusTInverse().bar() == -TCoeff::tMinusTInverse());

  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const TCoeff a = randomCoeff(rng), b = randomCoeff(rng);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
    CHECK(a.bar().bar() == a);
  }
}

TEST_CASE("evaluation and constant term") {
  const TCoeff c = TCoeff::term(3, 2) + TCoeff::term(-1, 0) + TCoeff::term(4, -3);
  CHECK(c.evalAtOne() == 6);
  CHECK(c.constantTerm() == -1);
  CHECK(TCoeff::zero().evalAtOne() == 0);
}

TEST_CASE("exact Laurent division") {
  const TCoeff d = TCoeff::tMinusTInverse();
  const TCoeff cube = d * d * d;
  auto q = cube.dividedBy(d * d);
  REQUIRE(q.has_value());
  CHECK(*q == d);

  // units divide everything
  auto s = cube.dividedBy(TCoeff::tPower(-3));
  REQUIRE(s.has_value());
  CHECK(*s == cube * TCoeff::tPower(3));

  // 1 is not divisible by t - t^{-1}
  CHECK(!TCoeff::one().dividedBy(d).has_value());

  std::mt19937_64 rng(12);
  for (int it = 0; it < 300; ++it) {
    const TCoeff a = randomCoeff(rng);
    TCoeff b = randomCoeff(rng);
    if (b.isZero()) b = TCoeff::one();
    const auto dr = a.divmod(b);
    CHECK(a == dr.quotient * b + dr.remainder);
    const TCoeff prod = a * b;
    auto exact = prod.dividedBy(b);
    REQUIRE(exact.has_value());
    CHECK(*exact == a);
  }
}

TEST_CASE("negative part solves the bar defect equation") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 200; ++it) {
    // antisymmetric defect with zero constant term
    TCoeff p;
    std::uniform_int_distribution<int> expo(1, 6), val(-9, 9);
    for (int j = 0; j < 3; ++j) p += TCoeff::term(val(rng), expo(rng));
    const TCoeff d = p - p.bar();
    const TCoeff alpha = d.strictlyNegativePart();
    CHECK(alpha - alpha.bar() == d);
  }
}

TEST_CASE("membership in t^{-1}Z[t^{-1}]") {
  CHECK(TCoeff::tPower(-2).inTInverseZ());
  CHECK((TCoeff::tPower(-2) + TCoeff::tPower(-4)).inTInverseZ());
  CHECK((-TCoeff::tPower(-2)).inTInverseZ());
  CHECK(TCoeff::zero().inTInverseZ());
  CHECK(!TCoeff::one().inTInverseZ());
  CHECK(!(TCoeff::one() + TCoeff::tPower(-2)).inTInverseZ());
  CHECK(!TCoeff::tPower(-1).inTInverseZ());  // odd half power
  CHECK(!TCoeff::tPower(2).inTInverseZ());
}

TEST_CASE("printing") {
  CHECK(TCoeff::zero().str() == "0");
  CHECK(TCoeff::one().str() == "1");
  CHECK(TCoeff::tPower(2).str() == "t");
  CHECK(TCoeff::tPower(-2).str() == "t^-1");
  CHECK(TCoeff::tPower(1).str() == "t^(1/2)");
  CHECK(TCoeff::tMinusTInverse().str() == "t - t^-1");
}
