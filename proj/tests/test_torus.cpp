#include "qtchar/torus.hpp"

#include <random>

#include "doctest.h"
#include "qtchar/io.hpp"

using namespace qtchar;

namespace {

YMonomial randomMonomial(std::mt19937_64& rng, int rank) {
  std::uniform_int_distribution<int> nfac(0, 3), color(1, rank - 1),
      par(-2, 2), expo(-2, 2);
  YMonomial m = YMonomial::unit(rank);
  const int k = nfac(rng);
  for (int j = 0; j < k; ++j) {
    const int i = color(rng);
    const int p = i + 2 * par(rng);
    const int e = expo(rng);
    if (e != 0) m *= YMonomial::generator(rank, i, p, e);
  }
  return m;
}

TorusElement randomElement(std::mt19937_64& rng, int rank) {
  std::uniform_int_distribution<int> nterms(0, 3), expo(-4, 4), val(-5, 5);
  TorusElement x(rank);
  const int k = nterms(rng);
  for (int j = 0; j < k; ++j)
    x.add(randomMonomial(rng, rank), TCoeff::term(val(rng), expo(rng)));
  return x;
}

}  // namespace

TEST_CASE("monomial basics") {
  const int n = 3;
  const YMonomial a = YMonomial::generator(n, 1, 3);
  const YMonomial b = YMonomial::generator(n, 1, 1);
  CHECK((a * b) == (b * a));
  CHECK((a * b).str() == "Y[1,1]Y[1,3]");
  CHECK((a * a.inverse()).isUnit());
  CHECK(a.pow(3).exponent(1, 3) == 3);
  CHECK(a.shifted(2) == YMonomial::generator(n, 1, 5));
  CHECK(YMonomial::generator(n, 2, 2).isDominant());
  CHECK(!YMonomial::generator(n, 2, 2, -1).isDominant());

  CHECK_THROWS_AS(YMonomial::generator(n, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(YMonomial::generator(n, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(a.shifted(1), std::invalid_argument);
}

TEST_CASE("monomial parsing") {
  CHECK(parseMonomial(3, "Y[1,1]Y[2,2]^-1") ==
        YMonomial::generator(3, 1, 1) * YMonomial::generator(3, 2, 2, -1));
  CHECK(parseMonomial(2, "1").isUnit());
  CHECK(parseMonomial(2, " Y[1,1] * Y[1,3] ") ==
        parseMonomial(2, "Y[1,1]Y[1,3]"));
  CHECK_THROWS_AS(parseMonomial(2, "Z[1,1]"), std::invalid_argument);
  CHECK_THROWS_AS(parseMonomial(2, "Y[1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(parseMonomial(2, ""), std::invalid_argument);
}

TEST_CASE("twisted product on generators") {
  {
    PairingTable pt(2);
    const TorusElement prod =
        starMul(pt, TorusElement::monomial(YMonomial::generator(2, 1, 3)),
                TorusElement::monomial(YMonomial::generator(2, 1, 1)));
    const YMonomial m = parseMonomial(2, "Y[1,1]Y[1,3]");
    CHECK(prod.termCount() == 1);
    CHECK(prod.coeff(m) == TCoeff::tPower(2));  // t * (Y11 Y13)

    const TorusElement rev =
        starMul(pt, TorusElement::monomial(YMonomial::generator(2, 1, 1)),
                TorusElement::monomial(YMonomial::generator(2, 1, 3)));
    CHECK(rev.coeff(m) == TCoeff::tPower(-2));
  }
  {
    PairingTable pt(3);
    const TorusElement prod =
        starMul(pt, TorusElement::monomial(YMonomial::generator(3, 1, 3)),
                TorusElement::monomial(YMonomial::generator(3, 2, 2)));
    CHECK(prod.coeff(parseMonomial(3, "Y[1,3]Y[2,2]")) == TCoeff::tPower(-1));
  }
}

TEST_CASE("star product properties") {
  std::mt19937_64 rng(21);
  for (int rank : {2, 3, 4}) {
    PairingTable pt(rank);
    for (int it = 0; it < 40; ++it) {
      const TorusElement x = randomElement(rng, rank);
      const TorusElement y = randomElement(rng, rank);
      const TorusElement z = randomElement(rng, rank);
      CHECK(starMul(pt, starMul(pt, x, y), z) ==
            starMul(pt, x, starMul(pt, y, z)));
      CHECK(starMul(pt, x, y).bar() == starMul(pt, y.bar(), x.bar()));
      CHECK(starMul(pt, x, y).evalAtOne() ==
            mulPlain(x.evalAtOne(), y.evalAtOne()));
      CHECK(starMulParallel(pt, x, y) == starMul(pt, x, y));
    }
  }
}

TEST_CASE("unit and scaling") {
  PairingTable pt(3);
  std::mt19937_64 rng(22);
  const TorusElement x = randomElement(rng, 3);
  CHECK(starMul(pt, TorusElement::unit(3), x) == x);
  CHECK(starMul(pt, x, TorusElement::unit(3)) == x);
  CHECK(x.scaled(TCoeff::zero()).isZero());
  CHECK((x - x).isZero());
}

TEST_CASE("json round trip is bit exact") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 60; ++it) {
    const TorusElement x = randomElement(rng, 4);
    const nlohmann::json j = toJson(x);
    const TorusElement back = torusElementFromJson(j);
    CHECK(back == x);
    CHECK(toJson(back).dump() == j.dump());
  }
  // big integers survive the string encoding
  TorusElement big(2);
  BigInt huge(1);
  for (int k = 0; k < 30; ++k) huge *= 1000003;
  big.add(YMonomial::generator(2, 1, 1), TCoeff::term(huge, -7));
  CHECK(torusElementFromJson(toJson(big)) == big);
}
