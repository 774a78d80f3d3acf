#include "qtchar/pairing.hpp"

#include <random>

#include "doctest.h"
#include "qtchar/heightfunc.hpp"

using namespace qtchar;

TEST_CASE("inverse series coefficients") {
  // rank 2: C~_{1,1}(z) = z - z^3 + z^5 - ...
  PairingTable pt2(2);
  CHECK(pt2.ctilde(1, 1, 1) == 1);
  CHECK(pt2.ctilde(1, 1, 2) == 0);
  CHECK(pt2.ctilde(1, 1, 3) == -1);
  CHECK(pt2.ctilde(1, 1, 5) == 1);
  CHECK(pt2.ctilde(1, 1, 0) == 0);
  CHECK(pt2.ctilde(1, 1, -3) == 0);

  PairingTable pt3(3);
  CHECK(pt3.ctilde(1, 1, 1) == 1);
  CHECK(pt3.ctilde(1, 2, 1) == 0);
  CHECK(pt3.ctilde(1, 2, 2) == 1);
  CHECK(pt3.ctilde(1, 1, 3) == 0);  // adjacency squared equals identity
}

TEST_CASE("pairing values") {
  PairingTable pt2(2);
  CHECK(pt2.pairingSymbol(1, 1, 0) == 0);
  CHECK(pt2.pairingSymbol(1, 1, 2) == 2);
  CHECK(pt2.pairingSymbol(1, 1, 4) == -2);
  PairingTable pt3(3);
  CHECK(pt3.pairingSymbol(1, 2, 1) == -1);
  CHECK(pt3.pairingSymbol(1, 1, 2) == 1);
}

TEST_CASE("skew symmetry") {
  for (int n : {2, 3, 4, 5}) {
    PairingTable pt(n);
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j)
        for (int k = -12; k <= 12; ++k)
          CHECK(pt.pairingSymbol(i, j, k) == -pt.pairingSymbol(j, i, -k));
  }
}

TEST_CASE("series route matches the congruence formula") {
  for (int n : {2, 3, 4, 5}) {
    PairingTable pt(n);
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j)
        for (int k = (i == j ? 1 : 0); k <= 12; ++k)
          CHECK(pt.pairingSymbol(i, j, k) == pt.pairingSymbolClosed(i, j, k));
  }
}

TEST_CASE("congruence formula rejects small separations") {
  PairingTable pt(3);
  CHECK_THROWS_AS(pt.pairingSymbolClosed(1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(pt.pairingSymbolClosed(1, 2, -1), std::invalid_argument);
  CHECK_NOTHROW(pt.pairingSymbolClosed(1, 2, 0));
}

TEST_CASE("bilinearity on monomials") {
  PairingTable pt(3);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> color(1, 2), par(-2, 2), expo(-2, 2);
  auto rnd = [&] {
    YMonomial m = YMonomial::unit(3);
    for (int j = 0; j < 2; ++j) {
      const int i = color(rng);
      const int e = expo(rng);
      if (e != 0) m *= YMonomial::generator(3, i, i + 2 * par(rng), e);
    }
    return m;
  };
  for (int it = 0; it < 100; ++it) {
    const YMonomial a = rnd(), b = rnd(), c = rnd();
    CHECK(pt.pairing(a * b, c) == pt.pairing(a, c) + pt.pairing(b, c));
    CHECK(pt.pairing(a, b * c) == pt.pairing(a, b) + pt.pairing(a, c));
    CHECK(pt.pairing(a, b) == -pt.pairing(b, a));
  }
}

TEST_CASE("pairing through root data") {
  // the signed root pairing reproduces N and is independent of the height
  // function; additionally N vanishes when p >= s and the level drops
  for (int n : {3, 4}) {
    PairingTable pt(n);
    std::vector<HeightFunction> xis;
    xis.push_back(HeightFunction::increasing(n, 0));
    {
      std::vector<int> v(n - 1);
      for (int i = 1; i <= n - 1; ++i) v[i - 1] = (i % 2 == 1) ? 1 : 0;
      xis.emplace_back(n, v);  // zigzag
    }
    for (const auto& xi : xis)
      for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j)
          for (int dp = -3; dp <= 3; ++dp)
            for (int ds = -3; ds <= 3; ++ds) {
              const int p = i + 2 * dp, s = j + 2 * ds;
              if (i == j && p == s) continue;
              CHECK(pairingViaRoots(xi, i, p, j, s) ==
                    pt.pairing(i, p, j, s));
              const RootLevel x = phi(xi, i, p), y = phi(xi, j, s);
              if (p >= s && x.level < y.level)
                CHECK(pt.pairing(i, p, j, s) == 0);
            }
  }
}
