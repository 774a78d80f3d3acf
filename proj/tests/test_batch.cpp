#include "qtchar/batch.hpp"

#include <algorithm>

#include "doctest.h"
#include "qtchar/io.hpp"

using namespace qtchar;

TEST_CASE("dominant monomial enumeration") {
  // rank 2, p in [-1,3]: parameters -1,1,3; pairs with repetition plus unit
  const std::vector<YMonomial> ms = dominantMonomials(2, -1, 3, 2);
  CHECK(ms.size() == 1 + 3 + 6);
  CHECK(std::find(ms.begin(), ms.end(), YMonomial::unit(2)) != ms.end());
  CHECK(std::find(ms.begin(), ms.end(), parseMonomial(2, "Y[1,1]Y[1,3]")) !=
        ms.end());
  CHECK(std::find(ms.begin(), ms.end(), parseMonomial(2, "Y[1,1]^2")) !=
        ms.end());
  CHECK(std::is_sorted(ms.begin(), ms.end()));
  for (const YMonomial& m : ms) CHECK(m.isDominant());

  // rank 3 keeps only parity-consistent parameters
  for (const YMonomial& m : dominantMonomials(3, -1, 2, 1))
    for (const auto& f : m.factors()) CHECK((f.p - f.i) % 2 == 0);
}

TEST_CASE("parallel canonical batch agrees with the serial one") {
  Ring ring(3);
  const std::vector<YMonomial> ms = dominantMonomials(3, -1, 3, 2);
  const auto serial = canonicalBatch(ring, ms);
  const auto parallel = canonicalBatchParallel(ring, ms);
  REQUIRE(serial.size() == parallel.size());
  for (size_t k = 0; k < serial.size(); ++k) {
    CHECK(serial[k].first == parallel[k].first);
    CHECK(serial[k].second == parallel[k].second);
  }
}

TEST_CASE("inflation verdicts over a batch") {
  Ring src(2);
  Ring dst(3);
  const HeightFunction xi = HeightFunction::increasing(2, 0);
  const HeightFunction xit = HeightFunction::increasing(3, 0);
  const std::vector<YMonomial> ms = dominantMonomials(2, -1, 3, 2);
  for (const IncreasingMap& nu : allIncreasingMaps(2, 3)) {
    const auto verdicts = inflationBatchParallel(src, dst, xi, xit, nu, ms);
    REQUIRE(verdicts.size() == ms.size());
    for (const auto& [m, ok] : verdicts) CHECK(ok);
  }
}
