#include "qtchar/bosonic.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qtchar {

int cartanEntry(int rank, int i, int j) {
  if (i < 1 || i > rank - 1 || j < 1 || j > rank - 1)
    throw std::invalid_argument("cartanEntry: color out of range");
  if (i == j) return 2;
  return std::abs(i - j) == 1 ? -1 : 0;
}

TorusElement generatorImage(const Ring& ring, const HeightFunction& xi, int j,
                            int k) {
  if (ring.rank() != xi.rank())
    throw std::invalid_argument("generatorImage: rank mismatch");
  if (j < 1 || j > ring.rank() - 1)
    throw std::invalid_argument("generatorImage: color out of range");
  const auto [i, p] = phiInv(xi, RootLevel{j, j + 1, k});
  return ring.fundamental(i, p);
}

static TorusElement dividedExact(const TorusElement& x, const TCoeff& d) {
  TorusElement out(x.rank());
  for (const auto& [m, c] : x.terms()) {
    auto q = c.dividedBy(d);
    if (!q) throw std::logic_error("eRootImage: inexact division");
    out.add(m, *q);
  }
  return out;
}

TorusElement eRootImage(const Ring& ring, const HeightFunction& xi, int a,
                        int b, int k) {
  if (a < 1 || b > ring.rank() || a >= b)
    throw std::invalid_argument("eRootImage: not a positive root");
  if (b == a + 1) return generatorImage(ring, xi, a, k);
  const TorusElement head = generatorImage(ring, xi, a, k);
  const TorusElement tail = eRootImage(ring, xi, a + 1, b, k);
  return dividedExact(tCommutator(ring.pairing(), head, tail),
                      TCoeff::tMinusTInverse());
}

bool holdsR1(const Ring& ring, const TorusElement& ei, const TorusElement& ej,
             int i, int j) {
  const PairingTable& pt = ring.pairing();
  if (i == j) return true;
  if (std::abs(i - j) > 1) {
    return starMul(pt, ei, ej) == starMul(pt, ej, ei);
  }
  const TorusElement eiei = starMul(pt, ei, ei);
  TorusElement lhs = starMul(pt, eiei, ej);
  lhs -= starMul(pt, ei, starMul(pt, ej, ei)).scaled(TCoeff::tPlusTInverse());
  lhs += starMul(pt, ej, eiei);
  return lhs.isZero();
}

bool holdsR2(const Ring& ring, const TorusElement& ei, const TorusElement& ej,
             int cartan_rank, int i, int j, int k, int kprime) {
  if (k >= kprime) throw std::invalid_argument("holdsR2: needs k < k'");
  const PairingTable& pt = ring.pairing();
  const int c = cartanEntry(cartan_rank, i, j);
  const int sign = (k + kprime) % 2 == 0 ? 1 : -1;
  TorusElement rhs =
      starMul(pt, ej, ei).scaled(TCoeff::tPower(2 * sign * c));
  if (i == j && k == kprime - 1) {
    rhs += TorusElement::unit(ring.rank())
               .scaled(TCoeff::one() - TCoeff::tPower(-4));
  }
  return starMul(pt, ei, ej) == rhs;
}

bool checkR1(const Ring& ring, const HeightFunction& xi, int i, int j,
             int k) {
  return holdsR1(ring, generatorImage(ring, xi, i, k),
                 generatorImage(ring, xi, j, k), i, j);
}

bool checkR2(const Ring& ring, const HeightFunction& xi, int i, int j, int k,
             int kprime) {
  return holdsR2(ring, generatorImage(ring, xi, i, k),
                 generatorImage(ring, xi, j, kprime), ring.rank(), i, j, k,
                 kprime);
}

bool checkSplitting(const Ring& ring, const HeightFunction& xi, int a, int b,
                    int c, int k) {
  if (!(a < b && b < c))
    throw std::invalid_argument("checkSplitting: need a < b < c");
  const TorusElement lhs = eRootImage(ring, xi, a, c, k);
  const TorusElement comm = tCommutator(
      ring.pairing(), eRootImage(ring, xi, a, b, k), eRootImage(ring, xi, b, c, k));
  return lhs == dividedExact(comm, TCoeff::tMinusTInverse());
}

TorusElement upsilonImage(const Ring& dst, const HeightFunction& xitilde,
                          const IncreasingMap& nu, int i, int k) {
  if (dst.rank() != nu.codomainRank() || xitilde.rank() != nu.codomainRank())
    throw std::invalid_argument("upsilonImage: rank mismatch");
  if (i < 1 || i > nu.domainRank() - 1)
    throw std::invalid_argument("upsilonImage: color out of range");
  return eRootImage(dst, xitilde, nu.apply(i), nu.apply(i + 1), k);
}

}  // namespace qtchar
