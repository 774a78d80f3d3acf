#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtchar/pairing.hpp"
#include "qtchar/torus.hpp"
#include "qtchar/ymonomial.hpp"

namespace qtchar {

// Thrown when an element is not a Z[t^{1/2},t^{-1/2}]-combination of
// standard basis elements.
class NotInSpanError : public std::runtime_error {
 public:
  explicit NotInSpanError(const std::string& what)
      : std::runtime_error(what) {}
};

// Coordinates of an element in the standard basis.
struct StandardExpansion {
  int rank;
  std::map<YMonomial, TCoeff> coords;

  bool operator==(const StandardExpansion& o) const {
    return rank == o.rank && coords == o.coords;
  }
  std::string str() const;
};

// Nakajima partial order on Laurent monomials: lo <= hi iff hi * lo^{-1} is
// a product of A-variables with nonnegative exponents.  Decided by a weight
// budget through the inverse Cartan matrix followed by top-parameter
// peeling.
bool nakajimaLeq(const YMonomial& lo, const YMonomial& hi);

// A maximal element among the dominant monomials of the support, nullptr if
// there is none; ties resolved by the canonical monomial order.
const YMonomial* maximalDominant(const std::map<YMonomial, TCoeff>& terms);

/// Per-rank computation context.  Owns the pairing table and memoizes
/// fundamental characters, standard basis elements and canonical basis
/// elements.  All caches are guarded by one mutex; computations run outside
/// the lock, so concurrent duplicate work is possible but harmless.
class Ring {
 public:
  explicit Ring(int rank);

  int rank() const { return n_; }
  const PairingTable& pairing() const { return pt_; }

  // chi_{q,t}(L(Y_{i,p})); cached per color at a representative parameter
  // and translated by the even shift p - i.
  TorusElement fundamental(int i, int p) const;

  // Standard basis element E_t(m) for dominant m: the twisted product of
  // the fundamental characters of the factors of m, taken with spectral
  // parameters nonincreasing (colors ascending within equal parameters),
  // normalized by the inverse of the accumulated twist so that the
  // coefficient of m itself is exactly 1.
  TorusElement standard(const YMonomial& m) const;

  // Product form of the standard basis element for an explicitly ordered
  // factor list (i,p); the order must have nonincreasing parameters.
  TorusElement standardOrdered(
      const std::vector<std::pair<int, int>>& factors) const;

  // Greedy expansion in the standard basis: repeatedly strip the
  // Nakajima-maximal dominant monomial (ties broken by the canonical
  // monomial order).  Throws NotInSpanError when a nonzero residual has no
  // dominant monomial.
  StandardExpansion expandInStandard(const TorusElement& x) const;
  TorusElement fromStandard(const StandardExpansion& e) const;

  // Canonical basis element chi_{q,t}(L(m)): the unique bar-invariant
  // element of E_t(m) + sum of t^{-1}Z[t^{-1}] multiples of lower standard
  // elements, computed by the triangular fix-up loop.
  TorusElement canonical(const YMonomial& m) const;

  // One fix-up pass from an arbitrary bar-defective seed with top monomial
  // `top`; canonical(m) is canonicalize(m, standard(m)).  Exposed so the
  // idempotence of the characterization is testable.
  TorusElement canonicalize(const YMonomial& top, TorusElement seed) const;

  // Snapshot of every canonical element computed so far.
  std::vector<std::pair<YMonomial, TorusElement>> canonicalCache() const;

 private:
  int n_;
  PairingTable pt_;
  mutable std::mutex mu_;
  mutable std::map<int, TorusElement> fund_;  // color -> char at p = color
  mutable std::map<YMonomial, TorusElement> standard_;
  mutable std::map<YMonomial, TorusElement> canonical_;
};

// Bar-invariance, unit leading coefficient and strict triangularity with
// t^{-1}Z[t^{-1}] lower coordinates.
bool isCanonicalForm(const Ring& ring, const YMonomial& top,
                     const TorusElement& body);

}  // namespace qtchar
