#pragma once

#include <utility>
#include <vector>

#include "qtchar/basis.hpp"
#include "qtchar/heightfunc.hpp"
#include "qtchar/torus.hpp"
#include "qtchar/ymonomial.hpp"

namespace qtchar {

/// Strictly increasing function [1,n] -> [1,ntilde]; the combinatorial
/// datum of an inflation.
class IncreasingMap {
 public:
  IncreasingMap(int domain_rank, int codomain_rank, std::vector<int> values);

  // i -> (ntilde/n) i; requires n | ntilde.
  static IncreasingMap dilation(int domain_rank, int codomain_rank);

  int domainRank() const { return n_; }
  int codomainRank() const { return ntilde_; }
  int apply(int a) const;
  const std::vector<int>& values() const { return values_; }

  // alpha_{a,b} -> alpha_{nu(a),nu(b)}, level preserved.
  RootLevel mapRoot(const RootLevel& rl) const;

  // this after inner: [1,m] -> [1,ntilde].
  IncreasingMap composedWith(const IncreasingMap& inner) const;

  std::string str() const;

 private:
  int n_;
  int ntilde_;
  std::vector<int> values_;  // values_[a-1] = nu(a)
};

// All increasing maps [1,n] -> [1,ntilde], in lexicographic order.
std::vector<IncreasingMap> allIncreasingMaps(int domain_rank,
                                             int codomain_rank);

// Image of the variable index (i,p) under phi_{xitilde}^{-1} o nu_* o phi_xi.
// Both height functions must be increasing.
std::pair<int, int> psiVariable(const HeightFunction& xi,
                                const HeightFunction& xitilde,
                                const IncreasingMap& nu, int i, int p);

// Monoid extension of psiVariable to dominant monomials.
YMonomial psiDominant(const HeightFunction& xi, const HeightFunction& xitilde,
                      const IncreasingMap& nu, const YMonomial& m);

// Quantum inflation of a ring element: expand in the standard basis of the
// source, transport each coordinate monomial through psi, reassemble from
// the standard basis of the target.
TorusElement inflate(const Ring& src, const Ring& dst,
                     const HeightFunction& xi, const HeightFunction& xitilde,
                     const IncreasingMap& nu, const TorusElement& x);

// Whether the inflation sends the canonical basis element of m to the
// canonical basis element of psi(m).
bool inflationPreservesCanonical(const Ring& src, const Ring& dst,
                                 const HeightFunction& xi,
                                 const HeightFunction& xitilde,
                                 const IncreasingMap& nu, const YMonomial& m);

// Classical inflation at t = 1 for the dilation nu(a) = (ntilde/n) a: the
// ring homomorphism of classical character rings sending the fundamental
// class at (i,p) to the one at (di,dp).  The argument must be a classical
// element (constant coefficients); it is expanded greedily in products of
// classical fundamental characters and reassembled in the target.
TorusElement classicalDilationInflate(const Ring& src, const Ring& dst,
                                      const TorusElement& x);

}  // namespace qtchar
