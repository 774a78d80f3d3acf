#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "qtchar/pairing.hpp"
#include "qtchar/tcoeff.hpp"
#include "qtchar/ymonomial.hpp"

namespace qtchar {

/// Element of the quantum torus of rank n: a finite Z[t^{1/2},t^{-1/2}]-linear
/// combination of Y-monomials.  The multiplication is the twisted product
/// m * m' = t^{N(m,m')/2} (m m'); everything else is plain sparse arithmetic.
class TorusElement {
 public:
  explicit TorusElement(int rank);

  static TorusElement unit(int rank);
  static TorusElement monomial(const YMonomial& m, TCoeff c = TCoeff::one());

  int rank() const { return rank_; }
  bool isZero() const { return terms_.empty(); }
  size_t termCount() const { return terms_.size(); }
  const std::map<YMonomial, TCoeff>& terms() const { return terms_; }
  TCoeff coeff(const YMonomial& m) const;

  void add(const YMonomial& m, const TCoeff& c);

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  TorusElement operator-() const;
  friend TorusElement operator+(TorusElement a, const TorusElement& b) {
    return a += b;
  }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) {
    return a -= b;
  }
  // Scale by a coefficient.
  TorusElement scaled(const TCoeff& c) const;

  // Bar involution: t^{1/2} -> t^{-1/2} on coefficients, monomials fixed.
  // An anti-automorphism for the twisted product.
  TorusElement bar() const;

  // Substitute t^{1/2} = 1; the result lives in the commutative Laurent
  // polynomial ring and is still carried as a TorusElement with constant
  // coefficients.
  TorusElement evalAtOne() const;

  bool operator==(const TorusElement& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }
  bool operator!=(const TorusElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int rank_;
  std::map<YMonomial, TCoeff> terms_;  // no zero coefficients
};

// Twisted product; both routes agree, the parallel kernel fans the
// term-pair loop out with OpenMP and is kept separate as a checked kernel.
TorusElement starMul(const PairingTable& pt, const TorusElement& a,
                     const TorusElement& b);
TorusElement starMulParallel(const PairingTable& pt, const TorusElement& a,
                             const TorusElement& b);

// Commutative product (no twist).  This is multiplication in the
// specialized ring at t = 1.
TorusElement mulPlain(const TorusElement& a, const TorusElement& b);

// Graded t-commutator [x, y]_{t^{1/2}} = t^{1/2} x*y - t^{-1/2} y*x.
TorusElement tCommutator(const PairingTable& pt, const TorusElement& x,
                         const TorusElement& y);

nlohmann::json toJson(const YMonomial& m);
nlohmann::json toJson(const TCoeff& c);
nlohmann::json toJson(const TorusElement& x);
TorusElement torusElementFromJson(const nlohmann::json& j);

}  // namespace qtchar
