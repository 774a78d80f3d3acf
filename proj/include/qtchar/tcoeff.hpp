#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>

namespace qtchar {

using BigInt = boost::multiprecision::cpp_int;

struct DivRem;

/// Element of the coefficient ring Z[t^{1/2}, t^{-1/2}].
///
/// Internally a sparse Laurent polynomial in the formal square root
/// T = t^{1/2}: the key of each term counts half-units, so key k stores the
/// coefficient of t^{k/2}.  Keeping exponents in half-units makes every
/// exponent computation integral.  No zero coefficients are ever stored.
class TCoeff {
 public:
  TCoeff() = default;  // zero

  static TCoeff zero() { return TCoeff{}; }
  static TCoeff one() { return term(1, 0); }
  static TCoeff term(BigInt c, int half_exp);
  // t^{half_exp/2}
  static TCoeff tPower(int half_exp) { return term(1, half_exp); }
  // t - t^{-1}
  static TCoeff tMinusTInverse();
  // t + t^{-1}
  static TCoeff tPlusTInverse();

  bool isZero() const { return terms_.empty(); }
  bool isOne() const;
  const std::map<int, BigInt>& terms() const { return terms_; }
  BigInt coefficient(int half_exp) const;
  BigInt constantTerm() const { return coefficient(0); }

  TCoeff& operator+=(const TCoeff& o);
  TCoeff& operator-=(const TCoeff& o);
  TCoeff operator-() const;
  friend TCoeff operator+(TCoeff a, const TCoeff& b) { return a += b; }
  friend TCoeff operator-(TCoeff a, const TCoeff& b) { return a -= b; }
  friend TCoeff operator*(const TCoeff& a, const TCoeff& b);

  bool operator==(const TCoeff& o) const { return terms_ == o.terms_; }
  bool operator!=(const TCoeff& o) const { return !(*this == o); }

  // The bar-involution on coefficients: t^{1/2} -> t^{-1/2}.
  TCoeff bar() const;

  // Substitute t^{1/2} = 1.
  BigInt evalAtOne() const;

  // Long division from the top degree.  Returns q, r with *this = q*d + r;
  // r is zero exactly when d divides *this over Z[t^{1/2}, t^{-1/2}].
  DivRem divmod(const TCoeff& d) const;
  std::optional<TCoeff> dividedBy(const TCoeff& d) const;

  // Sum of the terms with strictly negative half-exponent.
  TCoeff strictlyNegativePart() const;

  // Membership in t^{-1} Z[t^{-1}]: every half-exponent even and <= -2.
  bool inTInverseZ() const;

  std::string str() const;

 private:
  std::map<int, BigInt> terms_;  // half-exponent -> coefficient, no zeros

  void addTerm(int half_exp, const BigInt& c);
};

struct DivRem {
  TCoeff quotient;
  TCoeff remainder;
};

}  // namespace qtchar
