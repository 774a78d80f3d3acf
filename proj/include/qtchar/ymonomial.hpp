#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qtchar {

// One exponent entry of a Y-monomial.
struct YFactor {
  int i;    // color, 1 <= i <= rank-1
  int p;    // spectral parameter, p == i (mod 2)
  int exp;  // nonzero
};

/// Laurent monomial in the variables Y_{i,p}, (i,p) in the parity-constrained
/// index set of rank n: 1 <= i <= n-1 and p == i (mod 2).
///
/// Exponents are keyed by (p, i); iterating the map gives the canonical
/// order (ascending p, then ascending i), which doubles as the serialization
/// order and as the deterministic tie-break order everywhere.
class YMonomial {
 public:
  explicit YMonomial(int rank);

  static YMonomial unit(int rank) { return YMonomial(rank); }
  static YMonomial generator(int rank, int i, int p, int exp = 1);

  int rank() const { return rank_; }
  bool isUnit() const { return exps_.empty(); }
  // All exponents nonnegative.
  bool isDominant() const;
  int exponent(int i, int p) const;
  const std::map<std::pair<int, int>, int>& entries() const { return exps_; }

  // Factors in canonical order.
  std::vector<YFactor> factors() const;
  // Total exponent per color, indexed 1..rank-1.
  std::vector<long long> colorWeights() const;
  size_t supportSize() const { return exps_.size(); }

  YMonomial inverse() const;
  YMonomial pow(int e) const;
  // Shift every spectral parameter by delta_p (must be even).
  YMonomial shifted(int delta_p) const;

  YMonomial& operator*=(const YMonomial& o);
  friend YMonomial operator*(YMonomial a, const YMonomial& b) {
    return a *= b;
  }

  bool operator==(const YMonomial& o) const {
    return rank_ == o.rank_ && exps_ == o.exps_;
  }
  bool operator!=(const YMonomial& o) const { return !(*this == o); }
  // Canonical total order; used for map keys and tie-breaks.
  bool operator<(const YMonomial& o) const;

  std::string str() const;

  static void checkIndex(int rank, int i, int p);

 private:
  int rank_;
  std::map<std::pair<int, int>, int> exps_;  // (p, i) -> exponent, no zeros
};

}  // namespace qtchar
