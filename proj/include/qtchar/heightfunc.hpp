#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qtchar {

// Positive root alpha_{a,b} = e_a - e_b (1 <= a < b <= n) together with a
// level; (root, level) pairs enumerate one copy of R+ x Z.
struct RootLevel {
  int a;
  int b;
  int level;

  bool operator==(const RootLevel& o) const {
    return a == o.a && b == o.b && level == o.level;
  }
  bool operator!=(const RootLevel& o) const { return !(*this == o); }
  bool operator<(const RootLevel& o) const {
    if (level != o.level) return level < o.level;
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
  std::string str() const;
};

// Standard pairing (e_a - e_b, e_c - e_d); levels are ignored.
int rootPairing(const RootLevel& x, const RootLevel& y);

// Permutation of [1,n]; index 0 is unused padding.
using Permutation = std::vector<int>;

Permutation permInverse(const Permutation& p);

/// Height function on the colors 1..n-1: xi(1) odd and adjacent values
/// differ by exactly 1.  Increasing means xi(i) = i + 2c for a constant c.
class HeightFunction {
 public:
  HeightFunction(int rank, std::vector<int> values);

  static HeightFunction increasing(int rank, int offset = 0);

  int rank() const { return rank_; }
  int value(int i) const;
  const std::vector<int>& values() const { return values_; }

  bool isIncreasing() const;
  // The constant c with xi(i) = i + 2c; requires isIncreasing().
  int increasingOffset() const;

  bool operator==(const HeightFunction& o) const {
    return rank_ == o.rank_ && values_ == o.values_;
  }
  std::string str() const;

 private:
  int rank_;
  std::vector<int> values_;  // values_[i-1] = xi(i)
};

// Coxeter element tau_xi: the product of all simple transpositions ordered
// by nondecreasing xi, rightmost factor applied first.  Ties commute, so
// the stable order is immaterial.
Permutation coxeter(const HeightFunction& xi);

// The bijection between valid (i,p) pairs and (positive root, level) pairs.
// Defined by the unit-slope interval at p = xi(i) and propagated in steps
// of 2 through tau_xi, bumping the level at each sign change.
RootLevel phi(const HeightFunction& xi, int i, int p);
std::pair<int, int> phiInv(const HeightFunction& xi, const RootLevel& rl);

// Closed forms, valid only for increasing xi.
RootLevel phiClosedIncreasing(const HeightFunction& xi, int i, int p);
std::pair<int, int> phiInvClosedIncreasing(const HeightFunction& xi,
                                           const RootLevel& rl);

// N(Y_{i,p}, Y_{j,s}) computed through phi: the signed root pairing
// (-1)^{k+l+delta(p>=s)} (alpha, beta).  Independent of the choice of xi.
long long pairingViaRoots(const HeightFunction& xi, int i, int p, int j,
                          int s);

}  // namespace qtchar
