#pragma once

#include <mutex>
#include <vector>

#include "qtchar/ymonomial.hpp"

namespace qtchar {

/// Inverse of the deformed Cartan matrix of type A_{rank-1} and the
/// skew-symmetric pairing N built from it.
///
/// With C(z) = (z + z^{-1}) Id - N, N the adjacency matrix, the inverse
/// expands as C~(z) = sum_{r>=0} S_r z^{r+1} where S_0 = Id, S_1 = N and
/// S_r = N S_{r-1} - S_{r-2}.  The table grows lazily and is memoized;
/// entries stay small (Chebyshev-type recurrence, spectral radius < 2).
class PairingTable {
 public:
  explicit PairingTable(int rank);

  int rank() const { return n_; }

  // Coefficient of z^k in C~_{i,j}(z); zero for k <= 0.
  long long ctilde(int i, int j, int k) const;

  // N_{i,j}(k) = c~_{i,j}(k-1) - c~_{i,j}(k+1) - c~_{i,j}(-k-1) + c~_{i,j}(-k+1).
  long long pairingSymbol(int i, int j, int k) const;

  // Closed form of N_{i,j}(k) as an alternating sum of congruence
  // indicators mod 2*rank.  Only valid for k >= delta_{i,j}; throws below.
  long long pairingSymbolClosed(int i, int j, int k) const;

  // N(Y_{i,p}, Y_{j,s}) = N_{i,j}(p - s).
  long long pairing(int i, int p, int j, int s) const;

  // Bilinear extension to Laurent monomials.
  long long pairing(const YMonomial& a, const YMonomial& b) const;

 private:
  int n_;
  mutable std::mutex mu_;
  // series_[r] is S_r, a (n-1) x (n-1) matrix stored row-major.
  mutable std::vector<std::vector<long long>> series_;

  void extendLocked(size_t order) const;
};

}  // namespace qtchar
