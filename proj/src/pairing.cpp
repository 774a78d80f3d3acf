#include "qtchar/pairing.hpp"

#include <stdexcept>

namespace qtchar {

PairingTable::PairingTable(int rank) : n_(rank) {
  if (rank < 2) throw std::invalid_argument("PairingTable: rank must be >= 2");
  const int m = n_ - 1;
  std::vector<long long> id(m * m, 0), adj(m * m, 0);
  for (int a = 0; a < m; ++a) {
    id[a * m + a] = 1;
    if (a + 1 < m) {
      adj[a * m + a + 1] = 1;
      adj[(a + 1) * m + a] = 1;
    }
  }
  series_.push_back(std::move(id));
  series_.push_back(std::move(adj));
}

void PairingTable::extendLocked(size_t order) const {
  const int m = n_ - 1;
  while (series_.size() <= order) {
    const auto& prev = series_[series_.size() - 1];
    const auto& prev2 = series_[series_.size() - 2];
    std::vector<long long> next(m * m, 0);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        long long v = -prev2[a * m + b];
        if (a > 0) v += prev[(a - 1) * m + b];
        if (a + 1 < m) v += prev[(a + 1) * m + b];
        next[a * m + b] = v;
      }
    series_.push_back(std::move(next));
  }
}

long long PairingTable::ctilde(int i, int j, int k) const {
  if (i < 1 || i > n_ - 1 || j < 1 || j > n_ - 1)
    throw std::invalid_argument("PairingTable: color index out of range");
  if (k <= 0) return 0;
  std::lock_guard<std::mutex> lock(mu_);
  extendLocked(static_cast<size_t>(k) - 1);
  return series_[k - 1][(i - 1) * (n_ - 1) + (j - 1)];
}

long long PairingTable::pairingSymbol(int i, int j, int k) const {
  return ctilde(i, j, k - 1) - ctilde(i, j, k + 1) - ctilde(i, j, -k - 1) +
         ctilde(i, j, -k + 1);
}

long long PairingTable::pairingSymbolClosed(int i, int j, int k) const {
  if (i < 1 || i > n_ - 1 || j < 1 || j > n_ - 1)
    throw std::invalid_argument("PairingTable: color index out of range");
  if (k < (i == j ? 1 : 0))
    throw std::invalid_argument(
        "PairingTable: closed form needs k >= delta_{i,j}");
  const int mod = 2 * n_;
  auto ind = [&](int x) {
    return (((k - x) % mod) + mod) % mod == 0 ? 1LL : 0LL;
  };
  return ind(i + j) - ind(i - j) - ind(j - i) + ind(-i - j);
}

long long PairingTable::pairing(int i, int p, int j, int s) const {
  YMonomial::checkIndex(n_, i, p);
  YMonomial::checkIndex(n_, j, s);
  return pairingSymbol(i, j, p - s);
}

long long PairingTable::pairing(const YMonomial& a, const YMonomial& b) const {
  if (a.rank() != n_ || b.rank() != n_)
    throw std::invalid_argument("PairingTable: rank mismatch");
  long long total = 0;
  for (const auto& [ka, ea] : a.entries())
    for (const auto& [kb, eb] : b.entries())
      total += static_cast<long long>(ea) * eb *
               pairingSymbol(ka.second, kb.second, ka.first - kb.first);
  return total;
}

}  // namespace qtchar
