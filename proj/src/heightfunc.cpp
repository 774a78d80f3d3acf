#include "qtchar/heightfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qtchar/ymonomial.hpp"

namespace qtchar {

std::string RootLevel::str() const {
  std::ostringstream os;
  os << "(a[" << a << "," << b << "], " << level << ")";
  return os.str();
}

int rootPairing(const RootLevel& x, const RootLevel& y) {
  auto d = [](int u, int v) { return u == v ? 1 : 0; };
  return d(x.a, y.a) - d(x.a, y.b) - d(x.b, y.a) + d(x.b, y.b);
}

Permutation permInverse(const Permutation& p) {
  Permutation q(p.size(), 0);
  for (size_t x = 1; x < p.size(); ++x) q[p[x]] = static_cast<int>(x);
  return q;
}

HeightFunction::HeightFunction(int rank, std::vector<int> values)
    : rank_(rank), values_(std::move(values)) {
  if (rank < 2) throw std::invalid_argument("HeightFunction: rank must be >= 2");
  if (values_.size() != static_cast<size_t>(rank - 1))
    throw std::invalid_argument("HeightFunction: need rank-1 values");
  if (((values_[0] % 2) + 2) % 2 != 1)
    throw std::invalid_argument("HeightFunction: xi(1) must be odd");
  for (int i = 0; i + 1 < rank - 1; ++i)
    if (std::abs(values_[i] - values_[i + 1]) != 1)
      throw std::invalid_argument(
          "HeightFunction: adjacent values must differ by 1");
}

HeightFunction HeightFunction::increasing(int rank, int offset) {
  std::vector<int> v(rank - 1);
  for (int i = 1; i <= rank - 1; ++i) v[i - 1] = i + 2 * offset;
  return HeightFunction(rank, std::move(v));
}

int HeightFunction::value(int i) const {
  if (i < 1 || i > rank_ - 1)
    throw std::invalid_argument("HeightFunction: color out of range");
  return values_[i - 1];
}

bool HeightFunction::isIncreasing() const {
  for (int i = 0; i + 1 < rank_ - 1; ++i)
    if (values_[i + 1] != values_[i] + 1) return false;
  return true;
}

int HeightFunction::increasingOffset() const {
  if (!isIncreasing())
    throw std::logic_error("HeightFunction: not increasing");
  return (values_[0] - 1) / 2;
}

std::string HeightFunction::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rank_ - 1; ++i) os << (i ? "," : "") << values_[i];
  os << ")";
  return os.str();
}

Permutation coxeter(const HeightFunction& xi) {
  const int n = xi.rank();
  std::vector<int> order(n - 1);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return xi.value(a) < xi.value(b); });
  Permutation perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  // rightmost factor of the word acts first
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int i = *it;
    for (int x = 1; x <= n; ++x) {
      if (perm[x] == i)
        perm[x] = i + 1;
      else if (perm[x] == i + 1)
        perm[x] = i;
    }
  }
  return perm;
}

namespace {

// Signed root: (a, b) with a != b stands for e_a - e_b.
struct SignedRoot {
  int a, b;
};

SignedRoot applyPerm(const Permutation& perm, SignedRoot r) {
  return {perm[r.a], perm[r.b]};
}

RootLevel basePoint(const HeightFunction& xi, int i) {
  const int n = xi.rank();
  int lo = i, hi = i;
  while (lo - 1 >= 1 && xi.value(lo - 1) - xi.value(i) == i - (lo - 1)) --lo;
  while (hi + 1 <= n - 1 && xi.value(hi + 1) - xi.value(i) == (hi + 1) - i)
    ++hi;
  return {lo, hi + 1, 0};
}

RootLevel stepOnce(const Permutation& perm, RootLevel rl, int dir) {
  SignedRoot s = applyPerm(perm, {rl.a, rl.b});
  if (s.a < s.b) return {s.a, s.b, rl.level};
  return {s.b, s.a, rl.level + dir};
}

void checkRoot(int rank, const RootLevel& rl) {
  if (rl.a < 1 || rl.b > rank || rl.a >= rl.b)
    throw std::invalid_argument("phi: not a positive root");
}

}  // namespace

RootLevel phi(const HeightFunction& xi, int i, int p) {
  YMonomial::checkIndex(xi.rank(), i, p);
  RootLevel rl = basePoint(xi, i);
  const int steps = (p - xi.value(i)) / 2;
  if (steps == 0) return rl;
  const Permutation tau = coxeter(xi);
  const Permutation use = steps > 0 ? tau : permInverse(tau);
  const int dir = steps > 0 ? 1 : -1;
  for (int k = 0; k < std::abs(steps); ++k) rl = stepOnce(use, rl, dir);
  return rl;
}

std::pair<int, int> phiInv(const HeightFunction& xi, const RootLevel& rl) {
  const int n = xi.rank();
  checkRoot(n, rl);
  if (xi.isIncreasing()) return phiInvClosedIncreasing(xi, rl);
  // The level along each phi(i, .) orbit is monotone in p and moves by one
  // at least once per full Coxeter cycle, so a window of n*(|level|+2)
  // steps in each direction is guaranteed to contain the preimage.
  const Permutation tau = coxeter(xi);
  const Permutation tau_inv = permInverse(tau);
  const int window = n * (std::abs(rl.level) + 2);
  for (int i = 1; i <= n - 1; ++i) {
    RootLevel up = basePoint(xi, i);
    RootLevel down = up;
    if (up == rl) return {i, xi.value(i)};
    for (int k = 1; k <= window; ++k) {
      up = stepOnce(tau, up, 1);
      if (up == rl) return {i, xi.value(i) + 2 * k};
      down = stepOnce(tau_inv, down, -1);
      if (down == rl) return {i, xi.value(i) - 2 * k};
    }
  }
  throw std::logic_error("phiInv: preimage not found in search window");
}

namespace {

long long fdiv(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// p = k*n + r with r in [1, n]
std::pair<int, int> euclid(int p, int n) {
  const int k = static_cast<int>(fdiv(p - 1, n));
  return {k, p - k * n};
}

}  // namespace

RootLevel phiClosedIncreasing(const HeightFunction& xi, int i, int p) {
  if (!xi.isIncreasing())
    throw std::invalid_argument("phiClosedIncreasing: xi not increasing");
  YMonomial::checkIndex(xi.rank(), i, p);
  const int n = xi.rank();
  const int q = (p - xi.value(i)) / 2;
  const auto [k, r] = euclid(q, n);
  const auto [k2, r2] = euclid(q + i, n);
  (void)k2;
  if (r < r2) return {r, r2, 2 * k + 1};
  return {r2, r, 2 * k + 2};
}

std::pair<int, int> phiInvClosedIncreasing(const HeightFunction& xi,
                                           const RootLevel& rl) {
  if (!xi.isIncreasing())
    throw std::invalid_argument("phiInvClosedIncreasing: xi not increasing");
  const int n = xi.rank();
  checkRoot(n, rl);
  const int m = rl.level;
  int i, p;
  if ((m % 2 + 2) % 2 == 1) {  // m = 2k+1
    const int k = (m - 1) / 2;
    i = rl.b - rl.a;
    p = xi.value(i) + 2 * (k * n + rl.a);
  } else {  // m = 2k+2
    const int k = (m - 2) / 2;
    i = n + rl.a - rl.b;
    p = xi.value(i) + 2 * (k * n + rl.b);
  }
  return {i, p};
}

long long pairingViaRoots(const HeightFunction& xi, int i, int p, int j,
                          int s) {
  if (i == j && p == s) return 0;
  const RootLevel x = phi(xi, i, p);
  const RootLevel y = phi(xi, j, s);
  const int sign_exp = x.level + y.level + (p >= s ? 1 : 0);
  const int sign = (sign_exp % 2 + 2) % 2 == 0 ? 1 : -1;
  return sign * rootPairing(x, y);
}

}  // namespace qtchar
