#include "qtchar/qchar.hpp"

#include <deque>
#include <set>
#include <stdexcept>
#include <vector>

namespace qtchar {

YMonomial aVariable(int rank, int i, int p) {
  if (i < 1 || i > rank - 1)
    throw std::invalid_argument("aVariable: color index out of range");
  if ((((p - i - 1) % 2) + 2) % 2 != 0)
    throw std::invalid_argument("aVariable: parity violation, need p == i+1 mod 2");
  YMonomial m = YMonomial::generator(rank, i, p - 1);
  m *= YMonomial::generator(rank, i, p + 1);
  if (i - 1 >= 1) m *= YMonomial::generator(rank, i - 1, p, -1);
  if (i + 1 <= rank - 1) m *= YMonomial::generator(rank, i + 1, p, -1);
  return m;
}

static long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

TorusElement fundamentalQCharExpand(int rank, int i, int p) {
  YMonomial::checkIndex(rank, i, p);
  const size_t expected = static_cast<size_t>(binomial(rank, i));
  std::set<YMonomial> closure;
  std::deque<YMonomial> queue;
  const YMonomial top = YMonomial::generator(rank, i, p);
  closure.insert(top);
  queue.push_back(top);
  while (!queue.empty()) {
    const YMonomial m = queue.front();
    queue.pop_front();
    for (const auto& f : m.factors()) {
      if (f.exp <= 0) continue;
      YMonomial next = m * aVariable(rank, f.i, f.p + 1).inverse();
      if (closure.insert(next).second) {
        if (closure.size() > expected)
          throw std::logic_error("fundamentalQCharExpand: closure overflow");
        queue.push_back(next);
      }
    }
  }
  TorusElement out(rank);
  for (const auto& m : closure) out.add(m, TCoeff::one());
  return out;
}

TorusElement fundamentalQCharTableau(int rank, int i, int p) {
  YMonomial::checkIndex(rank, i, p);
  auto box = [&](int a, int s) {
    YMonomial m = YMonomial::unit(rank);
    if (a <= rank - 1) m *= YMonomial::generator(rank, a, s + a - 1);
    if (a - 1 >= 1) m *= YMonomial::generator(rank, a - 1, s + a, -1);
    return m;
  };
  TorusElement out(rank);
  std::vector<int> rows(i);
  for (int k = 0; k < i; ++k) rows[k] = k + 1;
  while (true) {
    YMonomial m = YMonomial::unit(rank);
    for (int k = 0; k < i; ++k) m *= box(rows[k], p + i - 2 * (k + 1) + 1);
    out.add(m, TCoeff::one());
    // next strictly increasing i-tuple in [1, rank]
    int pos = i - 1;
    while (pos >= 0 && rows[pos] == rank - (i - 1 - pos)) --pos;
    if (pos < 0) break;
    ++rows[pos];
    for (int k = pos + 1; k < i; ++k) rows[k] = rows[k - 1] + 1;
  }
  return out;
}

TorusElement shiftSpectral(const TorusElement& x, int delta_p) {
  TorusElement r(x.rank());
  for (const auto& [m, c] : x.terms()) r.add(m.shifted(delta_p), c);
  return r;
}

}  // namespace qtchar
