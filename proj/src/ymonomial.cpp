#include "qtchar/ymonomial.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qtchar {

YMonomial::YMonomial(int rank) : rank_(rank) {
  if (rank < 2) throw std::invalid_argument("YMonomial: rank must be >= 2");
}

void YMonomial::checkIndex(int rank, int i, int p) {
  if (i < 1 || i > rank - 1)
    throw std::invalid_argument("YMonomial: color index out of range");
  if (((p - i) % 2 + 2) % 2 != 0)
    throw std::invalid_argument("YMonomial: parity violation, need p == i mod 2");
}

YMonomial YMonomial::generator(int rank, int i, int p, int exp) {
  checkIndex(rank, i, p);
  YMonomial m(rank);
  if (exp != 0) m.exps_.emplace(std::make_pair(p, i), exp);
  return m;
}

bool YMonomial::isDominant() const {
  for (const auto& [k, e] : exps_) {
    if (e < 0) return false;
  }
  return true;
}

int YMonomial::exponent(int i, int p) const {
  auto it = exps_.find(std::make_pair(p, i));
  return it == exps_.end() ? 0 : it->second;
}

std::vector<YFactor> YMonomial::factors() const {
  std::vector<YFactor> out;
  out.reserve(exps_.size());
  for (const auto& [k, e] : exps_) out.push_back({k.second, k.first, e});
  return out;
}

std::vector<long long> YMonomial::colorWeights() const {
  std::vector<long long> w(rank_, 0);  // index 0 unused
  for (const auto& [k, e] : exps_) w[k.second] += e;
  return w;
}

YMonomial YMonomial::inverse() const {
  YMonomial r(rank_);
  for (const auto& [k, e] : exps_) r.exps_.emplace(k, -e);
  return r;
}

YMonomial YMonomial::pow(int e) const {
  YMonomial r(rank_);
  if (e != 0)
    for (const auto& [k, x] : exps_) r.exps_.emplace(k, x * e);
  return r;
}

YMonomial YMonomial::shifted(int delta_p) const {
  if (delta_p % 2 != 0)
    throw std::invalid_argument("YMonomial: spectral shift must be even");
  YMonomial r(rank_);
  for (const auto& [k, e] : exps_)
    r.exps_.emplace(std::make_pair(k.first + delta_p, k.second), e);
  return r;
}

YMonomial& YMonomial::operator*=(const YMonomial& o) {
  if (rank_ != o.rank_)
    throw std::invalid_argument("YMonomial: rank mismatch in product");
  for (const auto& [k, e] : o.exps_) {
    auto [it, inserted] = exps_.emplace(k, e);
    if (!inserted) {
      it->second += e;
      if (it->second == 0) exps_.erase(it);
    }
  }
  return *this;
}

bool YMonomial::operator<(const YMonomial& o) const {
  if (rank_ != o.rank_) return rank_ < o.rank_;
  return exps_ < o.exps_;
}

std::string YMonomial::str() const {
  if (exps_.empty()) return "1";
  std::ostringstream os;
  for (const auto& [k, e] : exps_) {
    os << "Y[" << k.second << "," << k.first << "]";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace qtchar
